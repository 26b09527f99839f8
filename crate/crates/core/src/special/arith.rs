use num_complex::Complex64;

use super::ComplexSum;

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Primes p ≤ limit by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    true
}

/// Returns the prime p if n = p^m with m ≥ 1.
pub fn is_prime_power(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Möbius function μ(n); μ(1) = 1.
pub fn mobius(n: u64) -> i32 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// von Mangoldt Λ(n): log p when n = p^m, otherwise 0.
pub fn mangoldt(n: u64) -> f64 {
    assert!(n >= 1, "mangoldt is defined for n >= 1");
    is_prime_power(n).map_or(0.0, |p| (p as f64).ln())
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// σ_s(n) = Σ_{d | n} d^s.
pub fn sigma_power(n: u64, s: Complex64) -> Complex64 {
    assert!(n >= 1, "sigma_power is defined for n >= 1");
    divisors(n)
        .into_iter()
        .map(|d| (s * (d as f64).ln()).exp())
        .collect::<ComplexSum>()
        .value()
}
