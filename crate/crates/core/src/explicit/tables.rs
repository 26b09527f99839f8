use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::special::CompensatedSum;
use crate::{Error, Result};

/// Sieved arithmetic tables up to a fixed limit.
#[derive(Debug, Clone)]
pub struct PrimeTables {
    limit: u64,
    primes: Vec<u64>,
    mangoldt: Vec<f64>,
    mobius: Vec<i8>,
    /// π(n), ψ(n) and M(n) at each integer n.
    pi: Vec<u32>,
    psi: Vec<f64>,
    mertens: Vec<i64>,
}

/// ⌊x^{1/n}⌋ for x ≥ 1, corrected against floating-point rounding.
pub(crate) fn floor_root(x: f64, n: u32) -> u64 {
    let mut r = x.powf(1.0 / n as f64).floor() as u64;
    while r > 0 && (r as f64).powi(n as i32) > x {
        r -= 1;
    }
    while ((r + 1) as f64).powi(n as i32) <= x {
        r += 1;
    }
    r
}

impl PrimeTables {
    pub fn new(limit: u64) -> Self {
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes = Vec::new();
        let mut mobius = vec![0i8; n + 1];
        let mut mangoldt = vec![0.0; n + 1];
        if n >= 1 {
            mobius[1] = 1;
        }
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
            }
            let p = spf[i] as usize;
            let m = i / p;
            mobius[i] = if m % p == 0 { 0 } else { -mobius[m] };
            // i is a power of p iff m has no other prime factor
            let mut r = m;
            while r % p == 0 {
                r /= p;
            }
            if r == 1 {
                mangoldt[i] = (p as f64).ln();
            }
            for &q in &primes {
                let q = q as usize;
                if q > p || i * q > n {
                    break;
                }
                spf[i * q] = q as u32;
            }
        }
        let mut pi = vec![0u32; n + 1];
        let mut psi = vec![0.0; n + 1];
        let mut mertens = vec![0i64; n + 1];
        let mut acc = CompensatedSum::new();
        for i in 1..=n {
            pi[i] = pi[i - 1] + u32::from(spf[i] as usize == i && i > 1);
            acc.add(mangoldt[i]);
            psi[i] = acc.value();
            mertens[i] = mertens[i - 1] + mobius[i] as i64;
        }
        PrimeTables { limit, primes, mangoldt, mobius, pi, psi, mertens }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Λ(n) for n ≤ limit.
    pub fn mangoldt(&self, n: u64) -> f64 {
        self.mangoldt[n as usize]
    }

    /// μ(n) for 1 ≤ n ≤ limit.
    pub fn mobius(&self, n: u64) -> i8 {
        self.mobius[n as usize]
    }

    fn index(&self, x: f64) -> Result<usize> {
        if !(x >= 0.0) {
            return Err(Error::Domain(format!("step functions need x ≥ 0, got {x}")));
        }
        if x.floor() > self.limit as f64 {
            return Err(Error::BeyondSieve { x, limit: self.limit });
        }
        Ok(x.floor() as usize)
    }

    /// ψ(x) = Σ_{n≤x} Λ(n).
    pub fn chebyshev_psi(&self, x: f64) -> Result<f64> {
        self.index(x).map(|i| self.psi[i])
    }

    /// M(x) = Σ_{n≤x} μ(n).
    pub fn mertens(&self, x: f64) -> Result<i64> {
        self.index(x).map(|i| self.mertens[i])
    }

    /// π(x).
    pub fn pi_count(&self, x: f64) -> Result<u64> {
        self.index(x).map(|i| self.pi[i] as u64)
    }

    /// Π(x) = Σ_{n≥1} π(x^{1/n})/n, exactly.
    pub fn pi_star_exact(&self, x: f64) -> Result<BigRational> {
        let mut total = BigRational::zero();
        let mut n = 1u32;
        loop {
            let root = if n == 1 { x.floor() as u64 } else { floor_root(x, n) };
            if root < 2 {
                break;
            }
            let count = self.pi_count(root as f64)?;
            total += BigRational::new(BigInt::from(count), BigInt::from(n));
            n += 1;
        }
        Ok(total)
    }

    /// Π(x) as binary64; at a jump the average of both sides.
    pub fn pi_star(&self, x: f64) -> Result<f64> {
        use num_traits::ToPrimitive;
        let right = self.pi_star_exact(x)?.to_f64().unwrap_or(f64::NAN);
        if x == x.floor() && self.jump_at(x) {
            let left = self.pi_star_exact(x - 0.5)?.to_f64().unwrap_or(f64::NAN);
            return Ok(0.5 * (left + right));
        }
        Ok(right)
    }

    fn jump_at(&self, x: f64) -> bool {
        x >= 2.0 && x <= self.limit as f64 && self.mangoldt(x as u64) > 0.0
    }
}

/// Whether x is a prime power pᵐ (a jump of ψ and Π).
pub fn is_jump_point(x: f64) -> bool {
    x == x.floor() && x >= 2.0 && x < 1e18 && crate::special::is_prime_power(x as u64).is_some()
}
