//! Kummer congruences for Bernoulli quotients and the p-adic interpolation
//! of ζ at negative integers, all in exact rational arithmetic.
//!
//! With the Euler factor removed, the values
//!
//! ```text
//! ζ*(1 − n) = (1 − p^{n−1}) ζ(1 − n) = −(1 − p^{n−1}) B_n / n
//! ```
//!
//! are p-adically close whenever the n are close in ℤ/(p−1) × ℤ_p, which is
//! what makes the Kubota–Leopoldt function exist.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::special::{bernoulli_even_table, is_prime};
use crate::{Error, ExactRational, Result};

/// ord_p of a nonzero integer.
fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// ord_p(x), or `None` for x = 0 (valuation +∞).
pub fn valuation(x: &ExactRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    Some(int_valuation(x.numer(), &p) - int_valuation(x.denom(), &p))
}

fn as_string<S: Serializer>(x: &ExactRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// An exact rational together with its p-adic valuation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PAdicValuationReport {
    pub prime: u64,
    #[serde(serialize_with = "as_string")]
    pub value: ExactRational,
    /// `None` when the value is 0.
    pub valuation: Option<i64>,
    /// The valuation the statement asks for, when there is one.
    pub required: Option<i64>,
    pub passes: bool,
}

impl PAdicValuationReport {
    fn new(prime: u64, value: ExactRational, required: Option<i64>) -> Self {
        let valuation = valuation(&value, prime);
        let passes = match (valuation, required) {
            (_, None) | (None, _) => true,
            (Some(v), Some(r)) => v >= r,
        };
        PAdicValuationReport {
            prime,
            value,
            valuation,
            required,
            passes,
        }
    }
}

const CACHED_EVEN: usize = 128;

fn bernoulli_even(n: usize) -> ExactRational {
    static TABLE: OnceLock<Vec<ExactRational>> = OnceLock::new();
    debug_assert!(n % 2 == 0);
    if n / 2 <= CACHED_EVEN {
        TABLE.get_or_init(|| bernoulli_even_table(CACHED_EVEN))[n / 2].clone()
    } else {
        bernoulli_even_table(n / 2).swap_remove(n / 2)
    }
}

fn modified_value(p: u64, n: usize, b_n: &ExactRational) -> ExactRational {
    let factor: BigInt = BigInt::one() - Pow::pow(&BigInt::from(p), (n - 1) as u32);
    -(ExactRational::from_integer(factor) * b_n / ExactRational::from_integer(BigInt::from(n)))
}

/// (1 − p^{n−1}) ζ(1 − n) for even n ≥ 2.
pub fn euler_modified_zeta(p: u64, n: usize) -> Result<ExactRational> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Precondition(format!("n = {n} must be even and at least 2")));
    }
    Ok(modified_value(p, n, &bernoulli_even(n)))
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::Precondition("p = 2 is excluded; the congruences change shape".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Kummer's congruence: for even m ≡ n ≢ 0 mod (p − 1) with
/// m ≡ n mod (p − 1)p^a, the difference of the Euler-modified quotients
/// (1 − p^{m−1})B_m/m − (1 − p^{n−1})B_n/n has valuation ≥ a + 1.
pub fn kummer_check(p: u64, m: usize, n: usize, a: u32) -> Result<PAdicValuationReport> {
    check_odd_prime(p)?;
    for (name, k) in [("m", m), ("n", n)] {
        if k < 2 || k % 2 == 1 {
            return Err(Error::Precondition(format!("{name} = {k} must be even and at least 2")));
        }
        if k as u64 % (p - 1) == 0 {
            return Err(Error::Precondition(format!("{name} = {k} is divisible by p − 1 = {}", p - 1)));
        }
    }
    let modulus = (p - 1) as u128 * (p as u128).pow(a);
    if (m as u128).abs_diff(n as u128) % modulus != 0 {
        return Err(Error::Precondition(format!(
            "m = {m} and n = {n} are not congruent mod (p − 1)p^a = {modulus}"
        )));
    }
    let q = |k: usize| {
        let f: BigInt = BigInt::one() - Pow::pow(&BigInt::from(p), (k - 1) as u32);
        ExactRational::from_integer(f) * bernoulli_even(k) / ExactRational::from_integer(BigInt::from(k))
    };
    Ok(PAdicValuationReport::new(p, q(m) - q(n), Some(a as i64 + 1)))
}

/// All admissible Kummer instances with m < n ≤ `max_index` and a ≤ `max_a`.
pub fn kummer_suite(p: u64, max_index: usize, max_a: u32) -> Result<Vec<(usize, usize, u32, PAdicValuationReport)>> {
    check_odd_prime(p)?;
    let admissible: Vec<usize> = (2..=max_index)
        .step_by(2)
        .filter(|&k| k as u64 % (p - 1) != 0)
        .collect();
    let mut out = Vec::new();
    for (i, &m) in admissible.iter().enumerate() {
        for &n in &admissible[i + 1..] {
            for a in 0..=max_a {
                let modulus = (p - 1) as u128 * (p as u128).pow(a);
                if (n - m) as u128 % modulus == 0 {
                    out.push((m, n, a, kummer_check(p, m, n, a)?));
                }
            }
        }
    }
    Ok(out)
}

/// One term n_k of an interpolating sequence and its modified value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KlTerm {
    pub n: usize,
    pub value: PAdicValuationReport,
}

/// A p-adically converging sequence of Euler-modified ζ values on one
/// branch, with the valuations of consecutive differences.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KlInterpolation {
    pub prime: u64,
    pub residue: u64,
    pub terms: Vec<KlTerm>,
    pub differences: Vec<PAdicValuationReport>,
    /// Valuations of consecutive differences strictly increase.
    pub cauchy: bool,
}

/// Samples the branch u (odd, mod p − 1) at the arguments
/// −(u + p^j − 1), j = 0..=k, i.e. n_j = u + p^j in ζ(1 − n_j).
///
/// n_j ≡ u + 1 mod p − 1 and n_j ≡ n_i mod (p − 1)p^{min(i,j)}.
pub fn kl_interpolate(p: u64, u: u64, k: u32) -> Result<KlInterpolation> {
    check_odd_prime(p)?;
    let u = u % (p - 1);
    if u % 2 == 0 {
        return Err(Error::Precondition(format!(
            "even residue u = {u}: ζ vanishes on that branch, so the interpolated function is identically 0"
        )));
    }
    if u == p - 2 {
        return Err(Error::Precondition(format!(
            "u = {u} ≡ −1 mod p − 1 is the branch through the pole at s = 1"
        )));
    }
    let pk = (p as u128).checked_pow(k).filter(|&v| v <= 4096).ok_or_else(|| {
        Error::Precondition(format!("p^k = {p}^{k} is beyond the exact Bernoulli budget"))
    })?;
    let max_n = u as usize + pk as usize;
    let table = bernoulli_even_table(max_n / 2 + 1);
    let terms: Vec<KlTerm> = (0..=k)
        .map(|j| {
            let n = u as usize + (p as usize).pow(j);
            KlTerm {
                n,
                value: PAdicValuationReport::new(p, modified_value(p, n, &table[n / 2]), None),
            }
        })
        .collect();
    let differences: Vec<PAdicValuationReport> = terms
        .windows(2)
        .enumerate()
        .map(|(j, w)| {
            let d = &w[1].value.value - &w[0].value.value;
            PAdicValuationReport::new(p, d, Some(j as i64 + 1))
        })
        .collect();
    let vals: Vec<Option<i64>> = differences.iter().map(|d| d.valuation).collect();
    let cauchy = vals.windows(2).all(|w| match (w[0], w[1]) {
        (Some(a), Some(b)) => b > a,
        (_, None) => true,
        (None, Some(_)) => false,
    }) && differences.iter().all(|d| d.passes);
    Ok(KlInterpolation {
        prime: p,
        residue: u,
        terms,
        differences,
        cauchy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&q(50, 3), 5), Some(2));
        assert_eq!(valuation(&q(7, 125), 5), Some(-3));
        assert_eq!(valuation(&q(0, 1), 5), None);
    }

    #[test]
    fn spec_examples() {
        for (p, m, n, a) in [(5, 2, 6, 0), (7, 2, 14, 0), (5, 2, 22, 1)] {
            let r = kummer_check(p, m, n, a).unwrap();
            assert!(r.passes, "{p} {m} {n} {a}: {:?}", r.valuation);
        }
        // oracle: B_2 = 1/6, B_6 = 1/42 at p = 5
        let d = q(-4, 1) * q(1, 6) / q(2, 1) - q(-3124, 1) * q(1, 42) / q(6, 1);
        assert_eq!(kummer_check(5, 2, 6, 0).unwrap().value, d);
    }

    #[test]
    fn named_preconditions() {
        assert!(kummer_check(2, 2, 4, 0).is_err());
        assert!(matches!(kummer_check(9, 2, 4, 0), Err(Error::NotPrime(9))));
        assert!(kummer_check(5, 3, 7, 0).is_err());
        assert!(kummer_check(5, 4, 8, 0).is_err());
        assert!(kummer_check(5, 2, 10, 1).is_err());
    }

    #[test]
    fn small_suite() {
        let all = kummer_suite(5, 40, 1).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|(_, _, _, r)| r.passes));
    }

    #[test]
    fn interpolation() {
        let r = kl_interpolate(5, 1, 3).unwrap();
        assert!(r.cauchy, "{:?}", r.differences.iter().map(|d| d.valuation).collect::<Vec<_>>());
        assert_eq!(r.terms.iter().map(|t| t.n).collect::<Vec<_>>(), vec![2, 6, 26, 126]);
        assert!(kl_interpolate(5, 2, 3).is_err());
        assert!(kl_interpolate(5, 3, 3).is_err());
    }
}
