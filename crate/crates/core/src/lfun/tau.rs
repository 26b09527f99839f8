use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::special::{divisors, primes_up_to};

/// τ(1..=N), exact.
///
/// Coefficients c_n of Π(1−q^n)^{24} come from the logarithmic-derivative
/// recurrence n c_n = −24 Σ_{k=1}^{n} σ(k) c_{n−k}; then τ(n) = c_{n−1}.
pub fn ramanujan_tau(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return Vec::new();
    }
    let mut sigma = vec![0i64; n];
    for d in 1..n {
        for m in (d..n).step_by(d) {
            sigma[m] += d as i64;
        }
    }
    tau_i128(&sigma).unwrap_or_else(|| tau_big(&sigma))
}

fn tau_i128(sigma: &[i64]) -> Option<Vec<BigInt>> {
    let mut c: Vec<i128> = vec![1];
    for m in 1..sigma.len() {
        let mut acc: i128 = 0;
        for k in 1..=m {
            acc = acc.checked_add(c[m - k].checked_mul(sigma[k] as i128)?)?;
        }
        c.push(acc.checked_mul(-24)? / m as i128);
    }
    Some(c.into_iter().map(BigInt::from).collect())
}

fn tau_big(sigma: &[i64]) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = vec![BigInt::from(1)];
    for m in 1..sigma.len() {
        let mut acc = BigInt::zero();
        for k in 1..=m {
            acc += &c[m - k] * sigma[k];
        }
        c.push(acc * -24 / BigInt::from(m));
    }
    c
}

/// Failures of the Hecke relations and the Ramanujan bound among τ(1..=N).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TauChecks {
    pub pairs_checked: usize,
    /// (n, m) with τ(n)τ(m) ≠ Σ_{d|(n,m)} d^{11} τ(nm/d²).
    pub hecke_failures: Vec<(u64, u64)>,
    /// Primes with τ(p²) ≠ τ(p)² − p^{11}.
    pub square_failures: Vec<u64>,
    /// Primes with |τ(p)| > 2 p^{11/2}.
    pub bound_failures: Vec<u64>,
}

impl TauChecks {
    pub fn all_hold(&self) -> bool {
        self.hecke_failures.is_empty() && self.square_failures.is_empty() && self.bound_failures.is_empty()
    }
}

/// Runs every check whose arguments stay within the given table.
pub fn tau_hecke_defects(tau: &[BigInt]) -> TauChecks {
    let n = tau.len() as u64;
    let t = |k: u64| &tau[(k - 1) as usize];
    let mut out = TauChecks::default();
    for a in 1..=n {
        for b in a..=n / a {
            let g = num_integer::gcd(a, b);
            let mut rhs = BigInt::zero();
            for d in divisors(g) {
                rhs += BigInt::from(d).pow(11) * t(a * b / (d * d));
            }
            out.pairs_checked += 1;
            if t(a) * t(b) != rhs {
                out.hecke_failures.push((a, b));
            }
        }
    }
    for p in primes_up_to(n) {
        let p11 = BigInt::from(p).pow(11);
        if p * p <= n && *t(p * p) != t(p) * t(p) - &p11 {
            out.square_failures.push(p);
        }
        if t(p) * t(p) > p11 * 4 {
            out.bound_failures.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let tau = ramanujan_tau(12);
        let expected = [1i64, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944];
        for (a, b) in tau.iter().zip(expected) {
            assert_eq!(*a, BigInt::from(b));
        }
        assert_eq!(&tau[5], &(&tau[1] * &tau[2]));
    }

    #[test]
    fn direct_product_oracle() {
        // expand q Π (1 − q^n)^{24} by repeated multiplication
        let n = 30;
        let mut poly = vec![BigInt::zero(); n];
        poly[0] = BigInt::from(1);
        for k in 1..n {
            for _ in 0..24 {
                for i in (k..n).rev() {
                    let v = poly[i - k].clone();
                    poly[i] -= v;
                }
            }
        }
        assert_eq!(ramanujan_tau(n), poly);
    }

    #[test]
    fn fixed_width_path_matches_bigint() {
        let mut sigma = vec![0i64; 600];
        for d in 1..600 {
            for m in (d..600).step_by(d) {
                sigma[m] += d as i64;
            }
        }
        assert_eq!(tau_i128(&sigma).unwrap(), tau_big(&sigma));
    }

    #[test]
    fn hecke_and_bound() {
        let tau = ramanujan_tau(400);
        let checks = tau_hecke_defects(&tau);
        assert!(checks.all_hold(), "{checks:?}");
        assert!(checks.pairs_checked > 400);
    }
}
