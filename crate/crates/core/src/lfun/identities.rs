use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::zeta::zeta;
use crate::special::{primes_up_to, ComplexSum};
use crate::{Error, Result};

/// Truncated Eisenstein L-series next to its ζ·ζ closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EisensteinCheck {
    pub series: Complex64,
    pub product: Complex64,
    /// Rigorous upper bound on the neglected tail Σ_{n>N}.
    pub tail_bound: f64,
}

impl EisensteinCheck {
    pub fn defect(&self) -> f64 {
        (self.series - self.product).norm()
    }
}

/// Σ_{n≤N} σ_{1−2w}(n) n^{w−1/2−s} against ζ(s+w−1/2) ζ(s−w+1/2).
pub fn eisenstein_l(s: Complex64, w: Complex64, n: usize) -> Result<EisensteinCheck> {
    let a = s + w - 0.5;
    let b = s - w + 0.5;
    if a.re <= 1.5 || b.re <= 1.5 {
        return Err(Error::ConvergenceRegion(format!(
            "Eisenstein series needs Re(s ± (w − 1/2)) > 1.5, got {} and {}",
            a.re, b.re
        )));
    }
    if n == 0 {
        return Err(Error::Domain("truncation N must be positive".into()));
    }
    // σ_{1−2w}(m) by a divisor sieve
    let exponent = 1.0 - 2.0 * w;
    let mut sigma = vec![Complex64::new(0.0, 0.0); n + 1];
    for d in 1..=n {
        let dp = (exponent * (d as f64).ln()).exp();
        for m in (d..=n).step_by(d) {
            sigma[m] += dp;
        }
    }
    let mut series = ComplexSum::new();
    for (m, sig) in sigma.iter().enumerate().skip(1) {
        series.add(sig * ((w - 0.5 - s) * (m as f64).ln()).exp());
    }
    let product = zeta(a)? * zeta(b)?;
    Ok(EisensteinCheck { series: series.value(), product, tail_bound: divisor_tail_bound(a.re, b.re, n)? })
}

/// Bound on Σ_{de>N} d^{−α} e^{−β}, summing over d with an integral bound on e.
fn divisor_tail_bound(alpha: f64, beta: f64, n: usize) -> Result<f64> {
    let tail = |x: f64, m: f64| m.powf(-x) + m.powf(1.0 - x) / (x - 1.0);
    let mut total = 0.0;
    for d in 1..=n {
        let m = (n / d + 1) as f64;
        total += (d as f64).powf(-alpha) * tail(beta, m);
    }
    let zeta_beta = zeta(Complex64::new(beta, 0.0))?.re;
    Ok(total + tail(alpha, (n + 1) as f64) * zeta_beta)
}

/// Truncated Hasse–Weil product for the projective line and its closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HasseWeilCheck {
    pub truncated_product: Complex64,
    pub closed_form: Complex64,
}

impl HasseWeilCheck {
    pub fn relative_defect(&self) -> f64 {
        (self.truncated_product - self.closed_form).norm() / self.closed_form.norm()
    }
}

/// Π_{p≤P} (1−p^{−s})^{−1}(1−p^{1−s})^{−1} against ζ(s)ζ(s−1).
pub fn hasse_weil_p1(s: Complex64, prime_limit: u64) -> Result<HasseWeilCheck> {
    if s.re <= 2.5 {
        return Err(Error::ConvergenceRegion(format!("Hasse–Weil product for P1 needs Re s > 2.5, got {}", s.re)));
    }
    let mut product = Complex64::new(1.0, 0.0);
    for p in primes_up_to(prime_limit) {
        let lp = (p as f64).ln();
        let x = (-s * lp).exp();
        product /= (1.0 - x) * (1.0 - x * p as f64);
    }
    Ok(HasseWeilCheck { truncated_product: product, closed_form: zeta(s)? * zeta(s - 1.0)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn divisor_sum_against_zeta_squared() {
        for n in [100usize, 1000] {
            let e = eisenstein_l(c(3.0), c(0.5), n).unwrap();
            assert!(e.defect() <= e.tail_bound);
            if n == 100 {
                assert!(e.defect() <= 2.0 * (n as f64).powf(-1.9));
            }
        }
    }

    #[test]
    fn divisor_sum_matches_direct_oracle() {
        let n = 200;
        let direct: f64 = (1..=n).map(|m: u64| (1..=m).filter(|d| m % d == 0).count() as f64 / (m as f64).powi(3)).sum();
        let e = eisenstein_l(c(3.0), c(0.5), n as usize).unwrap();
        assert!((e.series.re - direct).abs() < 1e-13);
    }

    #[test]
    fn weight_one_example_and_doubling() {
        let a = eisenstein_l(c(4.0), c(1.0), 500).unwrap();
        let expected = zeta(c(4.5)).unwrap() * zeta(c(3.5)).unwrap();
        assert!((a.product - expected).norm() < 1e-15);
        assert!(a.defect() <= a.tail_bound);
        let b = eisenstein_l(c(4.0), c(1.0), 1000).unwrap();
        assert!(b.defect() <= 0.5 * a.defect());
    }

    #[test]
    fn eisenstein_region() {
        assert!(matches!(eisenstein_l(c(2.0), c(1.0), 10), Err(Error::ConvergenceRegion(_))));
    }

    #[test]
    fn projective_line_product() {
        let mut last = f64::INFINITY;
        for p in [100, 1000, 10_000] {
            let h = hasse_weil_p1(c(4.0), p).unwrap();
            let d = h.relative_defect();
            assert!(d < last);
            last = d;
        }
        assert!(last <= 1e-3);
        let h = hasse_weil_p1(c(4.0), 10).unwrap();
        let closed = zeta(c(4.0)).unwrap() * zeta(c(3.0)).unwrap();
        assert!((h.closed_form - closed).norm() < 1e-15);
        assert!(hasse_weil_p1(c(2.0), 10).is_err());
    }
}
