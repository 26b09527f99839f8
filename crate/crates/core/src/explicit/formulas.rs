use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::tables::{is_jump_point, PrimeTables};
use crate::lfun::{zeta, Family};
use crate::special::{ei_complex, li, mobius, quad, CompensatedSum};
use crate::zeros::ZeroSet;
use crate::{Error, Result};

fn check_zeta_zeros(zeros: &ZeroSet) -> Result<()> {
    if zeros.is_empty() {
        return Err(Error::EmptyZeroSet);
    }
    if zeros.family() != &Family::Zeta {
        return Err(Error::UnsupportedFamily(format!("explicit formulas need zeta zeros, got {}", zeros.family())));
    }
    Ok(())
}

fn check_not_jump(x: f64) -> Result<()> {
    if is_jump_point(x) {
        return Err(Error::JumpPoint(x));
    }
    Ok(())
}

/// ζ′(0)/ζ(0) by a five-point difference on the Euler–Maclaurin evaluator.
pub fn zeta_log_derivative_at_zero() -> f64 {
    let h = 1e-3;
    let z = |s: f64| zeta(Complex64::new(s, 0.0)).expect("away from the pole").re;
    let derivative = (z(-2.0 * h) - 8.0 * z(-h) + 8.0 * z(h) - z(2.0 * h)) / (12.0 * h);
    derivative / z(0.0)
}

/// x − Σ_ρ x^ρ/ρ − ζ′(0)/ζ(0) − ½ log(1 − x^{−2}) with the zeros of the set
/// (conjugates paired into 2·Re).
pub fn psi_explicit(x: f64, zeros: &ZeroSet) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::Domain(format!("psi_explicit needs x > 1, got {x}")));
    }
    check_not_jump(x)?;
    check_zeta_zeros(zeros)?;
    let ln_x = x.ln();
    let sum: CompensatedSum = zeros
        .ordinates()
        .iter()
        .map(|&g| {
            let rho = Complex64::new(0.5, g);
            2.0 * ((rho * ln_x).exp() / rho).re
        })
        .collect();
    Ok(x - sum.value() - zeta_log_derivative_at_zero() - 0.5 * (1.0 - x.powi(-2)).ln())
}

/// R(x) = Σ_{n≤nmax} μ(n)/n · li(x^{1/n}), dropping terms with x^{1/n} < 2.
pub fn riemann_r(x: f64, nmax: u32) -> Result<f64> {
    if !(x >= 2.0) {
        return Err(Error::Domain(format!("riemann_r needs x ≥ 2, got {x}")));
    }
    if (nmax as f64) < x.log2().floor() {
        return Err(Error::Precondition(format!("nmax = {nmax} is below log2 x = {}", x.log2())));
    }
    let mut acc = CompensatedSum::new();
    for n in 1..=nmax {
        let root = x.powf(1.0 / n as f64);
        if root < 2.0 {
            break;
        }
        let mu = mobius(n as u64);
        if mu != 0 {
            acc.add(mu as f64 / n as f64 * li(root)?);
        }
    }
    Ok(acc.value())
}

/// Whether π(x) is the nearest integer to R(x).
pub fn ramanujan_set_test(x: f64, tables: &PrimeTables) -> Result<bool> {
    let pi = tables.pi_count(x)?;
    let r = riemann_r(x, x.log2().ceil().max(1.0) as u32)?;
    Ok(r.round() == pi as f64)
}

/// Membership statistics of the Ramanujan set over half-integers in [lo, hi].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RamanujanDensity {
    pub points: usize,
    pub members: usize,
    pub largest_member: f64,
}

impl RamanujanDensity {
    pub fn density(&self) -> f64 {
        self.members as f64 / self.points.max(1) as f64
    }
}

pub fn ramanujan_density(lo: f64, hi: f64, tables: &PrimeTables) -> Result<RamanujanDensity> {
    let mut out = RamanujanDensity { points: 0, members: 0, largest_member: f64::NAN };
    let mut x = lo.max(2.0).floor() + 0.5;
    while x <= hi {
        out.points += 1;
        if ramanujan_set_test(x, tables)? {
            out.members += 1;
            out.largest_member = x;
        }
        x += 1.0;
    }
    Ok(out)
}

/// ∫_x^∞ dt / (t(t²−1) log t).
pub fn pi_star_tail_integral(x: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::Domain(format!("tail integral needs x > 1, got {x}")));
    }
    // t = x e^v
    let f = |v: f64| {
        let t = x * v.exp();
        1.0 / ((t * t - 1.0) * t.ln())
    };
    Ok(quad::integrate(f, 0.0, 60.0, 1e-16, 1e-12))
}

/// The four terms of Riemann's formula for Π*(x).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PiStarTerms {
    pub li_x: f64,
    /// Σ_{γ>0} (li(x^ρ) + li(x^{1−ρ})).
    pub zero_sum: f64,
    pub tail_integral: f64,
    pub total: f64,
}

/// li(x) − Σ_{Im ρ>0}(li(x^ρ) + li(x^{1−ρ})) + ∫_x^∞ dt/(t(t²−1) log t) − log 2,
/// with li(x^ρ) = Ei(ρ log x).
pub fn pi_star_formula(x: f64, zeros: &ZeroSet) -> Result<PiStarTerms> {
    if !(x > 2.0) {
        return Err(Error::Domain(format!("pi_star_formula needs x > 2, got {x}")));
    }
    check_not_jump(x)?;
    check_zeta_zeros(zeros)?;
    let ln_x = x.ln();
    let mut zero_sum = CompensatedSum::new();
    for &g in zeros.ordinates() {
        let w = Complex64::new(0.5, g) * ln_x;
        // li(x^{1−ρ}) = li(x^{ρ̄}) is the conjugate
        zero_sum.add(2.0 * ei_complex(w)?.re);
    }
    let li_x = li(x)?;
    let tail_integral = pi_star_tail_integral(x)?;
    let total = li_x - zero_sum.value() + tail_integral - 2f64.ln();
    Ok(PiStarTerms { li_x, zero_sum: zero_sum.value(), tail_integral, total })
}

/// log 2π, the value ζ′(0)/ζ(0) should reproduce.
pub fn log_two_pi() -> f64 {
    (2.0 * PI).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::find_zeros;
    use std::sync::OnceLock;

    fn zeros_500() -> &'static ZeroSet {
        static Z: OnceLock<ZeroSet> = OnceLock::new();
        Z.get_or_init(|| find_zeros(500.0, &Family::Zeta).unwrap())
    }

    #[test]
    fn log_derivative_constant() {
        assert!((zeta_log_derivative_at_zero() - log_two_pi()).abs() < 1e-8);
    }

    #[test]
    fn psi_against_sieve() {
        let tables = PrimeTables::new(1000);
        let x = 100.5;
        let err = (psi_explicit(x, zeros_500()).unwrap() - tables.chebyshev_psi(x).unwrap()).abs();
        assert!(err <= 0.5, "error {err}");
        assert!(matches!(psi_explicit(101.0, zeros_500()), Err(Error::JumpPoint(_))));
        let empty = ZeroSet::new(Family::Zeta, vec![], 10.0, 1e-9);
        assert!(matches!(psi_explicit(100.5, &empty), Err(Error::EmptyZeroSet)));
    }

    #[test]
    fn riemann_r_small_values() {
        // Gram series oracle: R(x) = 1 + Σ_k (log x)^k / (k · k! · ζ(k+1))
        let gram = |x: f64| {
            let l = x.ln();
            let mut term = 1.0;
            let mut total = 1.0;
            for k in 1..200 {
                term *= l / k as f64;
                total += term / (k as f64 * zeta(Complex64::new(k as f64 + 1.0, 0.0)).unwrap().re);
            }
            total
        };
        // with every term kept the sum creeps (slowly) toward the Gram value
        let full: f64 = (1..=50_000u64)
            .filter(|&n| mobius(n) != 0)
            .map(|n| mobius(n) as f64 / n as f64 * li(1000f64.powf(1.0 / n as f64)).unwrap())
            .sum();
        assert!((full - gram(1000.0)).abs() < 1e-2, "{full} vs {}", gram(1000.0));
        // R(10) ≈ 4.59 rounds to 5 while π(10) = 4
        let r10 = riemann_r(10.0, 4).unwrap();
        assert!((r10 - 4.592_790_491_482_41).abs() < 1e-10);
        let tables = PrimeTables::new(100);
        assert!(!ramanujan_set_test(10.0, &tables).unwrap());
        assert!(ramanujan_set_test(10.5, &tables).is_ok());
        assert_eq!(riemann_r(2.0, 1).unwrap(), li(2.0).unwrap());
        assert!(riemann_r(1000.0, 3).is_err());
    }

    #[test]
    fn tail_integral_at_100() {
        let v = pi_star_tail_integral(100.0).unwrap();
        assert!(v > 0.0 && v < 4e-5);
        // crude oracle: midpoint rule in t on [100, 10⁴] plus an analytic bound
        let n = 200_000;
        let h = (1e4 - 100.0) / n as f64;
        let crude: f64 = (0..n)
            .map(|k| {
                let t = 100.0 + (k as f64 + 0.5) * h;
                h / (t * (t * t - 1.0) * t.ln())
            })
            .sum();
        assert!((v - crude).abs() < 1e-9);
    }

    #[test]
    fn pi_star_against_sieve() {
        let tables = PrimeTables::new(1000);
        let x = 20.5;
        let terms = pi_star_formula(x, zeros_500()).unwrap();
        let sieved = tables.pi_star(x).unwrap();
        assert!((terms.total - sieved).abs() <= 0.3, "{terms:?} vs {sieved}");
    }
}
