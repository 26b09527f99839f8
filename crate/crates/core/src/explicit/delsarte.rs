use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::tables::PrimeTables;
use crate::special::{digamma, quad, CompensatedSum};
use crate::zeros::ZeroSet;
use crate::{Error, Result};

/// The one Fourier-convention constant multiplying the prime side, frozen
/// after calibration at σ = 6 (see [`calibrate_delsarte`]).
pub const DELSARTE_CALIBRATION: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TestFunctionKind {
    Gaussian,
}

/// φ(t) = exp(−t²/2σ²) with φ̂(ξ) = ∫ φ(t) e^{−2πiξt} dt = σ√(2π) exp(−2π²σ²ξ²).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestFunction {
    pub kind: TestFunctionKind,
    pub sigma: f64,
}

impl TestFunction {
    pub fn gaussian(sigma: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::Domain(format!("Gaussian width must be positive, got {sigma}")));
        }
        Ok(TestFunction { kind: TestFunctionKind::Gaussian, sigma })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (-z * z / (2.0 * self.sigma * self.sigma)).exp()
    }

    pub fn eval_real(&self, t: f64) -> f64 {
        (-t * t / (2.0 * self.sigma * self.sigma)).exp()
    }

    pub fn hat(&self, xi: f64) -> f64 {
        self.sigma * (2.0 * PI).sqrt() * (-2.0 * PI * PI * self.sigma * self.sigma * xi * xi).exp()
    }

    /// Half-width beyond which φ < e^{−45}.
    fn support(&self) -> f64 {
        self.sigma * 90f64.sqrt()
    }
}

/// Which form of the archimedean terms to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DelsarteConvention {
    /// Weil's form: −2π(φ(i/2)+φ(−i/2)) on the zero side and
    /// Ψ(t) = log π − Re ψ(1/4 + it/2).
    Weil,
    /// The displayed statement: +2π(φ(i/2)+φ(−i/2)) and
    /// Ψ(t) = log π − ½ψ(1/2+it) − ½ψ(1/2−it).
    AsDisplayed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DelsartePairing {
    pub sigma: f64,
    pub convention: DelsarteConvention,
    pub zero_side: f64,
    /// Calibrated prime side, `calibration · raw_prime_side`.
    pub prime_side: f64,
    pub raw_prime_side: f64,
    pub calibration: f64,
    /// −Σ Λ(n)/√n (φ̂(log n/2π) + φ̂(−log n/2π)).
    pub prime_sum: f64,
    /// ∫ φ Ψ.
    pub archimedean: f64,
}

impl DelsartePairing {
    pub fn relative_defect(&self) -> f64 {
        (self.zero_side - self.prime_side).abs() / self.zero_side.abs()
    }
}

/// Both sides of the Delsarte explicit formula for a Gaussian test function,
/// in Weil's form and with the frozen calibration constant.
pub fn delsarte_pairing(phi: &TestFunction, zeros: &ZeroSet, tables: &PrimeTables) -> Result<DelsartePairing> {
    delsarte_pairing_with(phi, zeros, tables, DelsarteConvention::Weil, DELSARTE_CALIBRATION)
}

pub fn delsarte_pairing_with(
    phi: &TestFunction,
    zeros: &ZeroSet,
    tables: &PrimeTables,
    convention: DelsarteConvention,
    calibration: f64,
) -> Result<DelsartePairing> {
    if zeros.is_empty() {
        return Err(Error::EmptyZeroSet);
    }
    let height = zeros.certified_height();
    if phi.eval_real(height) >= 1e-12 {
        return Err(Error::Precondition(format!(
            "σ = {} too large for zeros certified to {height}: φ(T) = {:e}",
            phi.sigma,
            phi.eval_real(height)
        )));
    }
    let limit = tables.limit();
    let last = limit as f64;
    if 2.0 * last.ln() / last.sqrt() * phi.hat(last.ln() / (2.0 * PI)) >= 1e-12 {
        return Err(Error::Precondition(format!("prime limit {limit} leaves a prime-side tail above 1e-12")));
    }

    let mut gamma_sum = CompensatedSum::new();
    for &g in zeros.ordinates() {
        gamma_sum.add(2.0 * phi.eval_real(g));
    }
    let half = Complex64::new(0.0, 0.5);
    let poles = (phi.eval(half) + phi.eval(-half)).re;
    let zero_side = match convention {
        DelsarteConvention::Weil => 2.0 * PI * (gamma_sum.value() - poles),
        DelsarteConvention::AsDisplayed => 2.0 * PI * (gamma_sum.value() + poles),
    };

    let mut primes = CompensatedSum::new();
    for n in 2..=limit {
        let lambda = tables.mangoldt(n);
        if lambda > 0.0 {
            let xi = (n as f64).ln() / (2.0 * PI);
            primes.add(-lambda / (n as f64).sqrt() * (phi.hat(xi) + phi.hat(-xi)));
        }
    }
    let ln_pi = PI.ln();
    let psi_weight = |t: f64| -> f64 {
        match convention {
            DelsarteConvention::Weil => ln_pi - digamma(Complex64::new(0.25, 0.5 * t)).expect("Re > 0").re,
            DelsarteConvention::AsDisplayed => ln_pi - digamma(Complex64::new(0.5, t)).expect("Re > 0").re,
        }
    };
    let archimedean = 2.0 * quad::integrate(|t| phi.eval_real(t) * psi_weight(t), 0.0, phi.support(), 1e-15, 1e-13);
    let raw_prime_side = primes.value() - archimedean;
    Ok(DelsartePairing {
        sigma: phi.sigma,
        convention,
        zero_side,
        prime_side: calibration * raw_prime_side,
        raw_prime_side,
        calibration,
        prime_sum: primes.value(),
        archimedean,
    })
}

/// zero side / raw prime side at σ = 6, the value frozen as
/// [`DELSARTE_CALIBRATION`].
pub fn calibrate_delsarte(zeros: &ZeroSet, tables: &PrimeTables) -> Result<f64> {
    let p = delsarte_pairing_with(&TestFunction::gaussian(6.0)?, zeros, tables, DelsarteConvention::Weil, 1.0)?;
    Ok(p.zero_side / p.raw_prime_side)
}
