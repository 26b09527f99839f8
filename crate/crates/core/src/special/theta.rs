use std::f64::consts::PI;

use super::{CompensatedSum, SERIES_CUTOFF};
use crate::{Error, Result};

/// θ(t) = Σ_{n∈ℤ} e^{−πn²t}, the convention under which θ(t) = t^{−1/2} θ(1/t).
pub fn theta(t: f64) -> Result<f64> {
    Ok(2.0 * psi_half(t)? + 1.0)
}

/// ψ(t) = Σ_{n≥1} e^{−πn²t}, so θ = 2ψ + 1.
pub fn psi_half(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("theta needs t > 0, got {t}")));
    }
    let mut acc = CompensatedSum::new();
    let mut n = 1u64;
    loop {
        let term = (-PI * (n * n) as f64 * t).exp();
        if term < SERIES_CUTOFF {
            break;
        }
        acc.add(term);
        n += 1;
    }
    Ok(acc.value())
}

/// Poisson summation residual for the Gaussian e^{−πσx²}:
/// |Σ_n e^{−πn²σ} − σ^{−1/2} Σ_n e^{−πn²/σ}|.
pub fn poisson_check(sigma: f64) -> Result<f64> {
    let lhs = theta(sigma)?;
    let rhs = theta(1.0 / sigma)? / sigma.sqrt();
    Ok((lhs - rhs).abs())
}
