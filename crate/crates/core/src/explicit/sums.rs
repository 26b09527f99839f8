use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::special::ComplexSum;
use crate::zeros::ZeroSet;
use crate::{Error, Result};

/// Σ_{0<γ<T} x^{1/2+iγ}.
pub fn landau_sum(x: f64, zeros: &ZeroSet, height: f64) -> Result<Complex64> {
    if !(x > 1.0) {
        return Err(Error::Domain(format!("landau_sum needs x > 1, got {x}")));
    }
    let ln_x = x.ln();
    let sqrt_x = x.sqrt();
    let sum: ComplexSum = zeros
        .up_to(height)?
        .iter()
        .filter(|&&g| g < height)
        .map(|&g| sqrt_x * Complex64::from_polar(1.0, g * ln_x))
        .collect();
    Ok(sum.value())
}

/// Least-squares line through (T, Re Σ_{0<γ<T} x^ρ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LandauFit {
    pub slope: f64,
    pub intercept: f64,
    /// Largest |Σ| over the sampled heights.
    pub max_abs: f64,
}

/// Fits the real part of the Landau sum against T at `samples` evenly
/// spaced heights in (0, T].
pub fn landau_slope(x: f64, zeros: &ZeroSet, height: f64, samples: usize) -> Result<LandauFit> {
    if samples < 2 {
        return Err(Error::Precondition("slope fit needs at least two samples".into()));
    }
    zeros.up_to(height)?;
    let ln_x = x.ln();
    let sqrt_x = x.sqrt();
    let ords = zeros.ordinates();
    let mut points = Vec::with_capacity(samples);
    let mut running = ComplexSum::new();
    let mut next = 0;
    let mut max_abs: f64 = 0.0;
    for k in 1..=samples {
        let t = height * k as f64 / samples as f64;
        while next < ords.len() && ords[next] < t {
            running.add(sqrt_x * Complex64::from_polar(1.0, ords[next] * ln_x));
            next += 1;
        }
        let v = running.value();
        max_abs = max_abs.max(v.norm());
        points.push((t, v.re));
    }
    let n = points.len() as f64;
    let mean_t = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_v = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_t) * (p.1 - mean_v)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_t).powi(2)).sum();
    let slope = sxy / sxx;
    Ok(LandauFit { slope, intercept: mean_v - slope * mean_t, max_abs })
}

/// Truncated Cramér function with a bound on the omitted zeros.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CramerValue {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// Smallest admissible Im t.
pub const CRAMER_MIN_IM: f64 = 0.05;

/// V(t) = Σ_{γ>0} e^{ρt} over the zero set.
///
/// The tail bound counts at most log(u)/2π + 1 zeros in each unit interval
/// [u, u+1] above the certified height.
pub fn cramer_partial(t: Complex64, zeros: &ZeroSet) -> Result<CramerValue> {
    if t.im < CRAMER_MIN_IM {
        return Err(Error::ConvergenceRegion(format!("Cramér series needs Im t ≥ {CRAMER_MIN_IM}, got {}", t.im)));
    }
    let height = zeros.certified_height();
    if (-height * t.im).exp() >= 1e-14 {
        return Err(Error::Precondition(format!(
            "zeros certified to {height} leave e^(-γ Im t) ≥ 1e-14 at Im t = {}",
            t.im
        )));
    }
    let sum: ComplexSum = zeros.ordinates().iter().map(|&g| (Complex64::new(0.5, g) * t).exp()).collect();
    let scale = (0.5 * t.re).exp();
    let mut tail = 0.0;
    let mut u = height;
    loop {
        let term = ((u + 1.0).ln() / (2.0 * std::f64::consts::PI) + 1.0) * (-u * t.im).exp();
        tail += term;
        if term < 1e-30 * tail.max(1e-300) || term == 0.0 {
            break;
        }
        u += 1.0;
    }
    Ok(CramerValue { value: sum.value(), tail_bound: scale * tail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfun::Family;
    use crate::zeros::find_zeros;
    use std::f64::consts::PI;

    #[test]
    fn landau_slope_at_two_and_four() {
        let zeros = find_zeros(600.0, &Family::Zeta).unwrap();
        for x in [2.0, 4.0] {
            let fit = landau_slope(x, &zeros, 600.0, 120).unwrap();
            let expected = -(2f64).ln() / (2.0 * PI);
            assert!((fit.slope / expected - 1.0).abs() < 0.25, "x={x}: {fit:?}");
        }
        let fit = landau_slope(3.7, &zeros, 600.0, 120).unwrap();
        assert!(fit.max_abs < 10.0 * 600f64.ln());
        assert!(landau_sum(2.0, &zeros, 700.0).is_err());
    }

    #[test]
    fn cramer_bounds() {
        let zeros = find_zeros(1000.0, &Family::Zeta).unwrap();
        let t = Complex64::new(0.0, 0.1);
        let short = cramer_partial(t, &zeros.truncated(500.0).unwrap()).unwrap();
        let long = cramer_partial(t, &zeros).unwrap();
        assert!((short.value - long.value).norm() <= short.tail_bound);
        let t = Complex64::new(1.0, 0.5);
        let v = cramer_partial(t, &zeros).unwrap();
        let termwise: f64 = zeros.ordinates().iter().map(|g| (-0.5 * g).exp() * 0.5f64.exp()).sum();
        assert!(v.value.norm() <= termwise);
        assert!(cramer_partial(Complex64::new(0.0, 0.01), &zeros).is_err());
    }
}
