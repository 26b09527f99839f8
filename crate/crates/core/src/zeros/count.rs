use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::lfun::{hardy_z_unchecked, Family};
use crate::{Error, Result};

/// Argument-principle zero count N(T) with the smooth main term beside it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroCount {
    pub count: usize,
    /// Height actually used, after nudging off a zero.
    pub height: f64,
    /// Raw (pre-rounding) value of the argument formula.
    pub raw: f64,
    /// T/2π·log(qT/2π) − T/2π.
    pub main_term: f64,
}

const NUDGE: f64 = 1e-6;
const MAX_HALVINGS: u32 = 20;
const MAX_PHASE_STEP: f64 = PI / 4.0;

/// Number of zeros ρ = β + iγ with 0 < γ ≤ T.
///
/// The argument of the completed function is followed from the real point
/// s = 2 up to 2 + iT (where |F − 1| < 1 keeps the principal branch valid)
/// and then along the horizontal segment to 1/2 + iT; by the functional
/// equation this is a quarter of the variation around the rectangle
/// [−1, 2] × [−T, T].
pub fn count_zeros(height: f64, family: &Family) -> Result<ZeroCount> {
    if !(height > 0.0) || !height.is_finite() {
        return Err(Error::Domain(format!("count_zeros needs T > 0, got {height}")));
    }
    family.check_supported()?;
    let mut t = height;
    let mut nudges = 0;
    while hardy_z_unchecked(t, family).abs() < 1e-9 {
        t += NUDGE;
        nudges += 1;
        if nudges > 10 {
            return Err(Error::Evaluation(format!("could not step off a zero near t = {height}")));
        }
    }
    let phase = horizontal_phase(t, family)?;
    let pole_factor = if matches!(family, Family::Zeta) { PI } else { 0.0 };
    let raw = (family.theta(t) + pole_factor + phase) / PI;
    let count = raw.round();
    if (raw - count).abs() > 0.25 || count < 0.0 {
        return Err(Error::Evaluation(format!("argument count {raw} at T = {t} is not near an integer")));
    }
    Ok(ZeroCount { count: count as usize, height: t, raw, main_term: family.main_term(t) })
}

/// Continuous change of arg F(σ + iT) as σ runs from 2 down to 1/2,
/// plus the principal argument at σ = 2.
fn horizontal_phase(t: f64, family: &Family) -> Result<f64> {
    let eval = |sigma: f64| family.evaluate(Complex64::new(sigma, t));
    let base_step = 1.5 / 64.0;
    let mut sigma = 2.0;
    let mut prev = eval(sigma)?;
    let mut phase = prev.arg();
    let mut step = base_step;
    let mut halvings = 0;
    while sigma > 0.5 {
        let next = (sigma - step).max(0.5);
        let value = eval(next)?;
        let delta = (value / prev).arg();
        if delta.abs() > MAX_PHASE_STEP {
            step /= 2.0;
            halvings += 1;
            if halvings > MAX_HALVINGS {
                return Err(Error::Evaluation(format!(
                    "argument tracking lost continuity at {next} + {t}i"
                )));
            }
            continue;
        }
        phase += delta;
        sigma = next;
        prev = value;
        halvings = 0;
        step = (step * 2.0).min(base_step);
    }
    Ok(phase)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_zeta_counts() {
        for (t, n) in [(10.0, 0), (20.0, 1), (31.0, 4), (50.0, 10), (100.0, 29)] {
            assert_eq!(count_zeros(t, &Family::Zeta).unwrap().count, n, "T = {t}");
        }
    }

    #[test]
    fn chi3_counts() {
        // first ordinates of L(s, χ₃): 8.0397, 11.2492, 15.7046
        let f = Family::chi3();
        assert_eq!(count_zeros(8.0, &f).unwrap().count, 0);
        assert_eq!(count_zeros(9.0, &f).unwrap().count, 1);
        assert_eq!(count_zeros(16.0, &f).unwrap().count, 3);
    }

    #[test]
    fn raw_value_is_nearly_integral() {
        for t in [123.4, 777.7, 1500.0] {
            let c = count_zeros(t, &Family::Zeta).unwrap();
            assert!((c.raw - c.count as f64).abs() < 1e-6, "{c:?}");
            assert!((c.count as f64 - c.main_term).abs() <= 2.0 + 0.5 * t.ln());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(count_zeros(-1.0, &Family::Zeta).is_err());
        let complex = Family::Dirichlet(crate::lfun::make_character(5, 1).unwrap());
        assert!(matches!(count_zeros(10.0, &complex), Err(Error::UnsupportedFamily(_))));
    }
}
