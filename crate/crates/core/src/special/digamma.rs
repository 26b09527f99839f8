use std::f64::consts::PI;

use num_complex::Complex64;

use super::{cos_pi, is_nonpositive_integer, sin_pi};
use crate::{Error, Result};

/// B_{2k} / (2k) for k = 1..=10.
const ASYMPTOTIC: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14_364.0,
    -174_611.0 / 6600.0,
];

/// ψ(s) = Γ'(s)/Γ(s).
///
/// Shifts upward with ψ(s) = ψ(s+1) − 1/s until |s| ≥ 15 and applies the
/// asymptotic series; Re s < 1/2 goes through ψ(s) = ψ(1−s) − π cot(πs).
pub fn digamma(s: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole {
            function: "digamma",
            at: format!("{s}"),
        });
    }
    Ok(digamma_unchecked(s))
}

fn digamma_unchecked(s: Complex64) -> Complex64 {
    if s.re < 0.5 {
        return digamma_unchecked(1.0 - s) - PI * cos_pi(s) / sin_pi(s);
    }
    let mut w = s;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < 15.0 {
        acc -= 1.0 / w;
        w += 1.0;
    }
    let inv2 = 1.0 / (w * w);
    let mut pow = inv2;
    let mut tail = Complex64::new(0.0, 0.0);
    for &ck in &ASYMPTOTIC {
        tail += ck * pow;
        pow *= inv2;
    }
    acc + w.ln() - 0.5 / w - tail
}
