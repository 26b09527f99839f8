use std::f64::consts::PI;

use num_complex::Complex64;

use super::is_nonpositive_integer;
use crate::{Error, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_049e-4,
    2.174_396_181_152_126_4e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_274e-5,
    -2.619_083_840_158_141e-5,
    3.689_918_265_953_162e-6,
];

/// B_{2k} / (2k(2k-1)) for k = 1..=10.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// sin(πz) with the real part reduced exactly before scaling by π.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let x = z.re - n;
    let y = PI * z.im;
    let (s, c) = (PI * x).sin_cos();
    let w = Complex64::new(s * y.cosh(), c * y.sinh());
    if n.rem_euclid(2.0) == 1.0 {
        -w
    } else {
        w
    }
}

/// cos(πz) with exact reduction of the real part.
pub fn cos_pi(z: Complex64) -> Complex64 {
    sin_pi(z + 0.5)
}

/// Γ(s) by the Lanczos approximation (g = 607/128), reflected for Re s < 1/2.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole {
            function: "gamma",
            at: format!("{s}"),
        });
    }
    Ok(gamma_unchecked(s))
}

fn gamma_unchecked(s: Complex64) -> Complex64 {
    if s.re < 0.5 {
        return PI / (sin_pi(s) * gamma_unchecked(1.0 - s));
    }
    let z = s - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &ck) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += ck / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let log_scale = (z + 0.5) * t.ln() - t;
    (2.0 * PI).sqrt() * log_scale.exp() * series
}

/// ln Γ(s).
///
/// For Re s ≥ 1/2 this is the analytic branch that is real on the positive
/// axis, so its imaginary part varies continuously along any path in the
/// right half-plane. For Re s < 1/2 the reflection formula is used with
/// principal logarithms.
pub fn ln_gamma(s: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole {
            function: "ln_gamma",
            at: format!("{s}"),
        });
    }
    if s.re < 0.5 {
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(s) - ln_gamma_right(1.0 - s));
    }
    Ok(ln_gamma_right(s))
}

/// Stirling series after upward shifting; requires Re s > 0.
pub(crate) fn ln_gamma_right(s: Complex64) -> Complex64 {
    let mut w = s;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < 15.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for &ck in &STIRLING_COEFFS {
        corr += ck * pow;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + corr - shift
}

fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 30.0 {
        return sin_pi(z).ln();
    }
    // One exponential dominates sin(πx); the other is below e^{-60π}.
    let n = z.re.round();
    let x = Complex64::new(z.re - n, z.im);
    let sign_term = Complex64::new(0.0, PI * n);
    let i = Complex64::i();
    let half = 0.5f64.ln();
    let main = if z.im > 0.0 {
        -i * PI * x + Complex64::new(half, PI / 2.0)
    } else {
        i * PI * x + Complex64::new(half, -PI / 2.0)
    };
    main + sign_term
}
