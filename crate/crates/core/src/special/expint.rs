use std::f64::consts::PI;

use num_complex::Complex64;

use super::{CompensatedSum, ComplexSum, EULER_GAMMA, SERIES_CUTOFF};
use crate::{Error, Result};

/// Exponential integral Ei(x) = PV ∫_{-∞}^x e^t/t dt for real x ≠ 0.
pub fn ei(x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!("Ei is singular at x = {x}")));
    }
    if x < 0.0 {
        return Ok(-e1_real(-x));
    }
    if x <= 40.0 {
        let mut acc = CompensatedSum::new();
        acc.add(EULER_GAMMA);
        acc.add(x.ln());
        let mut power = 1.0;
        for k in 1..500 {
            power *= x / k as f64;
            let term = power / k as f64;
            acc.add(term);
            if term < SERIES_CUTOFF * acc.value().abs() {
                break;
            }
        }
        return Ok(acc.value());
    }
    Ok(x.exp() / x * asymptotic_real(x))
}

/// Σ k!/x^k truncated at the smallest term.
fn asymptotic_real(x: f64) -> f64 {
    let mut acc = CompensatedSum::new();
    let mut term = 1.0;
    acc.add(term);
    for k in 1..200 {
        let next = term * k as f64 / x;
        if next.abs() > term.abs() || next.abs() < SERIES_CUTOFF {
            break;
        }
        term = next;
        acc.add(term);
    }
    acc.value()
}

/// E1(y) for y > 0.
fn e1_real(y: f64) -> f64 {
    if y < 1.0 {
        let mut acc = CompensatedSum::new();
        acc.add(-EULER_GAMMA);
        acc.add(-y.ln());
        let mut power = 1.0;
        for k in 1..200 {
            power *= -y / k as f64;
            let term = power / k as f64;
            acc.add(-term);
            if term.abs() < SERIES_CUTOFF {
                break;
            }
        }
        acc.value()
    } else {
        e1_continued_fraction(Complex64::new(y, 0.0)).re
    }
}

/// E1(w) by the modified Lentz evaluation of its continued fraction,
/// valid off the negative real axis.
fn e1_continued_fraction(w: Complex64) -> Complex64 {
    const TINY: f64 = 1e-300;
    let mut b = w + 1.0;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..200_000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    h * (-w).exp()
}

/// Ei(z) for complex z, continued off the positive real axis into each
/// half-plane: Ei(z) = γ + ln z + Σ z^k/(k·k!) with the principal logarithm.
pub fn ei_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return ei(z.re).map(|v| Complex64::new(v, 0.0));
    }
    let r = z.norm();
    let near_positive_axis = z.re > 0.0 && z.im.abs() <= 0.3 * z.re;
    if r <= 5.0 || (near_positive_axis && r <= 40.0) {
        let mut acc = ComplexSum::new();
        acc.add(Complex64::new(EULER_GAMMA, 0.0));
        acc.add(z.ln());
        let mut power = Complex64::new(1.0, 0.0);
        for k in 1..500 {
            power *= z / k as f64;
            let term = power / k as f64;
            acc.add(term);
            if term.norm() < SERIES_CUTOFF * acc.value().norm() {
                break;
            }
        }
        return Ok(acc.value());
    }
    let branch = Complex64::new(0.0, PI.copysign(z.im));
    if near_positive_axis {
        let mut acc = ComplexSum::new();
        let mut term = Complex64::new(1.0, 0.0);
        acc.add(term);
        for k in 1..200 {
            let next = term * k as f64 / z;
            if next.norm() > term.norm() || next.norm() < SERIES_CUTOFF {
                break;
            }
            term = next;
            acc.add(term);
        }
        return Ok(z.exp() / z * acc.value() + branch);
    }
    Ok(-e1_continued_fraction(-z) + branch)
}

/// Principal-value logarithmic integral li(x) = Ei(ln x).
pub fn li(x: f64) -> Result<f64> {
    if x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!("li needs x > 0, got {x}")));
    }
    if x == 1.0 {
        return Err(Error::Domain("li has a logarithmic singularity at x = 1".into()));
    }
    ei(x.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn li_reference_values() {
        // li(2) = 1.04516378011749278484...
        assert!((li(2.0).unwrap() - 1.045_163_780_117_492_8).abs() < 1e-14);
        // li(10) = 6.1655995047872979...
        assert!((li(10.0).unwrap() - 6.165_599_504_787_297).abs() < 1e-12);
        assert!(li(1.0).is_err());
        assert!(li(0.0).is_err());
        // li(1/2) = -0.37867104306108...
        assert!((li(0.5).unwrap() + 0.378_671_043_061_087_97).abs() < 1e-13);
    }

    #[test]
    fn both_sides_of_the_asymptotic_switch() {
        // Ei(39.5) and Ei(40.5) to 30 digits
        let lo = ei(39.5).unwrap();
        let hi = ei(40.5).unwrap();
        assert!((lo / 3_710_918_879_133_970.634 - 1.0).abs() < 1e-14);
        assert!((hi / 9_831_586_535_606_509.881 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_branches_agree_across_methods() {
        // continued fraction vs power series at modulus 6
        for &(re, im) in &[(1.0, 5.9), (-3.0, 5.0), (2.0, -5.6)] {
            let z = Complex64::new(re, im);
            let series = {
                let mut acc = ComplexSum::new();
                acc.add(Complex64::new(EULER_GAMMA, 0.0));
                acc.add(z.ln());
                let mut p = Complex64::new(1.0, 0.0);
                for k in 1..200 {
                    p *= z / k as f64;
                    acc.add(p / k as f64);
                }
                acc.value()
            };
            let cf = ei_complex(z).unwrap();
            assert!((cf - series).norm() < 1e-11 * series.norm(), "{z}: {cf} vs {series}");
        }
    }

    #[test]
    fn complex_matches_real_axis_limit() {
        let x = 3.5;
        let upper = ei_complex(Complex64::new(x, 1e-12)).unwrap();
        assert!((upper.re - ei(x).unwrap()).abs() < 1e-10);
        assert!(upper.im.abs() < 1e-10);
    }
}
