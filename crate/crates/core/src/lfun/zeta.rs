use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::special::{bernoulli, bernoulli_even_table, primes_up_to, ComplexSum, ExactRational};
use crate::{Error, Result};

/// Maximum number of Euler–Maclaurin correction terms.
const MAX_CORRECTIONS: usize = 30;
/// Smallest shift parameter.
const MIN_SHIFT: usize = 20;

/// B_{2j}/(2j)! for j = 1..=MAX_CORRECTIONS.
fn correction_coeffs() -> &'static [f64; MAX_CORRECTIONS] {
    static COEFFS: OnceLock<[f64; MAX_CORRECTIONS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let table = bernoulli_even_table(MAX_CORRECTIONS);
        let mut out = [0.0; MAX_CORRECTIONS];
        let mut factorial = ExactRational::one();
        for j in 1..=MAX_CORRECTIONS {
            factorial *= ExactRational::from_integer(BigInt::from((2 * j - 1) * (2 * j)));
            out[j - 1] = (&table[j] / &factorial).to_f64().expect("finite coefficient");
        }
        out
    })
}

pub(crate) fn shift_for(s: Complex64) -> usize {
    MIN_SHIFT.max((s.im.abs() / 2.0).ceil() as usize)
}

/// Integers below this bound have their n^{−s} assembled from prime powers.
const SIEVE_LIMIT: usize = 1 << 20;

fn smallest_prime_factors() -> &'static [u32] {
    static SPF: OnceLock<Vec<u32>> = OnceLock::new();
    SPF.get_or_init(|| {
        let mut spf = vec![0u32; SIEVE_LIMIT];
        for n in 2..SIEVE_LIMIT {
            if spf[n] == 0 {
                for m in (n..SIEVE_LIMIT).step_by(n) {
                    if spf[m] == 0 {
                        spf[m] = n as u32;
                    }
                }
            }
        }
        spf
    })
}

fn power(s: Complex64, n: usize) -> Complex64 {
    let ln_n = (n as f64).ln();
    let (sin, cos) = (s.im * ln_n).sin_cos();
    let mag = (-s.re * ln_n).exp();
    Complex64::new(mag * cos, -mag * sin)
}

/// n^{−s} for n = 0..=n_max (entry 0 unused), multiplicatively.
pub(crate) fn integer_powers(s: Complex64, n_max: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n_max + 1];
    if n_max >= 1 {
        out[1] = Complex64::new(1.0, 0.0);
    }
    let spf = smallest_prime_factors();
    for n in 2..=n_max {
        out[n] = if n < SIEVE_LIMIT && spf[n] as usize != n {
            let p = spf[n] as usize;
            out[p] * out[n / p]
        } else {
            power(s, n)
        };
    }
    out
}

/// Euler–Maclaurin remainder ½x^{−s} + Σ_j B_{2j}/(2j)! · s(s+1)…(s+2j−2) x^{−s−2j+1},
/// without the x^{1−s}/(s−1) term.
pub(crate) fn em_tail(s: Complex64, x: f64) -> Complex64 {
    let x_pow = (-s * x.ln()).exp();
    let mut acc = ComplexSum::new();
    acc.add(0.5 * x_pow);
    let coeffs = correction_coeffs();
    let inv_x2 = 1.0 / (x * x);
    let mut factor = s * x_pow / x;
    let mut prev = f64::INFINITY;
    for (j, &bj) in coeffs.iter().enumerate() {
        let j = j + 1;
        if j > 1 {
            let k = (2 * j) as f64;
            factor *= (s + (k - 3.0)) * (s + (k - 2.0)) * inv_x2;
        }
        let term = bj * factor;
        let size = term.norm();
        acc.add(term);
        if size < 1e-17 * acc.value().norm() || size > prev {
            break;
        }
        prev = size;
    }
    acc.value()
}

/// Riemann ζ(s) by Euler–Maclaurin summation.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "zeta",
            at: "1".into(),
        });
    }
    Ok(zeta_unchecked(s))
}

pub(crate) fn zeta_unchecked(s: Complex64) -> Complex64 {
    if s.im == 0.0 && s.re < 0.0 && s.re % 2.0 == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let shift = shift_for(s);
    let powers = integer_powers(s, shift);
    let main: ComplexSum = powers[1..].iter().copied().collect();
    let x = (shift + 1) as f64;
    main.value() + em_tail(s, x) + ((1.0 - s) * x.ln()).exp() / (s - 1.0)
}

/// |(s−1)ζ(s) − 1| at s = 1 + ε.
pub fn zeta_residue_defect(eps: f64) -> f64 {
    let s = Complex64::new(1.0 + eps, 0.0);
    ((s - 1.0) * zeta_unchecked(s) - 1.0).norm()
}

/// Residue check at the default offset ε = 10⁻⁶.
pub fn zeta_residue_check() -> f64 {
    zeta_residue_defect(1e-6)
}

/// ζ(1−n) = −B_n/n as an exact rational, n ≥ 1.
///
/// For n = 1 the identity needs B_1 = +1/2, the opposite sign of the
/// generating-function convention used by [`bernoulli`].
pub fn zeta_negative(n: usize) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::Domain("zeta_negative needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(ExactRational::new(BigInt::from(-1), BigInt::from(2)));
    }
    Ok(-bernoulli(n) / ExactRational::from_integer(BigInt::from(n)))
}

/// ζ(2n) = c_n π^{2n} with c_n = (−1)^{n+1} 2^{2n−1} B_{2n}/(2n)! exact.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenZetaValue {
    pub coefficient: ExactRational,
    pub value: f64,
}

pub fn zeta_even(n: usize) -> Result<EvenZetaValue> {
    if n == 0 {
        return Err(Error::Domain("zeta_even needs n >= 1".into()));
    }
    let b = bernoulli(2 * n);
    let mut factorial = BigInt::one();
    for k in 2..=(2 * n) {
        factorial *= k;
    }
    let mut coefficient = b * ExactRational::new(BigInt::one() << (2 * n - 1), factorial);
    if n % 2 == 0 {
        coefficient = -coefficient;
    }
    let value = coefficient.to_f64().unwrap_or(0.0) * PI.powi(2 * n as i32);
    Ok(EvenZetaValue { coefficient, value })
}

/// Truncated Euler product Π_{p ≤ P} (1 − p^{−s})^{−1}.
pub fn euler_product(s: Complex64, prime_limit: u64) -> Complex64 {
    primes_up_to(prime_limit)
        .into_iter()
        .fold(Complex64::new(1.0, 0.0), |acc, p| {
            acc / (1.0 - (-s * (p as f64).ln()).exp())
        })
}

impl EvenZetaValue {
    pub fn numerator_divisible_by(&self, d: u64) -> bool {
        (self.coefficient.numer() % BigInt::from(d)).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn special_values() {
        assert!((zeta(re(2.0)).unwrap().re - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta(re(4.0)).unwrap().re - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta(re(0.0)).unwrap().re + 0.5).abs() < 1e-14);
        assert!(zeta(re(-2.0)).unwrap().norm() < 1e-13);
        assert!((zeta(re(-1.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-13);
        // ζ(1/2) = -1.4603545088095868...
        assert!((zeta(re(0.5)).unwrap().re + 1.460_354_508_809_586_8).abs() < 1e-13);
        assert!(zeta(re(1.0)).is_err());
    }

    #[test]
    fn matches_dirichlet_series_right_of_the_strip() {
        for &(sigma, t) in &[(1.6, 3.0), (2.5, -40.0), (3.0, 100.0)] {
            let s = Complex64::new(sigma, t);
            let n = 200_000usize;
            let direct: ComplexSum = (1..=n).map(|k| (-s * (k as f64).ln()).exp()).collect();
            // tail bound ∫_N^∞ x^{-σ} dx
            let tail = (n as f64).powf(1.0 - sigma) / (sigma - 1.0);
            assert!((zeta(s).unwrap() - direct.value()).norm() <= tail);
        }
    }

    #[test]
    fn known_value_high_on_the_line() {
        // ζ(1/2 + 100i) = 2.6926198856813... - 0.0203860296... i
        let z = zeta(Complex64::new(0.5, 100.0)).unwrap();
        assert!((z - Complex64::new(2.692_619_885_681_324, -0.020_386_029_602_598_16)).norm() < 1e-11);
        // 30-digit reference values
        let cases = [
            (Complex64::new(0.5, 1000.0), Complex64::new(0.356_334_367_194_396_06, 0.931_997_831_232_993_7), 1e-11),
            (Complex64::new(0.5, 2000.0), Complex64::new(0.790_610_233_326_534_7, 0.017_205_108_684_126_07), 1e-8),
            (Complex64::new(-2.5, 30.0), Complex64::new(-104.127_798_221_042_08, 16.692_591_553_446_933), 1e-11),
        ];
        for (s, expected, tol) in cases {
            let z = zeta(s).unwrap();
            assert!((z - expected).norm() <= tol * expected.norm(), "s={s}: {z}");
        }
    }

    #[test]
    fn exact_negative_values() {
        let q = |n: i64, d: i64| ExactRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(zeta_negative(1).unwrap(), q(-1, 2));
        assert_eq!(zeta_negative(2).unwrap(), q(-1, 12));
        assert_eq!(zeta_negative(4).unwrap(), q(1, 120));
        assert_eq!(zeta_negative(3).unwrap(), q(0, 1));
    }

    #[test]
    fn even_values() {
        let q = |n: i64, d: i64| ExactRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(zeta_even(1).unwrap().coefficient, q(1, 6));
        assert_eq!(zeta_even(2).unwrap().coefficient, q(1, 90));
        let six = zeta_even(6).unwrap();
        assert!(six.numerator_divisible_by(691));
        for n in 1..=8 {
            let v = zeta_even(n).unwrap();
            let z = zeta(re(2.0 * n as f64)).unwrap().re;
            assert!(((v.value - z) / z).abs() < 1e-12);
        }
    }

    #[test]
    fn residue() {
        assert!(zeta_residue_check() <= 1e-5);
        assert!(zeta_residue_defect(1e-3) <= 1e-2);
        assert!(zeta_residue_defect(1e-9) <= 1e-5);
    }
}
