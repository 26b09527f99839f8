use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ExactRational;

/// Exact coefficient fields of characteristic zero.
pub trait ExactField:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_integer(n: i64) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inverse(&self) -> Self;
    fn to_complex(&self) -> Complex64;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

fn rational_to_f64(q: &ExactRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflowed f64 on its own
        let shift = q.numer().bits().max(q.denom().bits()) as i64 - 900;
        if shift <= 0 {
            return f64::NAN;
        }
        let n = (q.numer() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        let d = (q.denom() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl ExactField for ExactRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_integer(n: i64) -> Self {
        ExactRational::from_integer(BigInt::from(n))
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
}

/// a + b√d for a squarefree radicand d > 1.
///
/// Elements with b = 0 are plain rationals and combine with any radicand;
/// mixing two different radicands with nonzero surd parts panics.
#[derive(Clone, Debug)]
pub struct QuadraticSurd {
    rational: ExactRational,
    surd: ExactRational,
    radicand: u64,
}

impl QuadraticSurd {
    pub fn new(rational: ExactRational, surd: ExactRational, radicand: u64) -> Self {
        assert!(radicand > 1, "radicand must exceed 1");
        QuadraticSurd {
            rational,
            surd,
            radicand,
        }
    }

    pub fn rational(q: ExactRational) -> Self {
        QuadraticSurd {
            rational: q,
            surd: Zero::zero(),
            radicand: 0,
        }
    }

    /// p^{−1/2} = (1/p)·√p.
    pub fn inverse_sqrt(p: u64) -> Self {
        QuadraticSurd::new(
            Zero::zero(),
            ExactRational::new(BigInt::one(), BigInt::from(p)),
            p,
        )
    }

    pub fn rational_part(&self) -> &ExactRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &ExactRational {
        &self.surd
    }

    /// The radicand, or `None` for a plain rational.
    pub fn radicand(&self) -> Option<u64> {
        (!Zero::is_zero(&self.surd)).then_some(self.radicand)
    }

    fn common_radicand(&self, other: &Self) -> u64 {
        match (self.radicand(), other.radicand()) {
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "cannot combine √{a} and √{b}");
                a
            }
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => 0,
        }
    }

    fn norm(&self) -> ExactRational {
        let d = ExactRational::from_integer(BigInt::from(self.radicand));
        &self.rational * &self.rational - &self.surd * &self.surd * d
    }
}

impl PartialEq for QuadraticSurd {
    fn eq(&self, other: &Self) -> bool {
        self.rational == other.rational
            && self.surd == other.surd
            && (Zero::is_zero(&self.surd) || self.radicand == other.radicand)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.radicand() {
            None => write!(f, "{}", self.rational),
            Some(d) if Zero::is_zero(&self.rational) => write!(f, "({})√{d}", self.surd),
            Some(d) => {
                let sign = if self.surd.is_negative() { '-' } else { '+' };
                write!(f, "{} {sign} ({})√{d}", self.rational, self.surd.abs())
            }
        }
    }
}

impl Add for QuadraticSurd {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let radicand = self.common_radicand(&rhs);
        QuadraticSurd {
            rational: self.rational + rhs.rational,
            surd: self.surd + rhs.surd,
            radicand,
        }
    }
}

impl Sub for QuadraticSurd {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadraticSurd {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticSurd {
            rational: -self.rational,
            surd: -self.surd,
            radicand: self.radicand,
        }
    }
}

impl Mul for QuadraticSurd {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let radicand = self.common_radicand(&rhs);
        let d = ExactRational::from_integer(BigInt::from(radicand));
        QuadraticSurd {
            rational: &self.rational * &rhs.rational + &self.surd * &rhs.surd * d,
            surd: &self.rational * &rhs.surd + &self.surd * &rhs.rational,
            radicand,
        }
    }
}

impl ExactField for QuadraticSurd {
    fn zero() -> Self {
        QuadraticSurd::rational(Zero::zero())
    }
    fn one() -> Self {
        QuadraticSurd::rational(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.rational) && Zero::is_zero(&self.surd)
    }
    fn from_integer(n: i64) -> Self {
        QuadraticSurd::rational(ExactRational::from_integer(BigInt::from(n)))
    }
    fn inverse(&self) -> Self {
        assert!(!ExactField::is_zero(self), "inverse of zero");
        // squarefree d > 1 makes the norm vanish only at zero
        let n = self.norm();
        QuadraticSurd {
            rational: &self.rational / &n,
            surd: -(&self.surd / &n),
            radicand: self.radicand,
        }
    }
    fn to_complex(&self) -> Complex64 {
        let root = (self.radicand as f64).sqrt();
        let s = if Zero::is_zero(&self.surd) { 0.0 } else { rational_to_f64(&self.surd) * root };
        Complex64::new(rational_to_f64(&self.rational) + s, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn surd_arithmetic() {
        let r = QuadraticSurd::new(q(1, 2), q(3, 1), 5);
        let inv = r.inverse();
        assert_eq!(r.clone() * inv, QuadraticSurd::one());
        let s = QuadraticSurd::inverse_sqrt(7);
        assert_eq!(s.clone() * s, QuadraticSurd::rational(q(1, 7)));
        assert!((r.to_complex().re - (0.5 + 3.0 * 5f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    #[should_panic]
    fn mixed_radicands_panic() {
        let _ = QuadraticSurd::inverse_sqrt(2) + QuadraticSurd::inverse_sqrt(3);
    }
}
