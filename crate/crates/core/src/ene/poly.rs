use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::field::ExactField;
use crate::special::roots::polynomial_roots;
use crate::{Error, ExactRational, Result};

fn trim<F: ExactField>(c: &mut Vec<F>) {
    while c.len() > 1 && c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

fn mul_raw<F: ExactField>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(&mut out);
    out
}

/// Division with remainder in F[X]; `b` must be nonzero.
fn divrem<F: ExactField>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let db = b.len() - 1;
    let lead_inv = b[db].inverse();
    let mut r = a.to_vec();
    if a.len() < b.len() {
        return (vec![F::zero()], r);
    }
    let mut q = vec![F::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone() * lead_inv.clone();
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] = r[k + j].clone() - c.clone() * y.clone();
        }
        q[k] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn is_zero_poly<F: ExactField>(a: &[F]) -> bool {
    a.iter().all(|x| x.is_zero())
}

fn gcd_raw<F: ExactField>(a: &[F], b: &[F]) -> Vec<F> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !is_zero_poly(&y) {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// A polynomial 1 + a₁X + … + a_dX^d, i.e. Π(1 − βX) over its inverse roots β.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitPolynomial<F: ExactField = ExactRational> {
    coeffs: Vec<F>,
}

impl<F: ExactField> UnitPolynomial<F> {
    /// Ascending coefficients; the first must be 1.
    pub fn new(coeffs: Vec<F>) -> Result<Self> {
        if coeffs.first().map_or(true, |c| !c.is_one()) {
            return Err(Error::Precondition("unit polynomial needs constant term 1".into()));
        }
        let mut coeffs = coeffs;
        trim(&mut coeffs);
        Ok(UnitPolynomial { coeffs })
    }

    fn from_raw(mut coeffs: Vec<F>) -> Self {
        trim(&mut coeffs);
        debug_assert!(coeffs[0].is_one());
        UnitPolynomial { coeffs }
    }

    pub fn one() -> Self {
        UnitPolynomial { coeffs: vec![F::one()] }
    }

    /// 1 − βX.
    pub fn linear(beta: F) -> Self {
        Self::from_raw(vec![F::one(), -beta])
    }

    /// Π(1 − βX).
    pub fn from_inverse_roots(betas: &[F]) -> Self {
        betas
            .iter()
            .fold(Self::one(), |acc, b| acc.mul(&Self::linear(b.clone())))
    }

    pub fn coefficients(&self) -> &[F] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &F {
        &self.coeffs[self.degree()]
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_raw(mul_raw(&self.coeffs, &other.coeffs))
    }

    /// Power sums c_m = Σβ^m of the inverse roots for m = 1..=n.
    pub fn power_sums(&self, n: usize) -> Vec<F> {
        let a = |j: usize| self.coeffs.get(j).cloned().unwrap_or_else(F::zero);
        let mut c: Vec<F> = Vec::with_capacity(n);
        for m in 1..=n {
            // Newton: c_m = −m a_m − Σ_{i<m} a_i c_{m−i}
            let mut acc = -(F::from_integer(m as i64) * a(m));
            for i in 1..m.min(self.degree() + 1) {
                acc = acc - a(i) * c[m - i - 1].clone();
            }
            c.push(acc);
        }
        c
    }

    /// The unit polynomial of degree `degree` whose inverse-root power sums
    /// are `sums[0..degree]`.
    pub fn from_power_sums(sums: &[F], degree: usize) -> Self {
        let mut e = vec![F::one()];
        for m in 1..=degree {
            // m a_m = −Σ_{i=1}^{m} c_i a_{m−i}
            let mut acc = F::zero();
            for i in 1..=m {
                acc = acc + sums[i - 1].clone() * e[m - i].clone();
            }
            e.push(-(acc * F::from_integer(m as i64).inverse()));
        }
        Self::from_raw(e)
    }

    /// A⋆B with inverse roots βγ over all pairs.
    pub fn star(&self, other: &Self) -> Self {
        let d = self.degree() * other.degree();
        let a = self.power_sums(d);
        let b = other.power_sums(d);
        let prod: Vec<F> = a.into_iter().zip(b).map(|(x, y)| x * y).collect();
        Self::from_power_sums(&prod, d)
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_complex()).collect()
    }

    /// Inverse roots in binary64, from the reversed polynomial.
    pub fn inverse_roots_numeric(&self) -> Vec<Complex64> {
        if self.degree() == 0 {
            return Vec::new();
        }
        // β are the roots of X^d + a₁X^{d−1} + … + a_d
        let rev: Vec<Complex64> = self.to_complex().into_iter().rev().collect();
        polynomial_roots(&rev)
    }
}

impl<F: ExactField> fmt::Display for UnitPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            match k {
                1 => write!(f, " + ({c})X")?,
                _ => write!(f, " + ({c})X^{k}")?,
            }
        }
        Ok(())
    }
}

impl<F: ExactField> Serialize for UnitPolynomial<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// A reduced quotient of unit polynomials.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitFraction<F: ExactField = ExactRational> {
    numerator: UnitPolynomial<F>,
    denominator: UnitPolynomial<F>,
}

impl<F: ExactField> UnitFraction<F> {
    pub fn new(numerator: UnitPolynomial<F>, denominator: UnitPolynomial<F>) -> Self {
        let g = gcd_raw(&numerator.coeffs, &denominator.coeffs);
        if g.len() == 1 {
            return UnitFraction {
                numerator,
                denominator,
            };
        }
        // unit polynomials are prime to X, so g(0) ≠ 0
        let scale = g[0].inverse();
        let g: Vec<F> = g.into_iter().map(|c| c * scale.clone()).collect();
        let (n, _) = divrem(&numerator.coeffs, &g);
        let (d, _) = divrem(&denominator.coeffs, &g);
        UnitFraction {
            numerator: UnitPolynomial::from_raw(n),
            denominator: UnitPolynomial::from_raw(d),
        }
    }

    pub fn polynomial(p: UnitPolynomial<F>) -> Self {
        UnitFraction {
            numerator: p,
            denominator: UnitPolynomial::one(),
        }
    }

    /// 1/p.
    pub fn reciprocal_of(p: UnitPolynomial<F>) -> Self {
        UnitFraction {
            numerator: UnitPolynomial::one(),
            denominator: p,
        }
    }

    /// The star unit 1 − X.
    pub fn unit() -> Self {
        Self::polynomial(UnitPolynomial::linear(F::one()))
    }

    pub fn numerator(&self) -> &UnitPolynomial<F> {
        &self.numerator
    }

    pub fn denominator(&self) -> &UnitPolynomial<F> {
        &self.denominator
    }

    pub fn recip(&self) -> Self {
        UnitFraction {
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.numerator.mul(&other.numerator),
            self.denominator.mul(&other.denominator),
        )
    }

    /// (A/B)⋆(C/D) = (A⋆C)(B⋆D) / ((A⋆D)(B⋆C)).
    pub fn star(&self, other: &Self) -> Self {
        let (a, b) = (&self.numerator, &self.denominator);
        let (c, d) = (&other.numerator, &other.denominator);
        Self::new(a.star(c).mul(&b.star(d)), a.star(d).mul(&b.star(c)))
    }
}

impl<F: ExactField> fmt::Display for UnitFraction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.degree() == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "[{}] / [{}]", self.numerator, self.denominator)
        }
    }
}

pub fn star_poly<F: ExactField>(a: &UnitPolynomial<F>, b: &UnitPolynomial<F>) -> UnitPolynomial<F> {
    a.star(b)
}

pub fn star_fraction<F: ExactField>(f: &UnitFraction<F>, g: &UnitFraction<F>) -> UnitFraction<F> {
    f.star(g)
}
