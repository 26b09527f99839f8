use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::{Error, ExactRational, Result};

/// A power series Σ c_k t^k known exactly up to t^order.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactSeries {
    coeffs: Vec<ExactRational>,
}

fn int(n: usize) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

impl ExactSeries {
    /// Pads or truncates `coeffs` to length order + 1.
    pub fn new(mut coeffs: Vec<ExactRational>, order: usize) -> Self {
        coeffs.resize(order + 1, ExactRational::zero());
        ExactSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(coeffs: I, order: usize) -> Self {
        Self::new(coeffs.into_iter().map(ExactRational::from_integer).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![ExactRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> &ExactRational {
        &self.coeffs[k]
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(), n)
    }

    pub fn neg(&self) -> Self {
        ExactSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![ExactRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        ExactSeries { coeffs: out }
    }

    /// 1/f; needs f(0) ≠ 0.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain("series with zero constant term is not invertible".into()));
        }
        if self.is_integral() && c0.abs().is_one() {
            return Ok(self.recip_unit_integral());
        }
        let inv0 = c0.recip();
        let mut g = vec![inv0.clone()];
        for n in 1..=self.order() {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &g[n - k];
            }
            g.push(-acc * &inv0);
        }
        Ok(ExactSeries { coeffs: g })
    }

    /// exp f; needs f(0) = 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("exp needs a series without constant term".into()));
        }
        // E' = f'E:  n e_n = Σ_{k=1}^{n} k f_k e_{n−k}
        if let Some(e) = self.exp_integral() {
            return Ok(e);
        }
        let mut e = vec![ExactRational::one()];
        for n in 1..=self.order() {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * int(k) * &e[n - k];
                }
            }
            e.push(acc / int(n));
        }
        Ok(ExactSeries { coeffs: e })
    }

    fn recip_unit_integral(&self) -> Self {
        let c: Vec<BigInt> = self.coeffs.iter().map(|x| x.to_integer()).collect();
        let sign = c[0].clone();
        let mut g = vec![sign.clone()];
        for n in 1..c.len() {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !c[k].is_zero() {
                    acc += &c[k] * &g[n - k];
                }
            }
            g.push(-acc * &sign);
        }
        Self::from_integers(g, self.order())
    }

    /// The exp recurrence in integers when every k f_k is an integer and
    /// every division by n is exact; `None` otherwise.
    fn exp_integral(&self) -> Option<Self> {
        let kf: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let v = f * int(k);
                v.is_integer().then(|| v.to_integer())
            })
            .collect::<Option<_>>()?;
        let mut e = vec![BigInt::one()];
        for n in 1..kf.len() {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !kf[k].is_zero() {
                    acc += &kf[k] * &e[n - k];
                }
            }
            let (q, r) = acc.div_rem(&BigInt::from(n));
            if !r.is_zero() {
                return None;
            }
            e.push(q);
        }
        Some(Self::from_integers(e, self.order()))
    }

    /// log f; needs f(0) = 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("log needs a series with constant term 1".into()));
        }
        // f L' = f':  n l_n = n f_n − Σ_{k=1}^{n−1} k l_k f_{n−k}
        let mut l = vec![ExactRational::zero()];
        for n in 1..=self.order() {
            let mut acc = &self.coeffs[n] * int(n);
            for k in 1..n {
                if !l[k].is_zero() {
                    acc -= &l[k] * int(k) * &self.coeffs[n - k];
                }
            }
            l.push(acc / int(n));
        }
        Ok(ExactSeries { coeffs: l })
    }
}

impl fmt::Display for ExactSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for ExactSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
