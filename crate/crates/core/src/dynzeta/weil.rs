use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use super::matrix::MAX_ORDER;
use super::series::ExactSeries;
use crate::special::is_prime;
use crate::{Error, ExactRational, Result};

type Poly = Vec<ExactRational>;

fn rat(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![ExactRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// The numerator and denominator of R(1/(c t)) after clearing (c t)^m.
fn substitute_reciprocal(num: &Poly, den: &Poly, c: &ExactRational) -> (Poly, Poly) {
    let m = num.len().max(den.len()) - 1;
    let flip = |p: &Poly| -> Poly {
        // Σ a_k (ct)^{−k} · (ct)^m = Σ a_k c^{m−k} t^{m−k}
        let mut out = vec![ExactRational::zero(); m + 1];
        for (k, a) in p.iter().enumerate() {
            out[m - k] = a * Pow::pow(c, (m - k) as u32);
        }
        out
    };
    (flip(num), flip(den))
}

fn as_strings<S: serde::Serializer>(v: &[ExactRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

/// Z(t, ℙ¹/𝔽_p) and the Weil-conjecture checks on it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeilP1 {
    pub prime: u64,
    /// exp(Σ N_k t^k / k) with N_k = p^k + 1.
    pub zeta: ExactSeries,
    pub matches_closed_form: bool,
    pub functional_equation_holds: bool,
    /// ε in Z(1/(pt)) = ε p t² Z(t).
    pub functional_equation_sign: i8,
    /// Degrees of P₀, P₁, P₂.
    pub betti_degrees: (usize, usize, usize),
    /// |α| for the inverse roots of P₀ then P₂.
    #[serde(serialize_with = "as_strings")]
    pub inverse_root_moduli: Vec<ExactRational>,
    /// Whether the inverse roots of P_j have modulus p^{j/2}.
    pub riemann_hypothesis_holds: bool,
}

pub fn weil_p1(p: u64, order: usize) -> Result<WeilP1> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if order > MAX_ORDER {
        return Err(Error::Precondition(format!("order {order} exceeds {MAX_ORDER}")));
    }
    let pb = BigInt::from(p);
    let pr = ExactRational::from_integer(pb.clone());

    let mut log = vec![ExactRational::zero()];
    for k in 1..=order {
        let nk: BigInt = Pow::pow(&pb, k as u32) + 1;
        log.push(ExactRational::new(nk, BigInt::from(k)));
    }
    let zeta = ExactSeries::new(log, order).exp()?;

    // P₀ = 1 − t, P₁ = 1, P₂ = 1 − pt and Z = P₁/(P₀P₂)
    let p0: Poly = vec![rat(1), rat(-1)];
    let p1: Poly = vec![rat(1)];
    let p2: Poly = vec![rat(1), -pr.clone()];
    let den = poly_mul(&p0, &p2);
    let closed = ExactSeries::new(den.clone(), order).recip()?.mul(&ExactSeries::new(p1.clone(), order));
    let matches_closed_form = closed == zeta;

    // Z(1/(pt)) = N'/D' against ε p t² N/D, cross-multiplied
    let (num_f, den_f) = substitute_reciprocal(&p1, &den, &pr);
    let lhs = poly_mul(&num_f, &den);
    let scaled = poly_mul(&vec![ExactRational::zero(), ExactRational::zero(), pr.clone()], &p1);
    let rhs = poly_mul(&scaled, &den_f);
    let neg: Poly = rhs.iter().map(|c| -c).collect();
    let functional_equation_sign = if lhs == rhs {
        1
    } else if lhs == neg {
        -1
    } else {
        0
    };

    let deg = |q: &Poly| q.len() - 1;
    let inverse_root_moduli = vec![-p0[1].clone(), -p2[1].clone()];
    let riemann_hypothesis_holds =
        inverse_root_moduli[0] == ExactRational::one() && inverse_root_moduli[1] == pr;

    Ok(WeilP1 {
        prime: p,
        zeta,
        matches_closed_form,
        functional_equation_holds: functional_equation_sign != 0,
        functional_equation_sign,
        betti_degrees: (deg(&p0), deg(&p1), deg(&p2)),
        inverse_root_moduli,
        riemann_hypothesis_holds,
    })
}
