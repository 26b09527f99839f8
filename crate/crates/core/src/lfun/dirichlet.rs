use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::character::DirichletCharacter;
use super::zeta::{em_tail, integer_powers, shift_for, zeta};
use super::CompletedValue;
use crate::special::{gamma, is_nonpositive_integer, ComplexSum};
use crate::{Error, Result};

/// (x^{1−s} − 1)/(s − 1) without cancellation near s = 1.
fn pole_difference(s: Complex64, ln_x: f64) -> Complex64 {
    let w = (1.0 - s) * ln_x;
    let ratio = if w.norm() < 1e-3 {
        1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0))
    } else {
        (w.exp() - 1.0) / w
    };
    -ln_x * ratio
}

/// L(s, χ) = q^{−s} Σ_a χ(a) ζ(s, a/q) with Euler–Maclaurin Hurwitz sums.
pub fn dirichlet_l(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    let q = chi.modulus();
    if q == 1 {
        return zeta(s);
    }
    if chi.is_principal() && s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "dirichlet_l (principal character)",
            at: "1".into(),
        });
    }
    let shift = shift_for(s);
    let qf = q as f64;
    let powers = integer_powers(s, q as usize * shift);
    let mut main = ComplexSum::new();
    for (n, p) in powers.iter().enumerate().skip(1) {
        let chi_n = chi.value(n as u64);
        if chi_n.norm() != 0.0 {
            main.add(chi_n * p);
        }
    }
    // remainder of the Hurwitz sums ζ(s, a/q) beyond k = shift, scaled by q^{−s}
    let mut tail = ComplexSum::new();
    let mut pole = ComplexSum::new();
    for a in 1..q {
        let chi_a = chi.value(a);
        if chi_a.norm() == 0.0 {
            continue;
        }
        let x = shift as f64 + a as f64 / qf;
        tail.add(chi_a * em_tail(s, x));
        let ln_x = x.ln();
        if chi.is_principal() {
            pole.add(chi_a * ((1.0 - s) * ln_x).exp() / (s - 1.0));
        } else {
            // Σ χ(a) = 0, so the 1/(s−1) parts cancel exactly
            pole.add(chi_a * pole_difference(s, ln_x));
        }
    }
    let scale = (-s * qf.ln()).exp();
    Ok(main.value() + scale * (tail.value() + pole.value()))
}

/// Gauss sum τ(χ) and root number ε(χ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussData {
    pub tau: Complex64,
    pub epsilon: Complex64,
}

pub fn gauss_sum(chi: &DirichletCharacter) -> Result<GaussData> {
    if !chi.is_primitive() {
        return Err(Error::NonPrimitive {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        });
    }
    let q = chi.modulus();
    let tau: ComplexSum = (0..q)
        .map(|x| chi.value(x) * Complex64::from_polar(1.0, 2.0 * PI * x as f64 / q as f64))
        .collect();
    let tau = tau.value();
    let scaled = tau / (q as f64).sqrt();
    let epsilon = if chi.parity() == 0 {
        scaled
    } else {
        Complex64::new(0.0, -1.0) * scaled
    };
    Ok(GaussData { tau, epsilon })
}

/// Λ(s, χ) = π^{−(s+a)/2} Γ((s+a)/2) L(s, χ) for primitive nontrivial χ.
pub fn completed_lambda(s: Complex64, chi: &DirichletCharacter) -> Result<CompletedValue> {
    if chi.is_principal() {
        return Err(Error::TrivialCharacter);
    }
    if !chi.is_primitive() {
        return Err(Error::NonPrimitive {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        });
    }
    let raw = dirichlet_l(s, chi)?;
    let shifted = (s + chi.parity() as f64) / 2.0;
    if is_nonpositive_integer(shifted) {
        // trivial zero of L against a pole of Γ: Λ = 2π^k (−1)^k / k! · L'(s)
        let k = -shifted.re;
        let sign = if k % 2.0 == 0.0 { 1.0 } else { -1.0 };
        let factorial: f64 = (1..=k as u64).map(|j| j as f64).product();
        let completed = 2.0 * PI.powf(k) * sign / factorial * l_derivative(s, chi)?;
        return Ok(CompletedValue { raw, completed });
    }
    let factor = (-shifted * PI.ln()).exp() * gamma(shifted)?;
    Ok(CompletedValue {
        raw,
        completed: factor * raw,
    })
}

/// Five-point central difference.
fn l_derivative(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    let h = 1e-3;
    let f = |d: f64| dirichlet_l(s + d, chi);
    Ok((f(-2.0 * h)? - 8.0 * f(-h)? + 8.0 * f(h)? - f(2.0 * h)?) / (12.0 * h))
}

/// |Λ(s,χ) − ε(χ) q^{1/2−s} Λ(1−s, χ̄)|.
pub fn lambda_functional_residual(s: Complex64, chi: &DirichletCharacter) -> Result<f64> {
    let lhs = completed_lambda(s, chi)?.completed;
    let rhs = completed_lambda(1.0 - s, &chi.conj())?.completed;
    let eps = gauss_sum(chi)?.epsilon;
    let q = chi.modulus() as f64;
    let factor = ((0.5 - s) * q.ln()).exp();
    Ok((lhs - eps * factor * rhs).norm())
}
