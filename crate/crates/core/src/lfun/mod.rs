//! ζ(s), Dirichlet L-functions, their completions, and closed-form identities.

mod character;
mod dirichlet;
mod identities;
mod tau;
mod zeta;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use character::{chi3, chi4, group_order, make_character, DirichletCharacter};
pub use dirichlet::{completed_lambda, dirichlet_l, gauss_sum, lambda_functional_residual, GaussData};
pub use identities::{eisenstein_l, hasse_weil_p1, EisensteinCheck, HasseWeilCheck};
pub use tau::{ramanujan_tau, tau_hecke_defects, TauChecks};
pub use zeta::{
    euler_product, zeta, zeta_even, zeta_negative, zeta_residue_check, zeta_residue_defect,
    EvenZetaValue,
};

pub(crate) use zeta::zeta_unchecked;

use crate::special::{gamma, ln_gamma};
use crate::{Error, Result};

/// A function value together with its completion (ξ or Λ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompletedValue {
    pub raw: Complex64,
    pub completed: Complex64,
}

/// ξ(s) = ½ s(s−1) π^{−s/2} Γ(s/2) ζ(s).
///
/// Evaluated as (s−1) π^{−s/2} Γ(1+s/2) ζ(s), which is regular at s = 0;
/// near s = 1 the symmetry ξ(s) = ξ(1−s) moves the point next to 0.
pub fn xi(s: Complex64) -> CompletedValue {
    let one = Complex64::new(1.0, 0.0);
    if s == one || s == Complex64::new(0.0, 0.0) {
        let raw = if s == one { Complex64::new(f64::INFINITY, 0.0) } else { Complex64::new(-0.5, 0.0) };
        return CompletedValue { raw, completed: Complex64::new(0.5, 0.0) };
    }
    let raw = zeta_unchecked(s);
    let w = if (s - 1.0).norm() < 0.5 { 1.0 - s } else { s };
    let zw = if w == s { raw } else { zeta_unchecked(w) };
    let completed = (w - 1.0) * (-w / 2.0 * PI.ln()).exp() * gamma(1.0 + w / 2.0).expect("Re > 0") * zw;
    CompletedValue { raw, completed }
}

/// Ξ(t) = ξ(1/2 + it).
#[allow(non_snake_case)]
pub fn Xi(t: Complex64) -> Complex64 {
    xi(Complex64::new(0.5, 0.0) + Complex64::i() * t).completed
}

/// The L-function families whose zeros the crate can hunt on the critical line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Family {
    Zeta,
    Dirichlet(DirichletCharacter),
}

impl Family {
    /// Wraps a character, mapping the character mod 1 back to ζ.
    pub fn from_character(chi: DirichletCharacter) -> Self {
        if chi.modulus() == 1 {
            Family::Zeta
        } else {
            Family::Dirichlet(chi)
        }
    }

    pub fn chi3() -> Self {
        Family::Dirichlet(chi3())
    }

    /// Fails unless the family has a real critical-line rotation.
    pub fn check_supported(&self) -> Result<()> {
        match self {
            Family::Zeta => Ok(()),
            Family::Dirichlet(chi) if chi.is_quadratic() && chi.is_primitive() => Ok(()),
            Family::Dirichlet(chi) => Err(Error::UnsupportedFamily(format!(
                "chi:{}:{} is not a primitive quadratic character",
                chi.modulus(),
                chi.index()
            ))),
        }
    }

    /// ζ(s) or L(s, χ).
    pub fn evaluate(&self, s: Complex64) -> Result<Complex64> {
        match self {
            Family::Zeta => zeta(s),
            Family::Dirichlet(chi) => dirichlet_l(s, chi),
        }
    }

    /// Phase θ(t) with e^{iθ(t)} F(1/2+it) real.
    pub fn theta(&self, t: f64) -> f64 {
        match self {
            Family::Zeta => ln_gamma(Complex64::new(0.25, t / 2.0)).expect("Re > 0").im - t / 2.0 * PI.ln(),
            Family::Dirichlet(chi) => {
                let a = chi.parity() as f64;
                let q = chi.modulus() as f64;
                ln_gamma(Complex64::new((0.5 + a) / 2.0, t / 2.0)).expect("Re > 0").im + t / 2.0 * (q / PI).ln()
            }
        }
    }

    /// Riemann–von Mangoldt main term for the number of zeros with 0 < γ ≤ T.
    pub fn main_term(&self, t: f64) -> f64 {
        let x = t / (2.0 * PI);
        match self {
            Family::Zeta => x * x.ln() - x,
            Family::Dirichlet(chi) => x * (chi.modulus() as f64 * x).ln() - x,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Zeta => write!(f, "zeta"),
            Family::Dirichlet(chi) => write!(f, "chi:{}:{}", chi.modulus(), chi.index()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `zeta`, `chi3`, `chi4`, or `chi:<modulus>:<index>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta" => return Ok(Family::Zeta),
            "chi3" => return Ok(Family::Dirichlet(chi3())),
            "chi4" => return Ok(Family::Dirichlet(chi4())),
            _ => {}
        }
        let bad = || Error::Usage(format!("unknown family `{s}`"));
        let rest = s.strip_prefix("chi:").ok_or_else(bad)?;
        let (q, i) = rest.split_once(':').ok_or_else(bad)?;
        let q: u64 = q.parse().map_err(|_| bad())?;
        let i: u64 = i.parse().map_err(|_| bad())?;
        Ok(Family::from_character(make_character(q, i)?))
    }
}

/// Hardy's Z: the real rotation e^{iθ(t)} F(1/2 + it).
pub fn hardy_z(t: f64, family: &Family) -> Result<f64> {
    family.check_supported()?;
    Ok(hardy_z_unchecked(t, family))
}

pub(crate) fn hardy_z_unchecked(t: f64, family: &Family) -> f64 {
    let s = Complex64::new(0.5, t);
    let value = match family {
        Family::Zeta => zeta_unchecked(s),
        Family::Dirichlet(chi) => dirichlet_l(s, chi).expect("nonprincipal character"),
    };
    (Complex64::from_polar(1.0, family.theta(t)) * value).re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_symmetry_and_special_points() {
        let s = Complex64::new(0.3, 7.0);
        let a = xi(s).completed;
        let b = xi(1.0 - s).completed;
        assert!((a - b).norm() <= 1e-10 * (1.0 + a.norm()));
        assert!((xi(Complex64::new(0.0, 0.0)).completed - 0.5).norm() < 1e-15);
        assert!((xi(Complex64::new(1.0, 0.0)).completed - 0.5).norm() < 1e-15);
        // Laurent cancellation: ξ(ε) → 1/2
        let near = xi(Complex64::new(1e-7, 0.0)).completed;
        assert!((near - 0.5).norm() < 1e-6);
        assert!(Xi(Complex64::new(14.0, 0.0)).im.abs() < 1e-10);
    }

    #[test]
    fn hardy_z_examples() {
        let z0 = hardy_z(0.0, &Family::Zeta).unwrap();
        assert!((z0 - zeta(Complex64::new(0.5, 0.0)).unwrap().re).abs() < 1e-14);
        assert!(z0 < 0.0);
        let a = hardy_z(14.0, &Family::Zeta).unwrap();
        let b = hardy_z(14.3, &Family::Zeta).unwrap();
        assert!(a.signum() != b.signum());
        let z20 = hardy_z(20.0, &Family::Zeta).unwrap();
        let direct = zeta(Complex64::new(0.5, 20.0)).unwrap().norm();
        assert!((z20.abs() - direct).abs() <= 1e-10 * direct);
    }

    #[test]
    fn hardy_z_for_chi3_is_real_rotation() {
        let fam = Family::chi3();
        for t in [1.0, 8.0, 33.3] {
            let s = Complex64::new(0.5, t);
            let l = dirichlet_l(s, &chi3()).unwrap();
            let rotated = Complex64::from_polar(1.0, fam.theta(t)) * l;
            assert!(rotated.im.abs() < 1e-12 * (1.0 + l.norm()), "t={t}: {rotated}");
        }
        let complex_chi = Family::Dirichlet(make_character(5, 1).unwrap());
        assert!(hardy_z(3.0, &complex_chi).is_err());
    }

    #[test]
    fn family_labels_round_trip() {
        for label in ["zeta", "chi:3:1", "chi:4:1", "chi:5:2"] {
            let fam: Family = label.parse().unwrap();
            assert_eq!(fam.to_string(), label);
        }
        assert_eq!("chi3".parse::<Family>().unwrap(), Family::chi3());
        assert!("eta".parse::<Family>().is_err());
    }
}
