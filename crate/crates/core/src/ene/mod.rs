//! The star product A⋆B on unit polynomials, whose inverse roots are the
//! pairwise products of those of A and B, extended to rational fractions
//! and factor-wise to Euler products.
//!
//! Everything is exact. ⋆ is computed from inverse-root power sums through
//! Newton's identities, so no roots are ever extracted. Coefficients live in
//! ℚ or in ℚ(√p), which is where p^{−1/2} lives.

mod euler;
mod field;
mod poly;

pub use euler::{
    dirichlet_factor, dirichlet_factors, ene_euler, unit_equation_check, unit_equation_holds,
    zeta_factor, zeta_factors, EulerFactor,
};
pub use field::{ExactField, QuadraticSurd};
pub use poly::{star_fraction, star_poly, UnitFraction, UnitPolynomial};
