//! A desk-scale laboratory for the Riemann zeta function and Dirichlet
//! L-functions.
//!
//! The crate evaluates ζ(s), L(s, χ) and their completed forms, locates and
//! certifies critical-line zeros, and checks the classical identities around
//! them numerically or in exact arithmetic:
//!
//! * [`special`]: Γ, ψ, Bernoulli numbers, arithmetic functions, li, θ.
//! * [`lfun`]: ζ, Dirichlet characters, L-functions, Gauss sums, completed
//!   functions, Hardy's Z, closed-form L-identities, Ramanujan τ.
//! * [`zeros`]: argument-principle counting, sign-change zero finding and the
//!   zero cache file.
//! * [`explicit`]: prime-side versus zero-side explicit formulas.
//! * [`stats`]: pair correlation and delta histograms of zero ordinates.
//! * [`ene`]: the star product on unit polynomials and Euler factors.
//! * [`dynzeta`]: zeta functions of subshifts of finite type and ℙ¹ over 𝔽_p.
//! * [`padic`]: Kummer congruences and p-adic interpolation of ζ(1 − n).
//! * [`cli`]: configuration, dispatch and reports for the `zetalab` binary.

pub mod cli;
pub mod dynzeta;
pub mod ene;
mod error;
pub mod explicit;
pub mod lfun;
pub mod padic;
pub mod special;
pub mod stats;
pub mod zeros;

pub use error::{Error, Result};
pub use special::{ComplexValue, ExactRational};
