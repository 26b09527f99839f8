//! Dynamical zeta functions of subshifts of finite type,
//! Z(t) = exp(Σ N_n tⁿ/n) with N_n = Tr Aⁿ, and the zeta function of the
//! projective line over 𝔽_p. All series are exact rationals.

mod matrix;
mod series;
mod weil;

pub use matrix::{log_det_identity, periodic_counts, zeta_rationality, Rationality, TransitionMatrix, MAX_ORDER};
pub use series::ExactSeries;
pub use weil::{weil_p1, WeilP1};
