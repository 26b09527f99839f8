//! Explicit formulas: sieved prime-side step functions against sums over
//! zeta zeros.

mod delsarte;
mod formulas;
mod newton;
mod sums;
mod tables;

pub use delsarte::{
    calibrate_delsarte, delsarte_pairing, delsarte_pairing_with, DelsarteConvention, DelsartePairing, TestFunction,
    TestFunctionKind, DELSARTE_CALIBRATION,
};
pub use formulas::{
    log_two_pi, pi_star_formula, pi_star_tail_integral, psi_explicit, ramanujan_density, ramanujan_set_test, riemann_r,
    zeta_log_derivative_at_zero, PiStarTerms, RamanujanDensity,
};
pub use newton::{log_coefficients, newton_poisson_check, newton_power_sums, MAX_ORDER};
pub use sums::{cramer_partial, landau_slope, landau_sum, CramerValue, LandauFit, CRAMER_MIN_IM};
pub use tables::{is_jump_point, PrimeTables};
