//! Scalar special functions and arithmetic functions shared by the rest of
//! the crate.

mod arith;
mod bernoulli;
mod digamma;
mod expint;
mod gamma;
pub mod quad;
pub mod roots;
mod sum;
mod theta;

use num_complex::Complex64;
use num_rational::BigRational;

pub use arith::{divisors, is_prime, is_prime_power, mangoldt, mobius, primes_up_to, sigma_power};
pub(crate) use arith::factorize;
pub use bernoulli::{bernoulli, bernoulli_even_table};
pub use digamma::digamma;
pub use expint::{ei, ei_complex, li};
pub use gamma::{cos_pi, gamma, ln_gamma, sin_pi};
pub use sum::{CompensatedSum, ComplexSum};
pub use theta::{poisson_check, psi_half, theta};

/// A point of the complex plane in binary64.
pub type ComplexValue = Complex64;

/// An exact rational, always kept in lowest terms with positive denominator.
pub type ExactRational = BigRational;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Series are truncated once terms drop below this magnitude.
pub const SERIES_CUTOFF: f64 = 1e-17;

pub(crate) fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}
