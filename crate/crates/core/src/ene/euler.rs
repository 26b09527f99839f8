use serde::Serialize;

use super::field::{ExactField, QuadraticSurd};
use super::poly::{UnitFraction, UnitPolynomial};
use crate::lfun::DirichletCharacter;
use crate::special::is_prime;
use crate::{Error, ExactRational, Result};

/// The local factor at p of an Euler product, as a fraction in
/// X = p^{−(s−1/2)}.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EulerFactor<F: ExactField = QuadraticSurd> {
    prime: u64,
    fraction: UnitFraction<F>,
}

impl<F: ExactField> EulerFactor<F> {
    pub fn new(prime: u64, fraction: UnitFraction<F>) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        Ok(EulerFactor { prime, fraction })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn fraction(&self) -> &UnitFraction<F> {
        &self.fraction
    }

    /// The star unit 1 − X at p.
    pub fn unit(prime: u64) -> Result<Self> {
        Self::new(prime, UnitFraction::unit())
    }
}

/// (1 − p^{−1/2}X)^{−1}, the ζ factor (1 − p^{−s})^{−1}.
pub fn zeta_factor(p: u64) -> Result<EulerFactor> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let a = UnitPolynomial::linear(QuadraticSurd::inverse_sqrt(p));
    EulerFactor::new(p, UnitFraction::reciprocal_of(a))
}

/// (1 − χ(p)p^{−1/2}X)^{−1} for a real character χ.
pub fn dirichlet_factor(chi: &DirichletCharacter, p: u64) -> Result<EulerFactor> {
    if !chi.is_quadratic() && !chi.is_principal() {
        return Err(Error::Precondition("exact Euler factors need a real character".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let v = chi.value(p).re.round() as i64;
    let beta = QuadraticSurd::inverse_sqrt(p) * QuadraticSurd::from_integer(v);
    EulerFactor::new(p, UnitFraction::reciprocal_of(UnitPolynomial::linear(beta)))
}

pub fn zeta_factors(primes: &[u64]) -> Result<Vec<EulerFactor>> {
    primes.iter().map(|&p| zeta_factor(p)).collect()
}

pub fn dirichlet_factors(chi: &DirichletCharacter, primes: &[u64]) -> Result<Vec<EulerFactor>> {
    primes.iter().map(|&p| dirichlet_factor(chi, p)).collect()
}

/// Prime-wise star product of two truncated Euler products.
///
/// Output is ordered by prime whatever the input order.
pub fn ene_euler<F: ExactField>(f: &[EulerFactor<F>], g: &[EulerFactor<F>]) -> Result<Vec<EulerFactor<F>>> {
    let mut f: Vec<&EulerFactor<F>> = f.iter().collect();
    let mut g: Vec<&EulerFactor<F>> = g.iter().collect();
    f.sort_by_key(|e| e.prime);
    g.sort_by_key(|e| e.prime);
    let same = f.len() == g.len()
        && f.iter().zip(&g).all(|(a, b)| a.prime == b.prime)
        && f.windows(2).all(|w| w[0].prime < w[1].prime);
    if !same {
        return Err(Error::MismatchedPrimes);
    }
    Ok(f.iter()
        .zip(&g)
        .map(|(a, b)| EulerFactor {
            prime: a.prime,
            fraction: a.fraction.star(&b.fraction),
        })
        .collect())
}

/// The local unit equation at p: the ζ factor starred with itself is
/// 1 − p^{−1}X, the factor of ζ(s + 1/2)^{−1}.
pub fn unit_equation_check(p: u64) -> Result<bool> {
    let z = zeta_factor(p)?;
    Ok(unit_equation_holds(&z))
}

/// Whether `z ⋆ z` equals 1 − p^{−1}X exactly.
pub fn unit_equation_holds(z: &EulerFactor) -> bool {
    let p = z.prime;
    let target = UnitPolynomial::linear(QuadraticSurd::rational(ExactRational::new(
        1.into(),
        p.into(),
    )));
    z.fraction.star(&z.fraction) == UnitFraction::polynomial(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfun::chi3;

    #[test]
    fn unit_equation_small_primes() {
        for p in [2, 3, 5, 97, 7919] {
            assert!(unit_equation_check(p).unwrap(), "p = {p}");
        }
        assert!(matches!(unit_equation_check(91), Err(Error::NotPrime(91))));
    }

    #[test]
    fn perturbed_factor_fails() {
        let p = 97;
        let eps = QuadraticSurd::rational(ExactRational::new(1.into(), 1_000_000_000.into()));
        let beta = QuadraticSurd::inverse_sqrt(p) + eps;
        let z = EulerFactor::new(p, UnitFraction::reciprocal_of(UnitPolynomial::linear(beta))).unwrap();
        assert!(!unit_equation_holds(&z));
    }

    #[test]
    fn chi3_at_two() {
        let f = dirichlet_factor(&chi3(), 2).unwrap();
        let beta = f.fraction().denominator().coefficients()[1].clone();
        assert_eq!(beta, QuadraticSurd::inverse_sqrt(2));
        // χ₃ ⋆̄ χ₃ has the same square as ζ at p = 2
        let sq = f.fraction().star(f.fraction());
        assert_eq!(sq, zeta_factor(2).unwrap().fraction().star(zeta_factor(2).unwrap().fraction()));
        let f3 = dirichlet_factor(&chi3(), 3).unwrap();
        assert_eq!(f3.fraction(), &UnitFraction::polynomial(UnitPolynomial::one()));
    }

    #[test]
    fn euler_lists() {
        let primes = [2, 3, 5, 7];
        let z = zeta_factors(&primes).unwrap();
        let units: Vec<EulerFactor> = primes.iter().map(|&p| EulerFactor::unit(p).unwrap()).collect();
        assert_eq!(ene_euler(&units, &z).unwrap(), z);
        let zz = ene_euler(&z, &z).unwrap();
        assert!(zz.iter().all(|e| e.fraction().denominator().degree() == 0));
        assert!(matches!(ene_euler(&z, &z[..3]), Err(Error::MismatchedPrimes)));
        let mut rev = z.clone();
        rev.reverse();
        assert_eq!(ene_euler(&rev, &z).unwrap(), zz);
    }
}
