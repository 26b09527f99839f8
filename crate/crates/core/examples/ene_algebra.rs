//! The star product: roots multiply pairwise, and the local ζ factor is a
//! square root of the unit 1 − p^{−1}X.

use zetalab::ene::{ene_euler, star_fraction, unit_equation_check, zeta_factors, UnitFraction, UnitPolynomial};
use zetalab::ExactRational;

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}

fn main() -> zetalab::Result<()> {
    let a = UnitPolynomial::from_inverse_roots(&[q(2, 1), q(3, 1)]);
    let b = UnitPolynomial::linear(q(5, 1));
    println!("({a}) ⋆ ({b}) = {}", a.star(&b));

    let c = UnitPolynomial::from_inverse_roots(&[q(1, 2), q(-1, 3), q(7, 5)]);
    let ab = a.star(&c);
    println!("degree {} ⋆ degree {} -> degree {}", a.degree(), c.degree(), ab.degree());

    let f = UnitFraction::new(a.clone(), c.clone());
    let g = UnitFraction::reciprocal_of(b);
    println!("({f}) ⋆ ({g}) = {}", star_fraction(&f, &g));

    let primes = [2, 3, 5, 7, 11];
    let z = zeta_factors(&primes)?;
    for e in ene_euler(&z, &z)? {
        println!("p = {:>2}: ζ_p ⋆ ζ_p = {}", e.prime(), e.fraction());
    }
    let all = zetalab::special::primes_up_to(10_000).into_iter().all(|p| unit_equation_check(p).unwrap_or(false));
    println!("unit equation holds for every p ≤ 10⁴: {all}");
    Ok(())
}
