//! Prime-side step functions against their zero-side explicit formulas.

use num_complex::Complex64;
use zetalab::explicit::{
    cramer_partial, delsarte_pairing, landau_slope, pi_star_formula, psi_explicit, ramanujan_density, riemann_r,
    PrimeTables, TestFunction,
};
use zetalab::lfun::Family;
use zetalab::zeros::find_zeros;

fn main() -> zetalab::Result<()> {
    let tables = PrimeTables::new(100_000);
    let zeros = find_zeros(1000.0, &Family::Zeta)?;
    println!("{} zeros to T = 1000", zeros.len());

    for x in [10.5, 50.5, 100.5] {
        let psi = tables.chebyshev_psi(x)?;
        for t in [100.0, 1000.0] {
            let approx = psi_explicit(x, &zeros.truncated(t)?)?;
            println!("ψ({x}) = {psi:.6}   T = {t:>6}: {approx:.6}");
        }
        let pi = pi_star_formula(x, &zeros)?;
        println!("  Π*({x}) = {:.6} vs formula {:.6}", tables.pi_star(x)?, pi.total);
    }

    let r = riemann_r(1000.5, 10)?;
    println!("π(1000.5) = {}, R(1000.5) = {r:.4}", tables.pi_count(1000.5)?);
    let d = ramanujan_density(2.0, 2000.0, &tables)?;
    println!("π(x) = round R(x) at {} of {} half-integers below 2000", d.members, d.points);

    for sigma in [3.0, 6.0] {
        let p = delsarte_pairing(&TestFunction::gaussian(sigma)?, &zeros, &tables)?;
        println!("Delsarte σ = {sigma}: zeros {:.12}, primes {:.12}", p.zero_side, p.prime_side);
    }

    let fit = landau_slope(2.0, &zeros, 1000.0, 200)?;
    println!("Re Σ 2^ρ slope {:.5} (−log 2/2π = {:.5})", fit.slope, -(2f64.ln()) / (2.0 * std::f64::consts::PI));

    let c = cramer_partial(Complex64::new(0.0, 0.3), &zeros)?;
    println!("Cramér V(0.3i) partial sum {:.6} (tail ≤ {:.2e})", c.value, c.tail_bound);
    Ok(())
}
