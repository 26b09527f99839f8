//! ζ, L(s, χ), the completed functions and Hardy's Z at a few points.

use num_complex::Complex64;
use zetalab::lfun::{chi3, completed_lambda, dirichlet_l, hardy_z, xi, zeta, zeta_even, zeta_negative, Family};
use zetalab::special::bernoulli;

fn main() -> zetalab::Result<()> {
    let c = Complex64::new;

    let z2 = zeta_even(1)?;
    println!("ζ(2) = {} π² = {:.15}", z2.coefficient, z2.value);
    for n in [2, 4, 12] {
        println!("ζ({}) = {}   (B_{n} = {})", 1 - n as i64, zeta_negative(n)?, bernoulli(n));
    }
    println!("ζ(-1) numerically: {:.12}", zeta(c(-1.0, 0.0))?.re);

    for s in [c(0.5, 14.134725), c(0.5, 100.0), c(0.3, 50.0)] {
        let v = zeta(s)?;
        println!("ζ({s}) = {v:.12}   ξ(s) = {:.6e}", xi(s).completed);
    }

    let chi = chi3();
    for s in [c(1.0, 0.0), c(0.5, 8.0397)] {
        let l = dirichlet_l(s, &chi)?;
        let lam = completed_lambda(s, &chi)?;
        println!("L({s}, χ₃) = {l:.12}   Λ = {:.6e}", lam.completed);
    }
    println!("π/(3√3) = {:.12}", std::f64::consts::PI / 27f64.sqrt());

    for t in [14.0, 14.134725141734695, 14.3] {
        println!("Z({t}) = {:+.3e}", hardy_z(t, &Family::Zeta)?);
    }
    Ok(())
}
