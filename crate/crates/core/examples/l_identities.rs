//! Closed-form L-function identities: Euler products, the divisor-sum
//! Eisenstein series, the Hasse–Weil product of ℙ¹, Gauss sums.

use num_complex::Complex64;
use zetalab::lfun::{chi3, chi4, eisenstein_l, euler_product, gauss_sum, hasse_weil_p1, make_character, zeta};

fn main() -> zetalab::Result<()> {
    let s = Complex64::new(2.0, 3.0);
    for p in [100, 10_000, 1_000_000] {
        let e = euler_product(s, p);
        println!("Euler product to {p:>7}: |Π − ζ| = {:.3e}", (e - zeta(s)?).norm());
    }

    for n in [100, 1000] {
        let e = eisenstein_l(Complex64::new(3.0, 0.0), Complex64::new(0.5, 0.0), n)?;
        println!("Σ d(n)/n³ to {n}: defect {:.3e} ≤ tail bound {:.3e}", e.defect(), e.tail_bound);
    }

    let h = hasse_weil_p1(Complex64::new(3.0, 1.0), 10_000)?;
    println!("Hasse–Weil ℙ¹ at 3+i: relative defect {:.3e}", h.relative_defect());

    for chi in [chi3(), chi4(), make_character(5, 1)?] {
        let g = gauss_sum(&chi)?;
        println!("mod {}: τ(χ) = {:.6}, |τ|² = {:.6}, ε = {:.6}", chi.modulus(), g.tau, g.tau.norm_sqr(), g.epsilon);
    }
    Ok(())
}
