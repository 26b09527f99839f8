//! Zeta functions of subshifts of finite type, exp(Σ Tr Aⁿ tⁿ/n) = 1/det(I − tA),
//! and the zeta function of ℙ¹ over 𝔽_p.

use zetalab::dynzeta::{periodic_counts, weil_p1, zeta_rationality, TransitionMatrix};

fn main() -> zetalab::Result<()> {
    let golden = TransitionMatrix::golden_mean();
    println!("golden-mean shift:\n{golden}");
    let counts = periodic_counts(&golden, 10)?;
    println!("periodic points N_1..N_10: {counts:?}");
    let r = zeta_rationality(&golden, 12)?;
    println!("Z(t) = {}   (equal to 1/(1 − t − t²): {})", r.series_form, r.equal);

    let m: TransitionMatrix = "110\n011\n101".parse()?;
    let r = zeta_rationality(&m, 10)?;
    println!("det(I − tA) = {:?}, identity holds: {}", m.det_i_minus_ta(), r.equal);

    let mut all = 0;
    for bits in 0u64..1 << 9 {
        all += usize::from(zeta_rationality(&TransitionMatrix::from_bits(3, bits), 20)?.equal);
    }
    println!("rationality holds for {all} of 512 matrices of size 3");

    for p in [2, 3, 5, 7, 11] {
        let w = weil_p1(p, 8)?;
        println!(
            "ℙ¹/𝔽_{p}: Z = {}  closed form {} FE sign {:+} Betti {:?} |α| = {:?}",
            w.zeta,
            w.matches_closed_form,
            w.functional_equation_sign,
            w.betti_degrees,
            w.inverse_root_moduli.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
    }
    Ok(())
}
