//! Zeros of ζ and L(s, χ₃) on the critical line: argument-principle counts,
//! certified sign-change scans, and the on-disk cache.

use zetalab::lfun::Family;
use zetalab::zeros::{count_zeros, find_zeros, load_or_find};

fn main() -> zetalab::Result<()> {
    let zeta = find_zeros(35.0, &Family::Zeta)?;
    println!("ζ zeros up to 35:");
    for g in zeta.ordinates() {
        println!("  {g:.9}");
    }

    for t in [50.0, 100.0, 500.0] {
        let n = count_zeros(t, &Family::Zeta)?;
        println!("N({t}) = {} (raw {:.6}, main term {:.3})", n.count, n.raw, n.main_term);
    }

    let chi3 = Family::chi3();
    let set = find_zeros(30.0, &chi3)?;
    println!("L(s, χ₃) zeros up to 30: {:?}", set.ordinates());

    let dir = std::env::temp_dir().join("zetalab-example-cache");
    let first = load_or_find(&dir, &Family::Zeta, 200.0)?;
    let again = load_or_find(&dir, &Family::Zeta, 150.0)?;
    println!(
        "cached {} zeros to T = 200; reused for T = 150 -> {} zeros (certified to {})",
        first.len(),
        again.len(),
        again.certified_height()
    );
    Ok(())
}
