//! Pair correlation of ζ zeros against 1 − (sin πx/πx)², and the dips of
//! delta histograms at the zeros predicted by the star product.

use zetalab::lfun::{chi3, Family};
use zetalab::stats::{delta_histogram, dip_score, ene_dip_prediction, pair_correlation, DIP_BIN_WIDTH, DIP_WINDOW};
use zetalab::zeros::find_zeros;

fn main() -> zetalab::Result<()> {
    let t = 3000.0;
    let zeros = find_zeros(t, &Family::Zeta)?;
    let pc = pair_correlation(&zeros, t, 3.0, 0.05)?;
    println!("{} zeros, mean |density − GUE| = {:.4}", zeros.len(), pc.mean_abs_deviation());
    for i in (0..pc.histogram.bins()).step_by(6) {
        println!("  x = {:.3}  density {:.3}  GUE {:.3}", pc.histogram.center(i), pc.histogram.density(i), pc.reference[i]);
    }

    let deltas = delta_histogram(&zeros, &zeros, (0.0, 40.0), DIP_BIN_WIDTH)?;
    let predicted = ene_dip_prediction(&chi3(), &chi3(), 30.0)?;
    for g in predicted {
        let d = dip_score(&deltas, g, DIP_WINDOW)?;
        println!("dip at {g:.4}: count {} vs flank {:.1} ± {:.1}, z = {:.2}", d.center_count, d.flank_mean, d.flank_std, d.z_score);
    }
    Ok(())
}
