use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::histogram::{Histogram, Normalization};
use crate::lfun::Family;
use crate::zeros::ZeroSet;
use crate::{Error, Result};

/// Fewest zeros accepted for pair statistics.
pub const MIN_ZEROS: usize = 500;

/// 1 − (sin πx / πx)².
pub fn gue_pair_density(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let s = (PI * x).sin() / (PI * x);
    1.0 - s * s
}

/// How ordinates are put on unit mean spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairScaling {
    /// u = N̄(γ) with N̄ the smooth counting function θ(γ)/π (+1 for ζ).
    Unfolded,
    /// (γ − γ′) · log T / 2π with one global T.
    LogT,
}

/// Pair-correlation histogram next to the GUE curve at the bin centres.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairCorrelation {
    pub histogram: Histogram,
    pub reference: Vec<f64>,
    pub scaling: PairScaling,
}

impl PairCorrelation {
    /// Mean |density − GUE| over all bins.
    pub fn mean_abs_deviation(&self) -> f64 {
        let d = self.histogram.densities();
        d.iter().zip(&self.reference).map(|(a, b)| (a - b).abs()).sum::<f64>() / d.len() as f64
    }
}

fn smooth_count(family: &Family, t: f64) -> f64 {
    let offset = if matches!(family, Family::Zeta) { 1.0 } else { 0.0 };
    family.theta(t) / PI + offset
}

/// Normalized differences of ordered pairs 0 < γ′ < γ < T falling in [0, α_max].
pub fn pair_correlation(zeros: &ZeroSet, height: f64, alpha_max: f64, bin_width: f64) -> Result<PairCorrelation> {
    pair_correlation_with(zeros, height, alpha_max, bin_width, PairScaling::Unfolded)
}

pub fn pair_correlation_with(
    zeros: &ZeroSet,
    height: f64,
    alpha_max: f64,
    bin_width: f64,
    scaling: PairScaling,
) -> Result<PairCorrelation> {
    if !(bin_width > 0.0 && bin_width <= 0.1) || !(alpha_max > 0.0 && alpha_max <= 5.0) {
        return Err(Error::Precondition(format!(
            "pair correlation needs 0 < binWidth ≤ 0.1 and 0 < alphaMax ≤ 5, got {bin_width}, {alpha_max}"
        )));
    }
    let ords: Vec<f64> = zeros.up_to(height)?.iter().copied().filter(|&g| g < height).collect();
    if ords.len() < MIN_ZEROS {
        return Err(Error::InsufficientZeros { found: ords.len(), needed: MIN_ZEROS });
    }
    let scaled: Vec<f64> = match scaling {
        PairScaling::Unfolded => ords.iter().map(|&g| smooth_count(zeros.family(), g)).collect(),
        PairScaling::LogT => ords.iter().map(|&g| g * height.ln() / (2.0 * PI)).collect(),
    };
    let n = scaled.len();
    let mut histogram = Histogram::empty(0.0, alpha_max, bin_width, Normalization::PerZero { zeros: n })?;
    histogram.total_pairs = (n * (n - 1)) as u64;
    let mut in_range = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            let d = scaled[j] - scaled[i];
            if d > alpha_max {
                break;
            }
            histogram.add(d);
            in_range += 1;
        }
    }
    histogram.out_of_range = histogram.total_pairs - in_range;
    let reference = (0..histogram.bins()).map(|i| gue_pair_density(histogram.center(i))).collect();
    Ok(PairCorrelation { histogram, reference, scaling })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gue_curve() {
        assert_eq!(gue_pair_density(0.0), 0.0);
        assert!(gue_pair_density(0.01) < 1e-3);
        assert!((gue_pair_density(3.0) - 1.0).abs() < 1e-15);
        assert!((gue_pair_density(2.5) - (1.0 - 1.0 / (2.5 * PI).powi(2))).abs() < 1e-15);
    }

    #[test]
    fn poisson_points_have_flat_correlation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        // unit-density uniform points, scaled as if the smooth count were the identity
        let mut t = 0.0;
        let mut pts = Vec::new();
        while pts.len() < 5000 {
            t += -(1.0 - rng.gen::<f64>()).ln();
            pts.push(t);
        }
        let height = t + 1.0;
        let zs = ZeroSet::new(Family::Zeta, pts, height, 0.0);
        let pc = pair_correlation_with(&zs, height, 3.0, 0.1, PairScaling::LogT).unwrap();
        let scale = height.ln() / (2.0 * PI);
        // density of scaled points is 1/scale per unit
        let mean = pc.histogram.densities().iter().sum::<f64>() / pc.histogram.bins() as f64;
        assert!((mean * scale - 1.0).abs() < 0.05, "{mean} {scale}");
    }

    #[test]
    fn needs_enough_zeros() {
        let zs = ZeroSet::new(Family::Zeta, vec![14.1, 21.0], 30.0, 1e-9);
        assert!(matches!(pair_correlation(&zs, 30.0, 3.0, 0.05), Err(Error::InsufficientZeros { .. })));
    }
}
