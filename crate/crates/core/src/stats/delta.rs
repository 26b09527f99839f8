use serde::{Deserialize, Serialize};

use super::histogram::{Histogram, Normalization};
use crate::lfun::{DirichletCharacter, Family};
use crate::zeros::{find_zeros, ZeroSet};
use crate::{Error, Result};

/// Default flank width of [`dip_score`], in bins on each side.
pub const DIP_WINDOW: usize = 10;
/// Default delta-histogram bin width.
pub const DELTA_BIN_WIDTH: f64 = 0.05;
/// Bin width at which dips are scored; at 0.05 the counts are too noisy.
pub const DIP_BIN_WIDTH: f64 = 0.3;

/// Histogram of unnormalized differences γ_A − γ_B over all ordered pairs,
/// identical indices excluded when both sets are the same.
pub fn delta_histogram(a: &ZeroSet, b: &ZeroSet, range: (f64, f64), bin_width: f64) -> Result<Histogram> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyZeroSet);
    }
    let same = std::ptr::eq(a, b) || a == b;
    let (lo, hi) = range;
    let mut h = Histogram::empty(lo, hi, bin_width, Normalization::Density)?;
    let (xa, xb) = (a.ordinates(), b.ordinates());
    let total = (xa.len() * xb.len() - if same { xa.len() } else { 0 }) as u64;
    let mut in_range = 0u64;
    // xb is sorted, so the partners of each γ_A with γ_A − γ_B ∈ [lo, hi]
    // form a contiguous window
    let mut start = 0;
    for (i, &ga) in xa.iter().enumerate() {
        while start < xb.len() && ga - xb[start] > hi {
            start += 1;
        }
        let mut j = start;
        while j < xb.len() && ga - xb[j] >= lo {
            if !(same && i == j) {
                let before = h.out_of_range;
                h.add(ga - xb[j]);
                in_range += u64::from(h.out_of_range == before);
            }
            j += 1;
        }
    }
    h.total_pairs = total;
    h.out_of_range = total - in_range;
    Ok(h)
}

/// Local z-score of one bin against its flanks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DipReport {
    pub location: f64,
    pub z_score: f64,
    pub local_window: usize,
    pub center_count: u64,
    pub flank_mean: f64,
    pub flank_std: f64,
}

/// (count at `location` − flank mean) / flank standard deviation, the flanks
/// being `window` bins on each side of the centre bin.
pub fn dip_score(h: &Histogram, location: f64, window: usize) -> Result<DipReport> {
    if window < 3 {
        return Err(Error::Precondition(format!("dip window must be at least 3 bins, got {window}")));
    }
    let center = h
        .bin_of(location)
        .ok_or_else(|| Error::Precondition(format!("location {location} outside the histogram")))?;
    if center < window || center + window >= h.bins() {
        return Err(Error::Precondition(format!("fewer than {window} bins around {location}")));
    }
    let flank: Vec<f64> = (center - window..center)
        .chain(center + 1..=center + window)
        .map(|i| h.counts[i] as f64)
        .collect();
    let n = flank.len() as f64;
    let mean = flank.iter().sum::<f64>() / n;
    let var = flank.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let std = var.sqrt();
    if std == 0.0 {
        return Err(Error::DegenerateFlank(location));
    }
    let count = h.counts[center];
    Ok(DipReport {
        location,
        z_score: (count as f64 - mean) / std,
        local_window: window,
        center_count: count,
        flank_mean: mean,
        flank_std: std,
    })
}

/// The family whose zeros should carry the dips of the χ₁/χ₂ mated deltas:
/// L(s, χ₁χ̄₂) through its primitive inducer, ζ when the product is trivial.
pub fn dip_family(chi1: &DirichletCharacter, chi2: &DirichletCharacter) -> Result<Family> {
    let product = chi1.product(&chi2.conj()).primitive_inducer();
    let family = Family::from_character(product);
    family.check_supported()?;
    Ok(family)
}

/// Predicted dip locations: ordinates of the zeros of L(s, χ₁χ̄₂) up to T.
pub fn ene_dip_prediction(chi1: &DirichletCharacter, chi2: &DirichletCharacter, height: f64) -> Result<Vec<f64>> {
    Ok(find_zeros(height, &dip_family(chi1, chi2)?)?.ordinates().to_vec())
}
