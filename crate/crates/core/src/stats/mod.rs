//! Statistics of zero ordinates: pair correlation against the GUE curve and
//! delta histograms with their dips.

mod delta;
mod histogram;
mod pair;

use std::fs;
use std::path::Path;

pub use delta::{delta_histogram, dip_family, dip_score, ene_dip_prediction, DipReport, DELTA_BIN_WIDTH, DIP_BIN_WIDTH, DIP_WINDOW};
pub use histogram::{Histogram, Normalization};
pub use pair::{gue_pair_density, pair_correlation, pair_correlation_with, PairCorrelation, PairScaling, MIN_ZEROS};

use crate::{Error, Result};

/// Writes dip reports as a JSON array.
pub fn write_dip_reports(reports: &[DipReport], path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(reports)?;
    fs::write(path, text).map_err(|e| Error::io(path, e))
}
