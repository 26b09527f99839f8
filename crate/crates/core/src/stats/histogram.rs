use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// How `density` divides the counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalization {
    /// density = count.
    Raw,
    /// density = count / (totalPairs · width); integrates to at most 1.
    Density,
    /// density = count / (zeros · width); the pair-correlation scale on
    /// which an uncorrelated sequence has density 1.
    PerZero { zeros: usize },
}

/// Equal-width histogram of pair differences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub total_pairs: u64,
    /// Pairs whose difference fell outside the binned range.
    pub out_of_range: u64,
    pub normalization: Normalization,
}

impl Histogram {
    /// Empty histogram with `bins` equal bins on [lo, hi].
    pub(crate) fn empty(lo: f64, hi: f64, width: f64, normalization: Normalization) -> Result<Self> {
        if !(width > 0.0) || !(hi > lo) {
            return Err(Error::Domain(format!("bad binning: [{lo}, {hi}] with width {width}")));
        }
        let bins = ((hi - lo) / width).round().max(1.0) as usize;
        let bin_edges = (0..=bins).map(|k| lo + (hi - lo) * k as f64 / bins as f64).collect();
        Ok(Histogram { bin_edges, counts: vec![0; bins], total_pairs: 0, out_of_range: 0, normalization })
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn lo(&self) -> f64 {
        self.bin_edges[0]
    }

    pub fn hi(&self) -> f64 {
        self.bin_edges[self.bins()]
    }

    pub fn width(&self) -> f64 {
        (self.hi() - self.lo()) / self.bins() as f64
    }

    pub fn center(&self, i: usize) -> f64 {
        0.5 * (self.bin_edges[i] + self.bin_edges[i + 1])
    }

    /// Bin holding x, with half-open bins [lo, hi) and the top edge included.
    pub fn bin_of(&self, x: f64) -> Option<usize> {
        if !(x >= self.lo() && x <= self.hi()) {
            return None;
        }
        let i = ((x - self.lo()) / self.width()).floor() as usize;
        Some(i.min(self.bins() - 1))
    }

    pub(crate) fn add(&mut self, x: f64) {
        match self.bin_of(x) {
            Some(i) => self.counts[i] += 1,
            None => self.out_of_range += 1,
        }
    }

    pub fn density(&self, i: usize) -> f64 {
        let c = self.counts[i] as f64;
        match self.normalization {
            Normalization::Raw => c,
            Normalization::Density => c / (self.total_pairs.max(1) as f64 * self.width()),
            Normalization::PerZero { zeros } => c / (zeros.max(1) as f64 * self.width()),
        }
    }

    pub fn densities(&self) -> Vec<f64> {
        (0..self.bins()).map(|i| self.density(i)).collect()
    }

    /// CSV with columns bin_lo, bin_hi, count, density at 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("bin_lo,bin_hi,count,density\n");
        for i in 0..self.bins() {
            let _ = writeln!(
                out,
                "{:.16e},{:.16e},{},{:.16e}",
                self.bin_edges[i],
                self.bin_edges[i + 1],
                self.counts[i],
                self.density(i)
            );
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_csv()).map_err(|e| Error::io(path, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binning_edges() {
        let mut h = Histogram::empty(-1.0, 1.0, 0.5, Normalization::Raw).unwrap();
        for x in [-1.0, -0.75, -0.5, 0.0, 0.99, 1.0, 1.5] {
            h.add(x);
        }
        assert_eq!(h.counts, vec![2, 1, 1, 2]);
        assert_eq!(h.out_of_range, 1);
        assert_eq!(h.bin_of(0.25), Some(2));
        assert!(h.to_csv().starts_with("bin_lo,bin_hi,count,density\n-1.0000000000000000e0,"));
        assert!(Histogram::empty(0.0, 1.0, 0.0, Normalization::Raw).is_err());
    }
}
