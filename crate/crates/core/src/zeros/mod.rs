//! Critical-line zeros: counting by the argument principle, locating by sign
//! changes of Hardy's Z, and a CSV cache.

mod cache;
mod count;
mod find;

use serde::{Deserialize, Serialize};

use crate::lfun::Family;
use crate::{Error, Result};

pub use cache::{cache_path, load_or_find, load_zeros, save_zeros, FORMAT_TAG};
pub use count::{count_zeros, ZeroCount};
pub use find::{find_zeros, GRID_STEP, REFINEMENT_TOLERANCE};

/// Positive ordinates γ of zeros 1/2 + iγ, complete up to `certified_height`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroSet {
    family: Family,
    ordinates: Vec<f64>,
    certified_height: f64,
    refinement_tolerance: f64,
}

impl ZeroSet {
    /// Sorts the ordinates; callers vouch for completeness up to the height.
    pub fn new(family: Family, mut ordinates: Vec<f64>, certified_height: f64, refinement_tolerance: f64) -> Self {
        ordinates.sort_by(f64::total_cmp);
        ZeroSet { family, ordinates, certified_height, refinement_tolerance }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn certified_height(&self) -> f64 {
        self.certified_height
    }

    pub fn refinement_tolerance(&self) -> f64 {
        self.refinement_tolerance
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Number of stored ordinates γ ≤ t.
    pub fn count_up_to(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&g| g <= t)
    }

    /// The ordinates γ ≤ t; fails above the certified height.
    pub fn up_to(&self, t: f64) -> Result<&[f64]> {
        if t > self.certified_height {
            return Err(Error::HeightExceeded { requested: t, certified: self.certified_height });
        }
        Ok(&self.ordinates[..self.count_up_to(t)])
    }

    /// The complete set below a lower height.
    pub fn truncated(&self, t: f64) -> Result<ZeroSet> {
        let ordinates = self.up_to(t)?.to_vec();
        Ok(ZeroSet { ordinates, certified_height: t, ..self.clone() })
    }

    /// The first n ordinates, certified up to the n-th one.
    pub fn first(&self, n: usize) -> Result<ZeroSet> {
        if n > self.len() {
            return Err(Error::InsufficientZeros { found: self.len(), needed: n });
        }
        let height = if n == 0 { 0.0 } else { self.ordinates[n - 1] };
        Ok(ZeroSet { ordinates: self.ordinates[..n].to_vec(), certified_height: height, ..self.clone() })
    }
}
