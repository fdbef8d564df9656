use thiserror::Error;

use crate::geometry::{Instance, Mode};
use crate::oracle;

/// A dominating set reported in terms of the caller's input order.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub mode: Mode,
    /// Original input indices, ascending.
    pub centers: Vec<usize>,
    /// Canonical (hull order) indices, ascending.
    pub canonical_centers: Vec<usize>,
    pub weight: f64,
    pub size: usize,
    pub verified: bool,
}

impl Solution {
    pub fn from_canonical(instance: &Instance, mode: Mode, canonical: &[usize]) -> Self {
        let mut canonical_centers = canonical.to_vec();
        canonical_centers.sort_unstable();
        canonical_centers.dedup();
        let mut centers: Vec<usize> = canonical_centers
            .iter()
            .map(|&c| instance.original_index(c))
            .collect();
        centers.sort_unstable();
        Solution {
            mode,
            weight: instance.total_weight(canonical_centers.iter().copied()),
            size: canonical_centers.len(),
            verified: oracle::verify(instance, &canonical_centers),
            centers,
            canonical_centers,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("no dominating set of size at most {k} exists")]
    Infeasible { k: usize },
    #[error("size bound {k} outside [1, {n}]")]
    InvalidK { k: usize, n: usize },
}
