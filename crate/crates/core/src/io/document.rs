use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::IoError;
use crate::geometry::{Instance, Mode, WeightedDisk};
use crate::oracle;
use crate::solution::Solution;

pub const SCHEMA_VERSION: u32 = 1;

fn unit_weight() -> f64 {
    1.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    pub x: f64,
    pub y: f64,
    pub r: f64,
    #[serde(default = "unit_weight")]
    pub w: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub schema_version: u32,
    pub points: Vec<PointRecord>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl InstanceDocument {
    pub fn from_disks(disks: &[WeightedDisk], metadata: BTreeMap<String, String>) -> Self {
        InstanceDocument {
            schema_version: SCHEMA_VERSION,
            points: disks
                .iter()
                .map(|d| PointRecord {
                    x: d.center.x,
                    y: d.center.y,
                    r: d.radius,
                    w: d.weight,
                })
                .collect(),
            metadata,
        }
    }

    pub fn disks(&self) -> Vec<WeightedDisk> {
        self.points
            .iter()
            .map(|p| WeightedDisk::new(p.x, p.y, p.r, p.w))
            .collect()
    }

    pub fn to_instance(&self, mode: Mode) -> Result<Instance, IoError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(IoError::SchemaVersion {
                found: self.schema_version,
            });
        }
        Ok(Instance::canonicalize(&self.disks(), mode)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, IoError> {
        Self::from_json(&read(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<(), IoError> {
        write(path, &self.to_json())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Dp,
    Greedy,
    Brute,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub mode: Mode,
    pub k: usize,
    pub size: usize,
    pub weight: f64,
    /// Original input indices.
    pub centers: Vec<usize>,
    pub solver: SolverKind,
    pub verified: bool,
}

impl SolutionDocument {
    pub fn new(solution: &Solution, k: usize, solver: SolverKind) -> Self {
        SolutionDocument {
            mode: solution.mode,
            k,
            size: solution.size,
            weight: solution.weight,
            centers: solution.centers.clone(),
            solver,
            verified: solution.verified,
        }
    }

    /// Canonical indices of the centers in `instance`.
    pub fn canonical_centers(&self, instance: &Instance) -> Result<Vec<usize>, IoError> {
        self.centers
            .iter()
            .map(|&c| {
                instance
                    .canonical_index(c)
                    .ok_or(IoError::CenterOutOfRange {
                        center: c,
                        n: instance.len(),
                    })
            })
            .collect()
    }

    /// Replaces the stored `verified` flag with a fresh check against
    /// `instance` and returns it.
    pub fn recheck(&mut self, instance: &Instance) -> Result<bool, IoError> {
        let centers = self.canonical_centers(instance)?;
        self.verified = oracle::verify(instance, &centers);
        Ok(self.verified)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Loads a solution for `instance`; `verified` is always recomputed.
    pub fn load(path: &Path, instance: &Instance) -> Result<Self, IoError> {
        let mut doc = Self::from_json(&read(path)?)?;
        doc.recheck(instance)?;
        Ok(doc)
    }

    pub fn save(&self, path: &Path) -> Result<(), IoError> {
        write(path, &self.to_json())
    }
}

pub(crate) fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn write(path: &Path, contents: &str) -> Result<(), IoError> {
    fs::write(path, contents).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}
