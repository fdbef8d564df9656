//! Documents, seeded instance generators and SVG rendering.

mod document;
mod generate;
mod svg;

use std::path::PathBuf;

use thiserror::Error;

use crate::geometry::GeometryError;

pub use document::{InstanceDocument, PointRecord, SolutionDocument, SolverKind, SCHEMA_VERSION};
pub use generate::{
    gen_figure1, gen_figure1_with, gen_random, Family, Figure1Options, GenParams, Law,
};
pub use svg::render_svg;

/// Reads a whole text file.
pub fn document_text(path: &std::path::Path) -> Result<String, IoError> {
    document::read(path)
}

/// Writes a whole text file.
pub fn write_text(path: &std::path::Path, contents: &str) -> Result<(), IoError> {
    document::write(path, contents)
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {found}")]
    SchemaVersion { found: u32 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("center {center} is not an index of the {n}-point instance")]
    CenterOutOfRange { center: usize, n: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
}
