//! Instance files, the bundled instances, setup search utilities, and the
//! reports behind the command-line tool.

mod instance;
mod report;
mod split;
mod text;

use thiserror::Error;

use crate::curve::CurveError;
use crate::engine::EngineError;
use crate::galois::GaloisError;

pub use instance::{
    bundled, load_instance, parse_instance, CurveDef, FieldDef, FunctionDef, InstanceFile, PlaceDef, PlaceKind, QDef,
};
pub use report::{bench, counts, random_element, selftest, verify, BenchReport, Check, Mismatch, SelftestReport, VerifyReport};
pub use split::{check_total_split, split_search, EXHAUSTIVE_F2_DEGREE};
pub use text::{format_element, parse_element};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToolError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("place {label}: declared degree {declared}, residue field has degree {actual}")]
    PlaceDegree { label: String, declared: usize, actual: usize },
    #[error("place {label}: missing field {field}")]
    MissingField { label: String, field: &'static str },
    #[error("element text: {0}")]
    ElementText(String),
}

impl From<serde_json::Error> for ToolError {
    fn from(e: serde_json::Error) -> Self {
        ToolError::Json(e.to_string())
    }
}
