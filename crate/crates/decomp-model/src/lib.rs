//! Edge colorings and the checks around them.
//!
//! A decomposition is an [`EdgeColoring`] whose classes are all paths. During
//! recoloring some classes may temporarily be cycles; [`verify_path_coloring`]
//! can be told to accept those.

mod coloring;
mod exceptional;
mod json;
mod recolor;
mod shape;
mod verify;

pub use coloring::EdgeColoring;
pub use exceptional::is_exceptional;
pub use json::DecompositionJson;
pub use recolor::{apply_deviation, apply_extension};
pub use shape::{classify_class, ColorClassShape, InvalidReason, ShapeKind};
pub use verify::{verify_good_coloring, verify_path_coloring, VerifyReport, Violation, ViolationRule};

use graph_core::Edge;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("coloring domain differs from the graph's edge set")]
    ColoringDomainMismatch,
    #[error("edge {0:?} appears in two classes")]
    EdgeColoredTwice(Edge),
    #[error("edge {0:?} does not carry color {1}")]
    NotOnClass(Edge, usize),
    #[error("section {0:?} does not replace the removed edge")]
    BadSection(Vec<usize>),
    #[error("extension does not start at an end of the class")]
    NotAnEndpoint,
    #[error("extension would branch the class")]
    CreatesBranch,
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("bad decomposition JSON: {0}")]
    Json(String),
}
