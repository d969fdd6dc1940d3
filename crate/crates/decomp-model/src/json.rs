use graph_core::Graph;
use serde::{Deserialize, Serialize};

use crate::shape::classify_class;
use crate::{EdgeColoring, ModelError};

/// Wire format of a decomposition: each class as a vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub n: usize,
    pub paths: Vec<Vec<usize>>,
    #[serde(default)]
    pub relaxed_budget: bool,
}

impl DecompositionJson {
    pub fn from_coloring(g: &Graph, c: &EdgeColoring, relaxed_budget: bool) -> Self {
        let paths = c
            .classes()
            .iter()
            .map(|cl| classify_class(cl).vertex_sequence)
            .collect();
        DecompositionJson {
            n: g.n(),
            paths,
            relaxed_budget,
        }
    }

    pub fn to_coloring(&self) -> Result<EdgeColoring, ModelError> {
        if let Some(p) = self.paths.iter().find(|p| p.len() < 2) {
            return Err(ModelError::ShapeError(format!(
                "path {p:?} has fewer than two vertices"
            )));
        }
        EdgeColoring::from_vertex_sequences(&self.paths)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn parse(text: &str) -> Result<Self, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))
    }
}
