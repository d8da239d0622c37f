//! Canonical JSON form:
//! `{"types":[..],"vertices":[{"id":"P(0)","type":0},..],"edges":[["a","b"],..]}`
//! with vertices sorted by id and edges sorted by vertex position.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ColoredGraph, GraphBuilder, GraphError, IdParseError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    #[serde(rename = "type")]
    pub ty: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub types: Vec<String>,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Id(#[from] IdParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<&ColoredGraph> for GraphJson {
    fn from(g: &ColoredGraph) -> Self {
        let names: Vec<String> = g.ids().iter().map(ToString::to_string).collect();
        GraphJson {
            types: g.types().to_vec(),
            vertices: names
                .iter()
                .enumerate()
                .map(|(v, id)| VertexJson {
                    id: id.clone(),
                    ty: g.type_of(v),
                })
                .collect(),
            edges: g.edges().map(|(a, b)| [names[a].clone(), names[b].clone()]).collect(),
        }
    }
}

impl GraphJson {
    pub fn into_graph(self) -> Result<ColoredGraph, IoError> {
        let mut b = GraphBuilder::new(self.types);
        let mut lookup = HashMap::with_capacity(self.vertices.len());
        for v in self.vertices {
            let id: VertexId = v.id.parse()?;
            let h = b.add_vertex(id, v.ty);
            if lookup.insert(v.id.clone(), h).is_some() {
                return Err(GraphError::DuplicateVertex(v.id).into());
            }
        }
        for [x, y] in &self.edges {
            let find = |s: &String| {
                lookup
                    .get(s)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownVertex(s.clone()))
            };
            b.add_edge(find(x)?, find(y)?);
        }
        Ok(b.build()?)
    }
}

/// Serializes to the canonical single-line JSON form plus a newline.
pub fn to_json(g: &ColoredGraph) -> String {
    let mut s = serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serializable");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<ColoredGraph, IoError> {
    serde_json::from_str::<GraphJson>(text)?.into_graph()
}
