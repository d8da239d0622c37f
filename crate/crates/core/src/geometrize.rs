//! Turn an incidence system whose elements all have degree at least 2 and
//! whose flags have rank at most 2 into an incidence geometry: every edge
//! `{v, w}` is completed to a chamber by fresh vertices of the missing types.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{ColoredGraph, GraphBuilder, GraphError, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometrizeError {
    #[error("vertices of degree < 2 (run refine first): {}", list(.0))]
    PreconditionDegree(Vec<VertexId>),
    #[error("flags of rank 3 (run refine first): {}", triangles(.0))]
    PreconditionFlag(Vec<[VertexId; 3]>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn list(ids: &[VertexId]) -> String {
    ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn triangles(ts: &[[VertexId; 3]]) -> String {
    ts.iter()
        .map(|[a, b, c]| format!("{{{a}, {b}, {c}}}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Checks both preconditions, collecting every witness.
pub fn check_preconditions(g: &ColoredGraph) -> Result<(), GeometrizeError> {
    let low: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) < 2)
        .map(|v| g.id(v).clone())
        .collect();
    if !low.is_empty() {
        return Err(GeometrizeError::PreconditionDegree(low));
    }
    let tri = g.triangles();
    if !tri.is_empty() {
        return Err(GeometrizeError::PreconditionFlag(
            tri.into_iter().map(|t| t.map(|v| g.id(v).clone())).collect(),
        ));
    }
    Ok(())
}

pub fn geometrize(g: &ColoredGraph) -> Result<ColoredGraph, GeometrizeError> {
    check_preconditions(g)?;
    geometrize_unchecked(g)
}

/// The chamber completion without the precondition check. The result is
/// always a geometry, but the pair is only guaranteed under the
/// preconditions.
pub fn geometrize_unchecked(g: &ColoredGraph) -> Result<ColoredGraph, GeometrizeError> {
    let k = g.type_count();
    let mut b = GraphBuilder::new(g.types().to_vec());
    for v in 0..g.vertex_count() {
        b.add_vertex(g.id(v).clone(), g.type_of(v));
    }
    let total = g.vertex_count() + g.edge_count() * k.saturating_sub(2);
    if total > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooLarge(total).into());
    }
    for (v, w) in g.edges() {
        let mut chamber = vec![v, w];
        for i in 0..k {
            if i != g.type_of(v) && i != g.type_of(w) {
                chamber.push(b.add_vertex(VertexId::chamber(g.id(v), g.id(w), i), i));
            }
        }
        for x in 0..chamber.len() {
            for y in x + 1..chamber.len() {
                b.add_edge(chamber[x], chamber[y]);
            }
        }
    }
    Ok(b.build()?)
}

/// For each original edge (ids sorted), the vertex indices of its chamber,
/// sorted. Original vertices are those with non-chamber ids.
pub fn chamber_index(g: &ColoredGraph) -> BTreeMap<(VertexId, VertexId), Vec<usize>> {
    let original = |v: usize| !matches!(g.id(v), VertexId::Chamber { .. });
    let mut out: BTreeMap<(VertexId, VertexId), Vec<usize>> = BTreeMap::new();
    for (v, w) in g.edges() {
        if original(v) && original(w) {
            let key = if g.id(v) <= g.id(w) {
                (g.id(v).clone(), g.id(w).clone())
            } else {
                (g.id(w).clone(), g.id(v).clone())
            };
            out.insert(key, vec![v, w]);
        }
    }
    for x in 0..g.vertex_count() {
        if let VertexId::Chamber { edge, .. } = g.id(x) {
            if let Some(c) = out.get_mut(edge.as_ref()) {
                c.push(x);
            }
        }
    }
    for c in out.values_mut() {
        c.sort_unstable();
    }
    out
}
