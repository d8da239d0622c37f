//! Simple, properly vertex-colored graphs: the incidence-graph view of an
//! incidence system. Vertices are kept sorted by [`VertexId`], so vertex
//! indices, edge lists and serialized output are deterministic.

mod cliques;
mod dot;
mod id;
mod io;

pub use cliques::maximal_cliques;
pub use dot::to_dot;
pub use id::{GadgetOwner, IdParseError, VertexId};
pub use io::{from_json, to_json, GraphJson, IoError, VertexJson};

use std::collections::HashMap;

use thiserror::Error;

/// Upper bound on the number of vertices of a graph.
pub const MAX_VERTICES: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has {0} vertices, more than the supported {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("vertex {vertex} has type index {ty} but only {types} types are declared")]
    BadType { vertex: String, ty: usize, types: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("not simple: {0} -- {1}")]
    NotSimple(String, String),
    #[error("not proper: {0} -- {1} both have type {2}")]
    NotProper(String, String, String),
    #[error("type {0} is declared but no vertex has it")]
    TypeNotUsed(String),
}

/// Unvalidated graph under construction. Vertex handles returned by
/// [`GraphBuilder::add_vertex`] are insertion indices; [`GraphBuilder::build`]
/// sorts vertices by id and validates.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    types: Vec<String>,
    vertices: Vec<(VertexId, usize)>,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new(types: Vec<String>) -> Self {
        Self {
            types,
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, id: VertexId, ty: usize) -> usize {
        self.vertices.push((id, ty));
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Checks every [`ColoredGraph`] invariant, returning the first violation.
    pub fn validate(&self) -> Result<(), GraphError> {
        self.check().map(|_| ())
    }

    fn check(&self) -> Result<Vec<usize>, GraphError> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        for (id, ty) in &self.vertices {
            if *ty >= self.types.len() {
                return Err(GraphError::BadType {
                    vertex: id.to_string(),
                    ty: *ty,
                    types: self.types.len(),
                });
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.vertices[a].0.cmp(&self.vertices[b].0));
        for w in order.windows(2) {
            if self.vertices[w[0]].0 == self.vertices[w[1]].0 {
                return Err(GraphError::DuplicateVertex(self.vertices[w[0]].0.to_string()));
            }
        }
        let name = |v: usize| self.vertices[v].0.to_string();
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                return Err(GraphError::UnknownVertex(format!("#{}", a.max(b))));
            }
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::NotSimple(name(a), name(b)));
            }
            if self.vertices[a].1 == self.vertices[b].1 {
                return Err(GraphError::NotProper(
                    name(a),
                    name(b),
                    self.types[self.vertices[a].1].clone(),
                ));
            }
        }
        let mut used = vec![false; self.types.len()];
        for (_, ty) in &self.vertices {
            used[*ty] = true;
        }
        if let Some(t) = used.iter().position(|&u| !u) {
            return Err(GraphError::TypeNotUsed(self.types[t].clone()));
        }
        Ok(order)
    }

    pub fn build(self) -> Result<ColoredGraph, GraphError> {
        let order = self.check()?;
        let n = order.len();
        let mut rank = vec![0u32; n];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new as u32;
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            let (a, b) = (rank[a], rank[b]);
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut slots: Vec<Option<(VertexId, usize)>> = self.vertices.into_iter().map(Some).collect();
        let mut ids = Vec::with_capacity(n);
        let mut type_of = Vec::with_capacity(n);
        for &old in &order {
            let (id, ty) = slots[old].take().unwrap();
            ids.push(id);
            type_of.push(ty);
        }
        let lookup = ids.iter().enumerate().map(|(i, id)| (id.clone(), i as u32)).collect();
        Ok(ColoredGraph {
            types: self.types,
            ids,
            type_of,
            adj,
            lookup,
            edge_count: self.edges.len(),
        })
    }
}

/// A validated incidence graph `(V, E, I, t)`: simple, proper, with a
/// surjective type function onto the declared types.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    types: Vec<String>,
    ids: Vec<VertexId>,
    type_of: Vec<usize>,
    adj: Vec<Vec<u32>>,
    lookup: HashMap<VertexId, u32>,
    edge_count: usize,
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.types == other.types && self.ids == other.ids && self.type_of == other.type_of && self.adj == other.adj
    }
}

impl Eq for ColoredGraph {}

/// Outcome of the incidence-geometry check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryReport {
    pub is_geometry: bool,
    pub chamber_count: usize,
    /// Maximal flags with fewer than `|I|` elements.
    pub deficient_flags: Vec<Vec<usize>>,
}

impl ColoredGraph {
    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn types(&self) -> &[String] {
        &self.types
    }

    /// Rank `|I|`.
    pub fn type_count(&self) -> usize {
        self.types.len()
    }

    pub fn type_of(&self, v: usize) -> usize {
        self.type_of[v]
    }

    pub fn type_assignment(&self) -> &[usize] {
        &self.type_of
    }

    pub fn id(&self, v: usize) -> &VertexId {
        &self.ids[v]
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn index_of(&self, id: &VertexId) -> Option<usize> {
        self.lookup.get(id).map(|&i| i as usize)
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, list)| {
            list.iter()
                .map(|&b| b as usize)
                .filter(move |&b| a < b)
                .map(move |b| (a, b))
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_of(&self, id: &VertexId) -> Result<usize, GraphError> {
        self.index_of(id)
            .map(|v| self.degree(v))
            .ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `|t^-1(i)|` for every type.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.types.len()];
        for &t in &self.type_of {
            sizes[t] += 1;
        }
        sizes
    }

    pub fn class_members(&self, ty: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.type_of[v] == ty).collect()
    }

    pub fn max_flag_rank(&self) -> usize {
        maximal_cliques(self).iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Triangles `a < b < c`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for &c in &self.adj[b] {
                let c = c as usize;
                if c > b && self.adjacent(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Every flag lies in a chamber iff every maximal clique has one vertex
    /// of each type.
    pub fn geometry_report(&self) -> GeometryReport {
        let rank = self.type_count();
        let (chambers, deficient): (Vec<_>, Vec<_>) = maximal_cliques(self).into_iter().partition(|c| c.len() == rank);
        GeometryReport {
            is_geometry: deficient.is_empty(),
            chamber_count: chambers.len(),
            deficient_flags: deficient,
        }
    }

    pub fn is_geometry(&self) -> bool {
        self.geometry_report().is_geometry
    }

    /// Rebuilds a builder holding this graph, for constructions that extend it.
    pub fn to_builder(&self) -> GraphBuilder {
        let mut b = GraphBuilder::new(self.types.clone());
        for (id, &t) in self.ids.iter().zip(&self.type_of) {
            b.add_vertex(id.clone(), t);
        }
        for (x, y) in self.edges() {
            b.add_edge(x, y);
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(types: &[usize], ntypes: usize, edges: &[(usize, usize)]) -> GraphBuilder {
        let mut b = GraphBuilder::new((0..ntypes).map(|t| t.to_string()).collect());
        for (i, &t) in types.iter().enumerate() {
            b.add_vertex(VertexId::Raw(i as u64), t);
        }
        for &(x, y) in edges {
            b.add_edge(x, y);
        }
        b
    }

    #[test]
    fn single_vertex_is_valid() {
        let g = raw(&[0], 1, &[]).build().unwrap();
        assert_eq!(g.degree(0), 0);
        assert_eq!(g.max_flag_rank(), 1);
        assert_eq!(g.min_degree(), 0);
        assert!(g.is_geometry());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(raw(&[], 1, &[]).validate(), Err(GraphError::Empty));
        assert!(matches!(
            raw(&[0, 0], 1, &[(0, 1)]).validate(),
            Err(GraphError::NotProper(..))
        ));
        assert_eq!(raw(&[0], 2, &[]).validate(), Err(GraphError::TypeNotUsed("1".into())));
        assert!(matches!(
            raw(&[0, 1], 2, &[(0, 0)]).validate(),
            Err(GraphError::NotSimple(..))
        ));
        assert!(matches!(
            raw(&[0, 1], 2, &[(0, 1), (1, 0)]).validate(),
            Err(GraphError::NotSimple(..))
        ));
        assert!(matches!(raw(&[3], 1, &[]).validate(), Err(GraphError::BadType { .. })));
        let mut b = raw(&[0], 1, &[]);
        b.add_vertex(VertexId::Raw(0), 0);
        assert!(matches!(b.validate(), Err(GraphError::DuplicateVertex(_))));
    }

    #[test]
    fn triangle_aggregates() {
        let g = raw(&[0, 1, 2], 3, &[(0, 1), (1, 2), (0, 2)]).build().unwrap();
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.max_flag_rank(), 3);
        assert_eq!(g.min_degree(), 2);
        let r = g.geometry_report();
        assert!(r.is_geometry);
        assert_eq!(r.chamber_count, 1);
        assert_eq!(g.triangles(), vec![[0, 1, 2]]);
    }

    #[test]
    fn path_not_geometry_with_three_types() {
        // typed 2,0,1,2
        let g = raw(&[2, 0, 1, 2], 3, &[(0, 1), (1, 2), (2, 3)]).build().unwrap();
        let r = g.geometry_report();
        assert!(!r.is_geometry);
        assert_eq!(r.deficient_flags.len(), 3);
        assert_eq!(r.chamber_count, 0);
    }

    #[test]
    fn vertices_sorted_by_id() {
        let mut b = GraphBuilder::new(vec!["a".into(), "b".into()]);
        let x = b.add_vertex(VertexId::T(0, 1), 0);
        let y = b.add_vertex(VertexId::P(3), 1);
        b.add_edge(x, y);
        let g = b.build().unwrap();
        assert_eq!(g.id(0), &VertexId::P(3));
        assert_eq!(g.degree_of(&VertexId::T(0, 1)).unwrap(), 1);
        assert!(matches!(
            g.degree_of(&VertexId::P(0)),
            Err(GraphError::UnknownVertex(_))
        ));
    }
}
