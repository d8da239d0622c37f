//! Cayley-digraph realization of a pair `(G, H)` as an incidence system.
//!
//! Elements are listed `g_0, .., g_{n-1}` in the pair's ordering (identity
//! first, then coset representatives). Vertex `P(i)` stands for `g_i`. The
//! arc `(i, j)` of the complete digraph carries label `k` where
//! `g_k = g_j g_i^-1`; it is replaced by a gadget
//!
//! ```text
//!   P(i) -- S(i,j,0) -- P(j)
//!   P(i) -- T(i,j) -- S(i,j,a) -- P(j)       a = k + 3 (0-based k)
//!   S(i,j,0) -- S(i,j,1) -- .. -- S(i,j,a)
//! ```
//!
//! so that `P` vertices have degree `4(n-1)`, `S(i,j,0)` and the apex
//! `S(i,j,a)` degree 3, and every other vertex degree 2. The apex index is
//! `k + 2` in 1-based labels. `P(i)` gets type `1 + coset(g_i)`, `T` type 0,
//! and `S(.., l)` type `[G:H]+1` or `[G:H]+2` by parity of `l`.

use thiserror::Error;

use crate::graph::{ColoredGraph, GraphBuilder, VertexId};
use crate::group::GroupPair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("the trivial group has no Cayley gadget realization")]
    TrivialGroup,
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

/// Complete labeled digraph on the group's elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyDigraph {
    order: usize,
    labels: Vec<usize>,
}

impl CayleyDigraph {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Position (0-based, never 0) of `g_j g_i^-1` in the element listing.
    pub fn label(&self, i: usize, j: usize) -> usize {
        assert_ne!(i, j, "no arc from a vertex to itself");
        self.labels[i * self.order + j]
    }

    /// Index of the apex `S` vertex of the gadget on arc `(i, j)`.
    pub fn apex(&self, i: usize, j: usize) -> usize {
        self.label(i, j) + 3
    }

    /// Arcs `(i, j, label)` in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.order;
        (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j, self.label(i, j))))
    }

    /// Target of the arc leaving `i` with the given label.
    pub fn target(&self, i: usize, label: usize) -> Option<usize> {
        (0..self.order).find(|&j| j != i && self.label(i, j) == label)
    }
}

fn positions(pair: &GroupPair) -> Vec<usize> {
    let mut pos = vec![0; pair.ordering().len()];
    for (p, &x) in pair.ordering().iter().enumerate() {
        pos[x] = p;
    }
    pos
}

pub fn build_cayley_digraph(pair: &GroupPair) -> Result<CayleyDigraph, RealizeError> {
    let g = pair.group();
    let n = g.order();
    if n < 2 {
        return Err(RealizeError::TrivialGroup);
    }
    let pos = positions(pair);
    let ord = pair.ordering();
    let mut labels = vec![usize::MAX; n * n];
    for i in 0..n {
        let inv = g.inv(ord[i]);
        for j in 0..n {
            if i != j {
                labels[i * n + j] = pos[g.mul(ord[j], inv)];
            }
        }
    }
    Ok(CayleyDigraph { order: n, labels })
}

/// Closed-form `(|V|, |E|)` of the realization for a group of order `n`.
pub fn expected_counts(n: usize) -> (usize, usize) {
    let chain = n * (n + 1) / 2 - 1;
    (n + 4 * n * (n - 1) + n * chain, 7 * n * (n - 1) + n * chain)
}

fn type_names(index: usize) -> Vec<String> {
    (0..=index + 2).map(|t| t.to_string()).collect()
}

/// Builds the incidence system realizing `(G, H)`.
pub fn realize(pair: &GroupPair) -> Result<ColoredGraph, RealizeError> {
    let digraph = build_cayley_digraph(pair)?;
    let n = digraph.order();
    let index = pair.index();
    let even = index + 1;
    let odd = index + 2;
    let mut b = GraphBuilder::new(type_names(index));
    let p: Vec<usize> = (0..n)
        .map(|i| b.add_vertex(VertexId::P(i), 1 + pair.coset_of(pair.ordering()[i])))
        .collect();
    for (i, j, _) in digraph.arcs() {
        let apex = digraph.apex(i, j);
        let t = b.add_vertex(VertexId::T(i, j), 0);
        let s: Vec<usize> = (0..=apex)
            .map(|l| b.add_vertex(VertexId::S(i, j, l), if l % 2 == 0 { even } else { odd }))
            .collect();
        b.add_edge(p[i], s[0]);
        b.add_edge(s[0], p[j]);
        b.add_edge(p[i], t);
        b.add_edge(t, s[apex]);
        b.add_edge(p[j], s[apex]);
        for w in s.windows(2) {
            b.add_edge(w[0], w[1]);
        }
    }
    Ok(b.build().expect("realization is a valid incidence graph"))
}

/// Right multiplication by `a` as a vertex permutation of [`realize`]'s
/// output: `P(i) -> P(k)` with `g_k = g_i a`, likewise on `T` and `S`.
pub fn element_action(pair: &GroupPair, graph: &ColoredGraph, a: usize) -> Vec<u32> {
    let g = pair.group();
    let pos = positions(pair);
    let ord = pair.ordering();
    let shift = |i: usize| pos[g.mul(ord[i], a)];
    let image = |id: &VertexId| match *id {
        VertexId::P(i) => VertexId::P(shift(i)),
        VertexId::T(i, j) => VertexId::T(shift(i), shift(j)),
        VertexId::S(i, j, l) => VertexId::S(shift(i), shift(j), l),
        _ => panic!("vertex {id} is not part of a Cayley realization"),
    };
    (0..graph.vertex_count())
        .map(|v| graph.index_of(&image(graph.id(v))).expect("image vertex exists") as u32)
        .collect()
}

/// Structural facts the realization must satisfy: the degree table, the
/// uniqueness of `T(i,j)` among degree-2 neighbours of `P(i)` at distance 2
/// from `P(j)`, and the degree-2 chain of length `apex` from the apex to
/// `S(i,j,0)`.
pub fn self_check(pair: &GroupPair, graph: &ColoredGraph) -> Result<(), RealizeError> {
    let digraph = build_cayley_digraph(pair)?;
    let n = digraph.order();
    let fail = |msg: String| Err(RealizeError::SelfCheck(msg));
    let (ev, ee) = expected_counts(n);
    if (graph.vertex_count(), graph.edge_count()) != (ev, ee) {
        return fail(format!(
            "counts ({}, {}) differ from closed form ({ev}, {ee})",
            graph.vertex_count(),
            graph.edge_count()
        ));
    }
    let at = |id: VertexId| {
        graph
            .index_of(&id)
            .ok_or_else(|| RealizeError::SelfCheck(format!("missing vertex {id}")))
    };
    for v in 0..graph.vertex_count() {
        let want = match *graph.id(v) {
            VertexId::P(_) => 4 * (n - 1),
            VertexId::S(i, j, l) if l == 0 || l == digraph.apex(i, j) => 3,
            _ => 2,
        };
        if graph.degree(v) != want {
            return fail(format!(
                "{} has degree {}, expected {want}",
                graph.id(v),
                graph.degree(v)
            ));
        }
    }
    for (i, j, _) in digraph.arcs() {
        let pi = at(VertexId::P(i))?;
        let pj = at(VertexId::P(j))?;
        let near_pj: Vec<usize> = graph.neighbors(pj).iter().map(|&x| x as usize).collect();
        let at_distance_two = |x: usize| {
            x != pj && !graph.adjacent(x, pj) && graph.neighbors(x).iter().any(|&y| near_pj.contains(&(y as usize)))
        };
        let hits: Vec<usize> = graph
            .neighbors(pi)
            .iter()
            .map(|&x| x as usize)
            .filter(|&x| graph.degree(x) == 2 && at_distance_two(x))
            .collect();
        let t = at(VertexId::T(i, j))?;
        if hits != [t] {
            return fail(format!(
                "T({i},{j}) is not the unique degree-2 witness for arc ({i},{j})"
            ));
        }
        let apex = at(VertexId::S(i, j, digraph.apex(i, j)))?;
        let s0 = at(VertexId::S(i, j, 0))?;
        let (mut prev, mut cur, mut len) = (apex, apex, 0);
        loop {
            let next = graph
                .neighbors(cur)
                .iter()
                .map(|&x| x as usize)
                .find(|&x| x != prev && (graph.degree(x) == 2 && x != t || x == s0));
            let Some(next) = next else {
                return fail(format!("degree-2 chain from the apex of ({i},{j}) breaks"));
            };
            len += 1;
            if next == s0 {
                break;
            }
            prev = cur;
            cur = next;
        }
        if len != digraph.apex(i, j) {
            return fail(format!(
                "chain on arc ({i},{j}) has length {len}, expected {}",
                digraph.apex(i, j)
            ));
        }
    }
    Ok(())
}
