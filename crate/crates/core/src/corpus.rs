//! Seeded random proper colored graphs for property tests and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{ColoredGraph, GraphBuilder, VertexId};

/// A random proper colored graph with `1..=max_vertices` vertices and
/// `1..=max_types` types, all used. The same seed gives the same graph.
pub fn random_graph(seed: u64, max_vertices: usize, max_types: usize) -> ColoredGraph {
    assert!(max_vertices >= 1 && max_types >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let k = rng.gen_range(1..=max_types.min(n));
    let mut types: Vec<usize> = (0..n).map(|v| if v < k { v } else { rng.gen_range(0..k) }).collect();
    types.shuffle(&mut rng);
    let density: f64 = rng.gen_range(0.15..0.8);
    let mut b = GraphBuilder::new((0..k).map(|t| t.to_string()).collect());
    for (v, &t) in types.iter().enumerate() {
        b.add_vertex(VertexId::Raw(v as u64), t);
    }
    for x in 0..n {
        for y in x + 1..n {
            if types[x] != types[y] && rng.gen_bool(density) {
                b.add_edge(x, y);
            }
        }
    }
    b.build().expect("random graph is proper")
}

/// `count` graphs from consecutive seeds starting at `seed`.
pub fn corpus(seed: u64, count: usize, max_vertices: usize, max_types: usize) -> Vec<ColoredGraph> {
    (0..count as u64)
        .map(|i| random_graph(seed.wrapping_add(i), max_vertices, max_types))
        .collect()
}
