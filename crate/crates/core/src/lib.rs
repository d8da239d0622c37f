//! Realize pairs of finite groups `(G, H)`, `H` normal in `G`, as the
//! correlation / automorphism groups of incidence systems and incidence
//! geometries, and verify the result by computing colored-graph
//! automorphism groups directly.
//!
//! The pipeline is [`realize::realize`] (Cayley digraph with arrow gadgets),
//! optionally [`refine::refine`] for arbitrary inputs, then
//! [`geometrize::geometrize`] (every edge becomes a chamber), checked by
//! [`auto::verify_pair`].

pub mod auto;
pub mod cli;
pub mod corpus;
pub mod geometrize;
pub mod graph;
pub mod group;
pub mod realize;
pub mod refine;
pub mod sn_an;
