//! Small systems with prescribed pairs: the recursive `(S_n, A_n)` systems
//! `Γ_n` and the two triangle fixtures.
//!
//! `Γ_n` lives on the ground set `{1..n}`. Its top-type vertices are the
//! points; type `n-1` vertices are the 2-subsets, each joined to its two
//! points. For every point `a` a copy of `Γ_{n-1}` on the remaining points
//! is glued in, with its top-type vertices identified with the pairs
//! `{x, a}`; deeper vertices are indexed by their removal chain. At the
//! bottom, a pair `{x, y}` with chain `c` becomes the path
//! `x — b0 — b1 — y` (`b0` of type 0) when `(c.., x, y)` is an even
//! arrangement of `1..n`, and is reversed otherwise, so odd relabelings
//! swap types 0 and 1.

use thiserror::Error;

use crate::auto::ColorblindAutomorphism;
use crate::graph::{ColoredGraph, GraphBuilder, VertexId};
use crate::group::permutations_lex;

pub const GAMMA_MAX_N: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExampleError {
    #[error("n = {0} is outside 2..={GAMMA_MAX_N}")]
    OutOfRange(usize),
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
}

#[derive(Debug, Clone)]
pub struct GammaN {
    pub n: usize,
    pub graph: ColoredGraph,
    /// `points[a - 1]` is the vertex of ground element `a`.
    pub points: Vec<usize>,
}

fn is_odd(arrangement: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..arrangement.len() {
        for j in i + 1..arrangement.len() {
            if arrangement[i] > arrangement[j] {
                odd = !odd;
            }
        }
    }
    odd
}

struct Build {
    n: usize,
    b: GraphBuilder,
}

impl Build {
    /// Glues a copy of `Γ_{|ground|}` whose points are `point[x]` for each
    /// ground element `x`.
    fn level(&mut self, ground: &[usize], chain: &[usize], point: &dyn Fn(usize) -> usize) {
        if let [x, y] = *ground {
            let mut arr = chain.to_vec();
            arr.extend([x, y]);
            let (near0, near1) = if is_odd(&arr) { (y, x) } else { (x, y) };
            let b0 = self.b.add_vertex(VertexId::base2(chain.to_vec(), x, y, 0), 0);
            let b1 = self.b.add_vertex(VertexId::base2(chain.to_vec(), x, y, 1), 1);
            self.b.add_edge(point(near0), b0);
            self.b.add_edge(b0, b1);
            self.b.add_edge(b1, point(near1));
            return;
        }
        let ty = self.n - 1 - chain.len();
        let mut pair_vertex = std::collections::HashMap::new();
        for (i, &x) in ground.iter().enumerate() {
            for &y in &ground[i + 1..] {
                let p = self.b.add_vertex(VertexId::pair(chain.to_vec(), x, y), ty);
                self.b.add_edge(point(x), p);
                self.b.add_edge(point(y), p);
                pair_vertex.insert((x, y), p);
            }
        }
        for &a in ground {
            let rest: Vec<usize> = ground.iter().copied().filter(|&x| x != a).collect();
            let mut next = chain.to_vec();
            next.push(a);
            let sub = |x: usize| pair_vertex[&(x.min(a), x.max(a))];
            self.level(&rest, &next, &sub);
        }
    }
}

pub fn gamma_n(n: usize) -> Result<GammaN, ExampleError> {
    if !(2..=GAMMA_MAX_N).contains(&n) {
        return Err(ExampleError::OutOfRange(n));
    }
    let mut build = Build {
        n,
        b: GraphBuilder::new((0..=n).map(|t| t.to_string()).collect()),
    };
    let pts: Vec<usize> = (1..=n).map(|a| build.b.add_vertex(VertexId::Point(a), n)).collect();
    let ground: Vec<usize> = (1..=n).collect();
    build.level(&ground, &[], &|a| pts[a - 1]);
    let graph = build.b.build().expect("construction is proper and simple");
    let points = (1..=n).map(|a| graph.index_of(&VertexId::Point(a)).unwrap()).collect();
    Ok(GammaN { n, graph, points })
}

/// `n!/(2 (i-1)!)` for `i < n` (with `(-1)! = 1`), and `n` for `i = n`.
pub fn gamma_class_size(n: usize, i: usize) -> usize {
    let fact = |k: usize| (1..=k).product::<usize>();
    if i == n {
        n
    } else {
        fact(n) / (2 * fact(i.saturating_sub(1)))
    }
}

/// The automorphism induced by relabeling ground element `a` as
/// `perm[a - 1] + 1`.
pub fn natural_action(gamma: &GammaN, perm: &[usize]) -> Result<ColorblindAutomorphism, ExampleError> {
    let n = gamma.n;
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
        return Err(ExampleError::BadPermutation(n));
    }
    let s = |a: usize| perm[a - 1] + 1;
    let odd = is_odd(perm);
    let map = |id: &VertexId| match id {
        VertexId::Point(a) => VertexId::Point(s(*a)),
        VertexId::Pair { chain, pair } => VertexId::pair(chain.iter().map(|&c| s(c)).collect(), s(pair.0), s(pair.1)),
        VertexId::Base2 { chain, pair, slot } => VertexId::base2(
            chain.iter().map(|&c| s(c)).collect(),
            s(pair.0),
            s(pair.1),
            if odd { 1 - slot } else { *slot },
        ),
        other => unreachable!("unexpected vertex {other} in gamma_n"),
    };
    let g = &gamma.graph;
    let vertex_images = (0..g.vertex_count())
        .map(|v| g.index_of(&map(g.id(v))).expect("image exists") as u32)
        .collect();
    let mut type_images: Vec<u32> = (0..=n as u32).collect();
    if odd {
        type_images.swap(0, 1);
    }
    Ok(ColorblindAutomorphism {
        vertex_images,
        type_images,
    })
}

/// All permutations of `0..n`, for driving [`natural_action`].
pub fn ground_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations_lex(n)
}

const BLACK: usize = 0;
const RED: usize = 1;
const BLUE: usize = 2;

fn figure1(completed: bool) -> ColoredGraph {
    let mut b = GraphBuilder::new(vec!["black".into(), "red".into(), "blue".into()]);
    // corners V0, V2, V4 are ids 0, 2, 4; side vertices H0..H5 are 10..15
    let corners: Vec<usize> = [0u64, 2, 4]
        .iter()
        .map(|&i| b.add_vertex(VertexId::Raw(i), BLACK))
        .collect();
    let h: Vec<usize> = (0..6u64)
        .map(|i| b.add_vertex(VertexId::Raw(10 + i), if i % 2 == 0 { RED } else { BLUE }))
        .collect();
    for (c, &v) in corners.iter().enumerate() {
        b.add_edge(v, h[2 * c]);
        b.add_edge(v, h[(2 * c + 5) % 6]);
    }
    for i in 0..6 {
        b.add_edge(h[i], h[(i + 1) % 6]);
    }
    if completed {
        for (c, i) in [1u64, 3, 5].into_iter().enumerate() {
            let v = b.add_vertex(VertexId::Raw(i), BLACK);
            b.add_edge(v, h[2 * c]);
            b.add_edge(v, h[2 * c + 1]);
        }
    }
    b.build().expect("fixture is proper")
}

/// Triangle with black corners and red/blue vertices alternating along the
/// sides; consecutive side vertices are adjacent.
pub fn figure1_solid() -> ColoredGraph {
    figure1(false)
}

/// [`figure1_solid`] with a black vertex on each side joined to the two side
/// vertices next to it, making every maximal flag a chamber.
pub fn figure1_completed() -> ColoredGraph {
    figure1(true)
}
