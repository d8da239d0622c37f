//! Independent brute-force oracles. They share nothing with the library's
//! search beyond the graph accessors.
#![allow(dead_code)]

use std::collections::BTreeSet;

use incidence_core::graph::{ColoredGraph, GraphBuilder, VertexId};

/// `(vertex images, type images)`.
pub type Correlation = (Vec<u32>, Vec<u32>);

struct Brute<'a> {
    g: &'a ColoredGraph,
    image: Vec<u32>,
    used: Vec<bool>,
    sigma: Vec<u32>,
    sigma_used: Vec<bool>,
    keep: bool,
    out: Vec<Correlation>,
    counts: (u64, u64),
}

impl Brute<'_> {
    fn go(&mut self, v: usize) {
        let g = self.g;
        let n = g.vertex_count();
        if v == n {
            self.counts.0 += 1;
            if self.sigma.iter().enumerate().all(|(i, &x)| i as u32 == x) {
                self.counts.1 += 1;
            }
            if self.keep {
                self.out.push((self.image.clone(), self.sigma.clone()));
            }
            return;
        }
        let tv = g.type_of(v);
        for w in 0..n {
            if self.used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            let tw = g.type_of(w) as u32;
            let fresh = self.sigma[tv] == u32::MAX;
            if fresh {
                if self.sigma_used[tw as usize] {
                    continue;
                }
            } else if self.sigma[tv] != tw {
                continue;
            }
            let consistent = (0..v).all(|u| g.adjacent(u, v) == g.adjacent(self.image[u] as usize, w));
            if !consistent {
                continue;
            }
            self.image[v] = w as u32;
            self.used[w] = true;
            if fresh {
                self.sigma[tv] = tw;
                self.sigma_used[tw as usize] = true;
            }
            self.go(v + 1);
            if fresh {
                self.sigma[tv] = u32::MAX;
                self.sigma_used[tw as usize] = false;
            }
            self.used[w] = false;
        }
    }
}

/// Every colorblind automorphism, by backtracking over all vertex
/// bijections (pruned by degree, partial type bijection and adjacency with
/// earlier vertices). Sorted.
pub fn brute_correlations(g: &ColoredGraph) -> Vec<Correlation> {
    let mut out = brute(g, true).out;
    out.sort();
    out
}

fn brute(g: &ColoredGraph, keep: bool) -> Brute<'_> {
    let n = g.vertex_count();
    let k = g.type_count();
    let mut b = Brute {
        g,
        image: vec![0; n],
        used: vec![false; n],
        sigma: vec![u32::MAX; k],
        sigma_used: vec![false; k],
        keep,
        out: Vec::new(),
        counts: (0, 0),
    };
    b.go(0);
    b
}

/// `(|Aut_cb|, |Aut_c|)` by the same enumeration, without storing elements.
pub fn brute_orders(g: &ColoredGraph) -> (u64, u64) {
    brute(g, false).counts
}

/// The type-preserving ones among [`brute_correlations`].
pub fn brute_automorphisms(g: &ColoredGraph) -> Vec<Correlation> {
    brute_correlations(g)
        .into_iter()
        .filter(|(_, s)| s.iter().enumerate().all(|(i, &x)| i as u32 == x))
        .collect()
}

/// Maximal cliques by checking every vertex subset. Only for small graphs.
pub fn brute_maximal_cliques(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 20);
    let is_clique = |mask: u32| {
        (0..n).all(|a| mask & (1 << a) == 0 || (a + 1..n).all(|b| mask & (1 << b) == 0 || g.adjacent(a, b)))
    };
    let cliques: Vec<u32> = (1u32..1 << n).filter(|&m| is_clique(m)).collect();
    let set: BTreeSet<u32> = cliques.iter().copied().collect();
    let mut out: Vec<Vec<usize>> = cliques
        .into_iter()
        .filter(|&m| (0..n).all(|v| m & (1 << v) != 0 || !set.contains(&(m | 1 << v))))
        .map(|m| (0..n).filter(|&v| m & (1 << v) != 0).collect())
        .collect();
    out.sort();
    out
}

pub fn graph(types: &[usize], edges: &[(usize, usize)]) -> ColoredGraph {
    let k = types.iter().max().unwrap() + 1;
    let mut b = GraphBuilder::new((0..k).map(|t| t.to_string()).collect());
    for (i, &t) in types.iter().enumerate() {
        b.add_vertex(VertexId::Raw(i as u64), t);
    }
    for &(x, y) in edges {
        b.add_edge(x, y);
    }
    b.build().unwrap()
}

/// Indices of the even permutations `(0 1 k)` in the lexicographic listing
/// of `S_n`, which generate `A_n`.
pub fn alternating_generators(n: usize) -> Vec<usize> {
    let perms = incidence_core::group::permutations_lex(n);
    (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            perms.iter().position(|q| *q == p).unwrap()
        })
        .collect()
}
