use super::ColoredGraph;

fn intersect(a: &[usize], nbrs: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < nbrs.len() {
        let b = nbrs[j] as usize;
        match a[i].cmp(&b) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn expand(g: &ColoredGraph, r: &mut Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    // Pivot maximising |P ∩ N(u)|.
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (intersect(&p, g.neighbors(u)).len(), std::cmp::Reverse(u)))
        .unwrap();
    let pivot_nbrs = g.neighbors(pivot);
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|v| pivot_nbrs.binary_search(&(*v as u32)).is_err())
        .collect();
    for v in candidates {
        let nv = g.neighbors(v);
        r.push(v);
        expand(g, r, intersect(&p, nv), intersect(&x, nv), out);
        r.pop();
        p.retain(|&u| u != v);
        let pos = x.binary_search(&v).unwrap_err();
        x.insert(pos, v);
    }
}

/// All inclusion-maximal cliques, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    for v in 0..g.vertex_count() {
        let (earlier, later): (Vec<usize>, Vec<usize>) =
            g.neighbors(v).iter().map(|&u| u as usize).partition(|&u| u < v);
        r.push(v);
        expand(g, &mut r, later, earlier, &mut out);
        r.pop();
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GraphBuilder, VertexId};

    fn graph(types: &[usize], edges: &[(usize, usize)]) -> ColoredGraph {
        let ntypes = types.iter().max().unwrap() + 1;
        let mut b = GraphBuilder::new((0..ntypes).map(|t| t.to_string()).collect());
        for (i, &t) in types.iter().enumerate() {
            b.add_vertex(VertexId::Raw(i as u64), t);
        }
        for &(x, y) in edges {
            b.add_edge(x, y);
        }
        b.build().unwrap()
    }

    #[test]
    fn triangle() {
        let g = graph(&[0, 1, 2], &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn path_of_four() {
        let g = graph(&[0, 1, 0, 1], &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn isolated_vertices_are_cliques() {
        let g = graph(&[0, 1, 0], &[(0, 1)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn two_triangles_sharing_edge() {
        let g = graph(&[0, 1, 2, 2], &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2], vec![0, 1, 3]]);
    }
}
