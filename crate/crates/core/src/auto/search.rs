//! Automorphism group of a vertex-colored graph by individualization and
//! refinement.
//!
//! The first path of the search tree fixes a base `b_0, b_1, ..`. Working
//! from the deepest level up, for every vertex `v` in the cell of `b_k` not
//! yet in the orbit of `b_k` under the generators found so far, we look for
//! one automorphism fixing `b_0..b_{k-1}` and sending `b_k` to `v`. The
//! orbit sizes multiply to the group order.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::AutoError;

/// Ordered partition of `0..n`; `cell[v]` is the position of `v`'s cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Partition {
    cell: Vec<u32>,
    count: u32,
}

impl Partition {
    pub(crate) fn from_colors(colors: &[u32]) -> Self {
        let mut keys: Vec<u32> = colors.to_vec();
        keys.sort_unstable();
        keys.dedup();
        let cell = colors.iter().map(|c| keys.binary_search(c).unwrap() as u32).collect();
        Partition {
            cell,
            count: keys.len() as u32,
        }
    }

    fn is_discrete(&self) -> bool {
        self.count as usize == self.cell.len()
    }

    fn first_nonsingleton(&self) -> Option<u32> {
        if self.is_discrete() {
            return None;
        }
        let mut size = vec![0u32; self.count as usize];
        for &c in &self.cell {
            size[c as usize] += 1;
        }
        size.iter().position(|&s| s > 1).map(|c| c as u32)
    }

    fn members(&self, c: u32) -> impl Iterator<Item = u32> + '_ {
        self.cell
            .iter()
            .enumerate()
            .filter(move |(_, &x)| x == c)
            .map(|(v, _)| v as u32)
    }

    fn individualize(&self, v: u32) -> Partition {
        let c = self.cell[v as usize];
        let cell = self
            .cell
            .iter()
            .enumerate()
            .map(|(u, &x)| if x > c || (x == c && u as u32 != v) { x + 1 } else { x })
            .collect();
        Partition {
            cell,
            count: self.count + 1,
        }
    }

    /// Coarsest equitable refinement. New cells are ordered by
    /// (old cell, sorted multiset of neighbour cells), which depends only on
    /// the partition and the graph, never on vertex labels.
    pub(crate) fn refine(&self, adj: &[Vec<u32>]) -> Partition {
        let n = self.cell.len();
        let mut cur = self.clone();
        let mut order: Vec<u32> = (0..n as u32).collect();
        let mut offsets = vec![0usize; n + 1];
        let mut flat: Vec<u32> = Vec::new();
        loop {
            if cur.is_discrete() {
                return cur;
            }
            flat.clear();
            for v in 0..n {
                offsets[v] = flat.len();
                let start = flat.len();
                flat.extend(adj[v].iter().map(|&u| cur.cell[u as usize]));
                flat[start..].sort_unstable();
            }
            offsets[n] = flat.len();
            let sig = |v: u32| {
                let v = v as usize;
                (cur.cell[v], &flat[offsets[v]..offsets[v + 1]])
            };
            order.sort_unstable_by(|&a, &b| sig(a).cmp(&sig(b)));
            let mut next = vec![0u32; n];
            let mut id = 0u32;
            for w in 0..n {
                if w > 0 && sig(order[w]) != sig(order[w - 1]) {
                    id += 1;
                }
                next[order[w] as usize] = id;
            }
            let count = id + 1;
            if count == cur.count {
                return cur;
            }
            cur = Partition { cell: next, count };
        }
    }

    /// Cell sizes and, per cell, a representative's neighbour-cell multiset.
    /// Equal for two equitable partitions related by an automorphism.
    fn quotient(&self, adj: &[Vec<u32>]) -> Vec<u32> {
        let k = self.count as usize;
        let mut rep = vec![u32::MAX; k];
        let mut size = vec![0u32; k];
        for (v, &c) in self.cell.iter().enumerate() {
            size[c as usize] += 1;
            if rep[c as usize] == u32::MAX {
                rep[c as usize] = v as u32;
            }
        }
        let mut out = Vec::with_capacity(3 * k);
        let mut nb = Vec::new();
        for c in 0..k {
            nb.clear();
            nb.extend(adj[rep[c] as usize].iter().map(|&u| self.cell[u as usize]));
            nb.sort_unstable();
            out.push(size[c]);
            out.push(nb.len() as u32);
            out.extend_from_slice(&nb);
        }
        out
    }

    /// Vertex in each cell, for discrete partitions.
    fn labelling(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.cell.len()];
        for (v, &c) in self.cell.iter().enumerate() {
            out[c as usize] = v as u32;
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    pub node_budget: u64,
    pub jobs: usize,
}

/// Permutation group on `0..degree` found by the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    pub order: u128,
    pub base: Vec<u32>,
    pub orbit_sizes: Vec<usize>,
}

struct Searcher<'a> {
    adj: &'a [Vec<u32>],
    nodes: AtomicU64,
    budget: u64,
}

impl Searcher<'_> {
    fn tick(&self) -> Result<(), AutoError> {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.budget {
            Err(AutoError::ResourceLimit { budget: self.budget })
        } else {
            Ok(())
        }
    }

    fn refine(&self, p: &Partition) -> Result<Partition, AutoError> {
        self.tick()?;
        Ok(p.refine(self.adj))
    }

    fn is_automorphism(&self, perm: &[u32]) -> bool {
        self.adj.iter().enumerate().all(|(a, list)| {
            let fa = perm[a] as usize;
            list.iter()
                .all(|&b| self.adj[fa].binary_search(&perm[b as usize]).is_ok())
        })
    }

    /// Some automorphism mapping the discrete refinement of `left` onto that
    /// of `right`, cell by cell.
    fn extend(&self, left: &Partition, right: &Partition) -> Result<Option<Vec<u32>>, AutoError> {
        let Some(c) = left.first_nonsingleton() else {
            let l = left.labelling();
            let r = right.labelling();
            let mut perm = vec![0u32; l.len()];
            for (x, y) in l.iter().zip(&r) {
                perm[*x as usize] = *y;
            }
            return Ok(self.is_automorphism(&perm).then_some(perm));
        };
        let x = left.members(c).next().unwrap();
        let l2 = self.refine(&left.individualize(x))?;
        let lq = l2.quotient(self.adj);
        let candidates: Vec<u32> = right.members(c).collect();
        for y in candidates {
            let r2 = self.refine(&right.individualize(y))?;
            if r2.quotient(self.adj) != lq {
                continue;
            }
            if let Some(p) = self.extend(&l2, &r2)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

fn orbit(start: u32, gens: &[Vec<u32>], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start as usize] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g[x as usize];
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Full automorphism group of the graph `adj` (sorted neighbour lists)
/// preserving the vertex coloring `colors`.
pub fn automorphism_group(adj: &[Vec<u32>], colors: &[u32], limits: SearchLimits) -> Result<PermGroup, AutoError> {
    let n = adj.len();
    assert_eq!(colors.len(), n);
    let searcher = Searcher {
        adj,
        nodes: AtomicU64::new(0),
        budget: limits.node_budget,
    };
    let pool = if limits.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(limits.jobs)
                .build()
                .map_err(|e| AutoError::Internal(e.to_string()))?,
        )
    } else {
        None
    };

    struct Level {
        before: Partition,
        base: u32,
        after: Partition,
    }
    let mut levels = Vec::new();
    let mut p = searcher.refine(&Partition::from_colors(colors))?;
    while let Some(c) = p.first_nonsingleton() {
        let b = p.members(c).next().unwrap();
        let next = searcher.refine(&p.individualize(b))?;
        levels.push(Level {
            before: p,
            base: b,
            after: next.clone(),
        });
        p = next;
    }

    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut orbit_sizes = vec![1usize; levels.len()];
    let mut order: u128 = 1;
    for k in (0..levels.len()).rev() {
        let lvl = &levels[k];
        let target_quotient = lvl.after.quotient(adj);
        let cell: Vec<u32> = lvl.before.members(lvl.before.cell[lvl.base as usize]).collect();
        let mut in_orbit = orbit(lvl.base, &gens, n);
        let mut tested = vec![false; n];
        let test = |v: u32| -> Result<Option<Vec<u32>>, AutoError> {
            let right = searcher.refine(&lvl.before.individualize(v))?;
            if right.quotient(adj) != target_quotient {
                return Ok(None);
            }
            searcher.extend(&lvl.after, &right)
        };
        loop {
            let batch: Vec<u32> = cell
                .iter()
                .copied()
                .filter(|&v| !in_orbit[v as usize] && !tested[v as usize])
                .take(limits.jobs.max(1))
                .collect();
            if batch.is_empty() {
                break;
            }
            let results: Vec<Result<Option<Vec<u32>>, AutoError>> = match &pool {
                Some(pool) if batch.len() > 1 => pool.install(|| batch.par_iter().map(|&v| test(v)).collect()),
                _ => batch.iter().map(|&v| test(v)).collect(),
            };
            for (&v, res) in batch.iter().zip(results) {
                tested[v as usize] = true;
                if in_orbit[v as usize] {
                    continue;
                }
                if let Some(perm) = res? {
                    gens.push(perm);
                    in_orbit = orbit(lvl.base, &gens, n);
                }
            }
        }
        let size = in_orbit.iter().filter(|&&x| x).count();
        orbit_sizes[k] = size;
        order = order.checked_mul(size as u128).ok_or(AutoError::OrderOverflow)?;
    }

    Ok(PermGroup {
        degree: n,
        generators: gens,
        order,
        base: levels.iter().map(|l| l.base).collect(),
        orbit_sizes,
    })
}
