//! Automorphism groups of colored graphs.
//!
//! `Aut_c` is the group of type-preserving automorphisms. `Aut_cb` is the
//! colorblind group: graph automorphisms that map each type class onto a
//! type class, each carrying its induced type permutation `σ_f`.
//!
//! The colorblind group is searched on an augmented graph with one extra
//! node per type joined to every vertex of that type. Type nodes get their
//! own color, so an automorphism of the augmented graph is exactly a
//! colorblind automorphism together with its `σ_f`, and the search decides
//! the class bijection while it maps vertices.

mod search;

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::graph::ColoredGraph;
use crate::group::{
    make_pair, pair_isomorphic, ElementPermutation, FiniteGroup, GroupError, GroupPair, DEFAULT_ISO_CAP,
};

pub use search::{automorphism_group, PermGroup, SearchLimits};

/// Search nodes allowed per group computation unless configured otherwise.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Element lists are produced only for groups up to this order.
pub const ELEMENT_LIST_MAX: u128 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutoError {
    #[error("search exceeded the node budget of {budget}")]
    ResourceLimit { budget: u64 },
    #[error("group order overflows 128 bits")]
    OrderOverflow,
    #[error("map is not type-coherent: {0}")]
    Incoherent(String),
    #[error("group of order {order} is too large for {what} (cap {cap})")]
    GroupTooLarge { order: u128, cap: u128, what: &'static str },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
    /// Worker threads for the candidate tests of each search level.
    pub jobs: usize,
    /// Largest group order handed to abstract pair isomorphism.
    pub iso_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            jobs: 1,
            iso_cap: DEFAULT_ISO_CAP,
        }
    }
}

impl SearchConfig {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            node_budget: self.node_budget,
            jobs: self.jobs.max(1),
        }
    }
}

/// A graph automorphism mapping type classes to type classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorblindAutomorphism {
    pub vertex_images: Vec<u32>,
    pub type_images: Vec<u32>,
}

impl ColorblindAutomorphism {
    pub fn identity(n: usize, types: usize) -> Self {
        ColorblindAutomorphism {
            vertex_images: (0..n as u32).collect(),
            type_images: (0..types as u32).collect(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        ColorblindAutomorphism {
            vertex_images: other
                .vertex_images
                .iter()
                .map(|&x| self.vertex_images[x as usize])
                .collect(),
            type_images: other
                .type_images
                .iter()
                .map(|&x| self.type_images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = |p: &[u32]| {
            let mut out = vec![0u32; p.len()];
            for (i, &x) in p.iter().enumerate() {
                out[x as usize] = i as u32;
            }
            out
        };
        ColorblindAutomorphism {
            vertex_images: inv(&self.vertex_images),
            type_images: inv(&self.type_images),
        }
    }

    pub fn is_type_preserving(&self) -> bool {
        self.type_images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn is_identity(&self) -> bool {
        self.is_type_preserving() && self.vertex_images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Edge-preserving both ways and type-coherent with `type_images`.
    pub fn is_automorphism_of(&self, g: &ColoredGraph) -> bool {
        let n = g.vertex_count();
        if self.vertex_images.len() != n || self.type_images.len() != g.type_count() {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in &self.vertex_images {
            if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                return false;
            }
        }
        (0..n).all(|v| {
            let fv = self.vertex_images[v] as usize;
            g.type_of(fv) == self.type_images[g.type_of(v)] as usize
                && g.degree(v) == g.degree(fv)
                && g.neighbors(v)
                    .iter()
                    .all(|&w| g.adjacent(fv, self.vertex_images[w as usize] as usize))
        })
    }
}

/// A permutation group of colorblind automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub generators: Vec<ColorblindAutomorphism>,
    pub order: u128,
    vertices: usize,
    types: usize,
}

impl AutomorphismGroup {
    /// All elements, sorted, when the order is at most [`ELEMENT_LIST_MAX`].
    pub fn elements(&self) -> Option<Vec<ColorblindAutomorphism>> {
        if self.order > ELEMENT_LIST_MAX {
            return None;
        }
        let id = ColorblindAutomorphism::identity(self.vertices, self.types);
        let mut seen: HashSet<ColorblindAutomorphism> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for g in &self.generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        Some(queue)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroupReport {
    pub colorblind: AutomorphismGroup,
    pub color: AutomorphismGroup,
}

impl AutomorphismGroupReport {
    pub fn cb_order(&self) -> u128 {
        self.colorblind.order
    }

    pub fn c_order(&self) -> u128 {
        self.color.order
    }

    /// Orbits of the type permutations `σ_f`, each sorted.
    pub fn sigma_orbits(&self) -> Vec<Vec<usize>> {
        let k = self.colorblind.types;
        let mut comp: Vec<usize> = (0..k).collect();
        fn root(comp: &mut [usize], mut x: usize) -> usize {
            while comp[x] != x {
                comp[x] = comp[comp[x]];
                x = comp[x];
            }
            x
        }
        for g in &self.colorblind.generators {
            for (i, &j) in g.type_images.iter().enumerate() {
                let (a, b) = (root(&mut comp, i), root(&mut comp, j as usize));
                comp[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); k];
        for i in 0..k {
            let r = root(&mut comp, i);
            groups[r].push(i);
        }
        groups.retain(|g| !g.is_empty());
        groups
    }
}

fn augmented(g: &ColoredGraph, extra_colors: Option<&[u32]>) -> (Vec<Vec<u32>>, Vec<u32>) {
    let n = g.vertex_count();
    let k = g.type_count();
    let mut adj: Vec<Vec<u32>> = g.adjacency().to_vec();
    adj.resize(n + k, Vec::new());
    for v in 0..n {
        let t = n + g.type_of(v);
        adj[v].push(t as u32);
        adj[t].push(v as u32);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut colors = vec![0u32; n + k];
    if let Some(extra) = extra_colors {
        colors[..n].copy_from_slice(extra);
    }
    let top = colors.iter().copied().max().unwrap_or(0) + 1;
    colors[n..].fill(top);
    (adj, colors)
}

/// Group of type-preserving automorphisms.
pub fn color_automorphisms(g: &ColoredGraph, cfg: &SearchConfig) -> Result<AutomorphismGroup, AutoError> {
    let colors: Vec<u32> = g.type_assignment().iter().map(|&t| t as u32).collect();
    let pg = automorphism_group(g.adjacency(), &colors, cfg.limits())?;
    let k = g.type_count();
    Ok(AutomorphismGroup {
        generators: pg
            .generators
            .into_iter()
            .map(|p| ColorblindAutomorphism {
                vertex_images: p,
                type_images: (0..k as u32).collect(),
            })
            .collect(),
        order: pg.order,
        vertices: g.vertex_count(),
        types: k,
    })
}

fn colorblind_with(
    g: &ColoredGraph,
    fixed: Option<&[u32]>,
    cfg: &SearchConfig,
) -> Result<AutomorphismGroup, AutoError> {
    let n = g.vertex_count();
    let (adj, colors) = augmented(g, fixed);
    let pg = automorphism_group(&adj, &colors, cfg.limits())?;
    Ok(AutomorphismGroup {
        generators: pg
            .generators
            .into_iter()
            .map(|p| ColorblindAutomorphism {
                vertex_images: p[..n].to_vec(),
                type_images: p[n..].iter().map(|&x| x - n as u32).collect(),
            })
            .collect(),
        order: pg.order,
        vertices: n,
        types: g.type_count(),
    })
}

/// Group of colorblind automorphisms (correlations).
pub fn colorblind_automorphisms(g: &ColoredGraph, cfg: &SearchConfig) -> Result<AutomorphismGroup, AutoError> {
    colorblind_with(g, None, cfg)
}

pub fn automorphism_report(g: &ColoredGraph, cfg: &SearchConfig) -> Result<AutomorphismGroupReport, AutoError> {
    Ok(AutomorphismGroupReport {
        colorblind: colorblind_automorphisms(g, cfg)?,
        color: color_automorphisms(g, cfg)?,
    })
}

/// `σ_f` for a vertex permutation `f`, or `Incoherent` when two vertices of
/// one type land in different types or the induced map is not a bijection.
pub fn induced_type_permutation(g: &ColoredGraph, vertex_images: &[u32]) -> Result<Vec<u32>, AutoError> {
    let n = g.vertex_count();
    if vertex_images.len() != n || vertex_images.iter().any(|&x| x as usize >= n) {
        return Err(AutoError::Incoherent("not a map on the vertex set".into()));
    }
    let k = g.type_count();
    let mut sigma = vec![u32::MAX; k];
    for (v, &fv) in vertex_images.iter().enumerate() {
        let t = g.type_of(v);
        let image = g.type_of(fv as usize) as u32;
        if sigma[t] == u32::MAX {
            sigma[t] = image;
        } else if sigma[t] != image {
            return Err(AutoError::Incoherent(format!(
                "type {} is sent to both {} and {image}",
                g.types()[t],
                g.types()[sigma[t] as usize]
            )));
        }
    }
    let mut seen = vec![false; k];
    for &s in &sigma {
        if s == u32::MAX || std::mem::replace(&mut seen[s as usize], true) {
            return Err(AutoError::Incoherent("induced type map is not a bijection".into()));
        }
    }
    Ok(sigma)
}

/// Abstract group generated by `elements` (closed under composition and
/// containing the identity), with subgroup membership given by `in_h`.
pub fn abstract_pair(
    elements: &[ColorblindAutomorphism],
    in_h: impl Fn(&ColorblindAutomorphism) -> bool,
) -> Result<GroupPair, AutoError> {
    let index: HashMap<&ColorblindAutomorphism, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elements.len();
    if n > crate::group::MAX_ORDER {
        return Err(AutoError::GroupTooLarge {
            order: n as u128,
            cap: crate::group::MAX_ORDER as u128,
            what: "Cayley tables",
        });
    }
    let mut table = Vec::with_capacity(n * n);
    for a in elements {
        for b in elements {
            let ab = a.compose(b);
            let i = *index
                .get(&ab)
                .ok_or_else(|| AutoError::Internal("element list is not closed".into()))?;
            table.push(i as u16);
        }
    }
    let group = FiniteGroup::from_flat(n, table)?;
    let members = elements.iter().map(in_h).collect();
    Ok(make_pair(group, members)?)
}

/// `(Aut_cb, Aut_c)` as an abstract pair.
pub fn report_pair(report: &AutomorphismGroupReport, cap: usize) -> Result<GroupPair, AutoError> {
    let order = report.cb_order();
    let elements = report
        .colorblind
        .elements()
        .filter(|_| order <= cap as u128)
        .ok_or(AutoError::GroupTooLarge {
            order,
            cap: cap as u128,
            what: "abstract pair isomorphism",
        })?;
    abstract_pair(&elements, ColorblindAutomorphism::is_type_preserving)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    pub cb_order: u128,
    pub c_order: u128,
    pub pair_match: bool,
    /// `φ: G -> Aut_cb` on element indices, where `Aut_cb` elements are
    /// indexed in sorted order.
    pub witness: Option<ElementPermutation>,
    pub sigma_orbits: Vec<Vec<usize>>,
}

/// Compares `(Aut_cb(g), Aut_c(g))` with `pair`.
pub fn verify_pair(g: &ColoredGraph, pair: &GroupPair, cfg: &SearchConfig) -> Result<PairVerdict, AutoError> {
    let report = automorphism_report(g, cfg)?;
    verify_report(&report, pair, cfg)
}

pub fn verify_report(
    report: &AutomorphismGroupReport,
    pair: &GroupPair,
    cfg: &SearchConfig,
) -> Result<PairVerdict, AutoError> {
    let mut verdict = PairVerdict {
        cb_order: report.cb_order(),
        c_order: report.c_order(),
        pair_match: false,
        witness: None,
        sigma_orbits: report.sigma_orbits(),
    };
    if verdict.cb_order != pair.group().order() as u128 || verdict.c_order != pair.subgroup_order() as u128 {
        return Ok(verdict);
    }
    let found = report_pair(report, cfg.iso_cap)?;
    verdict.witness = pair_isomorphic(pair, &found);
    verdict.pair_match = verdict.witness.is_some();
    Ok(verdict)
}

/// Result of checking that a construction preserved the group pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservationReport {
    pub input_orders: (u128, u128),
    pub output_orders: (u128, u128),
    /// Every output generator maps the embedded input vertices onto
    /// themselves and restricts to a colorblind automorphism of the input
    /// with matching type permutation.
    pub restrictions_valid: bool,
    /// Only the identity fixes every embedded input vertex.
    pub kernel_trivial: bool,
    /// Abstract pair isomorphism, run when the orders are within the cap.
    pub abstract_match: Option<bool>,
    pub preserved: bool,
}

/// Position in `output` of each `input` vertex, matched by id.
pub fn embedding_by_id(input: &ColoredGraph, output: &ColoredGraph) -> Option<Vec<usize>> {
    input.ids().iter().map(|id| output.index_of(id)).collect()
}

/// Checks that `output` has the same pair as `input` through the restriction
/// map `Aut_cb(output) -> Aut_cb(input)`. Input types must keep their
/// indices in `output`, and `embed[v]` must be the output vertex for input
/// vertex `v`.
///
/// Restriction is a homomorphism once generators preserve the embedded set.
/// With a trivial kernel and equal orders it is an isomorphism, and it sends
/// `Aut_c(output)` into `Aut_c(input)` when the restricted color generators
/// preserve types, which with equal `c` orders makes it a pair isomorphism.
pub fn pair_preserved(
    input: &ColoredGraph,
    output: &ColoredGraph,
    embed: &[usize],
    cfg: &SearchConfig,
) -> Result<PreservationReport, AutoError> {
    let before = automorphism_report(input, cfg)?;
    let after = automorphism_report(output, cfg)?;
    let n_in = input.vertex_count();
    let k_in = input.type_count();

    let mut back = vec![u32::MAX; output.vertex_count()];
    for (v, &w) in embed.iter().enumerate() {
        back[w] = v as u32;
    }
    let restrict = |f: &ColorblindAutomorphism| -> Option<ColorblindAutomorphism> {
        let vertex_images = embed
            .iter()
            .map(|&w| back[f.vertex_images[w] as usize])
            .collect::<Vec<u32>>();
        if vertex_images.contains(&u32::MAX) {
            return None;
        }
        let type_images = f.type_images[..k_in].to_vec();
        if type_images.iter().any(|&t| t as usize >= k_in) {
            return None;
        }
        Some(ColorblindAutomorphism {
            vertex_images,
            type_images,
        })
    };
    let restrictions_valid = after
        .colorblind
        .generators
        .iter()
        .chain(&after.color.generators)
        .all(|f| restrict(f).is_some_and(|r| r.is_automorphism_of(input)))
        && after
            .color
            .generators
            .iter()
            .all(|f| restrict(f).is_some_and(|r| r.is_type_preserving()));

    let mut pin = vec![0u32; output.vertex_count()];
    for (v, &w) in embed.iter().enumerate() {
        pin[w] = 1 + v as u32;
    }
    let kernel = colorblind_with(output, Some(&pin), cfg)?;
    let kernel_trivial = kernel.order == 1;

    let input_orders = (before.cb_order(), before.c_order());
    let output_orders = (after.cb_order(), after.c_order());
    let mut preserved = restrictions_valid && kernel_trivial && input_orders == output_orders && n_in == embed.len();

    let abstract_match = if input_orders.0 <= cfg.iso_cap as u128 && output_orders.0 <= cfg.iso_cap as u128 {
        let p = report_pair(&before, cfg.iso_cap)?;
        let q = report_pair(&after, cfg.iso_cap)?;
        let m = pair_isomorphic(&p, &q).is_some();
        preserved &= m;
        Some(m)
    } else {
        None
    };

    Ok(PreservationReport {
        input_orders,
        output_orders,
        restrictions_valid,
        kernel_trivial,
        abstract_match,
        preserved,
    })
}
