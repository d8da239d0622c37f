//! Make any incidence system fit for [`crate::geometrize::geometrize`]:
//! subdivide every edge and hang a rigid ray off each midpoint and each
//! vertex of degree at most one. All degrees become at least 2, no triangle
//! survives, and the correlation/automorphism pair is unchanged.
//!
//! A ray is the path `u_0 .. u_{2M+4}` with chords
//! `{u_{2M+4}, u_{2M-1}}` and `{u_{2M+3}, u_{2M}}` closing two 4-cycles at
//! the tail, `M` being the largest type class. Ray vertices alternate
//! between two new types, even positions first.

use thiserror::Error;

use crate::graph::{ColoredGraph, GadgetOwner, GraphBuilder, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementPlan {
    /// Largest type-class size.
    pub m: usize,
    pub edge_owners: Vec<(usize, usize)>,
    /// Vertices of degree 0 or 1.
    pub vertex_owners: Vec<usize>,
    /// Type indices of the two new types in the output.
    pub i0: usize,
    pub i1: usize,
}

impl RefinementPlan {
    pub fn for_graph(g: &ColoredGraph) -> Self {
        RefinementPlan {
            m: g.class_sizes().into_iter().max().unwrap_or(0),
            edge_owners: g.edges().collect(),
            vertex_owners: (0..g.vertex_count()).filter(|&v| g.degree(v) <= 1).collect(),
            i0: g.type_count(),
            i1: g.type_count() + 1,
        }
    }

    pub fn owner_count(&self) -> usize {
        self.edge_owners.len() + self.vertex_owners.len()
    }

    /// Vertices per ray.
    pub fn ray_len(&self) -> usize {
        2 * self.m + 5
    }

    pub fn expected_class_sizes(&self) -> (usize, usize) {
        let k = self.owner_count();
        (k * (self.m + 3), k * (self.m + 2))
    }
}

fn fresh_name(taken: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// Appends one ray to `b`; returns the indices of `u_0 ..`.
fn add_ray(b: &mut GraphBuilder, owner: GadgetOwner, plan: &RefinementPlan) -> Vec<usize> {
    let len = plan.ray_len();
    let u: Vec<usize> = (0..len)
        .map(|j| {
            let ty = if j % 2 == 0 { plan.i0 } else { plan.i1 };
            b.add_vertex(VertexId::gadget(owner.clone(), j), ty)
        })
        .collect();
    for j in 0..len - 1 {
        b.add_edge(u[j], u[j + 1]);
    }
    let m = plan.m;
    b.add_edge(u[2 * m + 4], u[2 * m - 1]);
    b.add_edge(u[2 * m + 3], u[2 * m]);
    u
}

/// Refined system. Original vertices keep their ids and types; the new types
/// `aux0`, `aux1` are appended (primed if those names are taken). Fails only
/// if the output exceeds the graph size limit.
pub fn refine(g: &ColoredGraph) -> Result<ColoredGraph, GraphError> {
    let plan = RefinementPlan::for_graph(g);
    refine_with(g, &plan)
}

pub fn refine_with(g: &ColoredGraph, plan: &RefinementPlan) -> Result<ColoredGraph, GraphError> {
    let mut types = g.types().to_vec();
    let aux0 = fresh_name(&types, "aux0");
    types.push(aux0);
    let aux1 = fresh_name(&types, "aux1");
    types.push(aux1);
    let total = g.vertex_count() + plan.owner_count() * plan.ray_len();
    if total > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooLarge(total));
    }
    let mut b = GraphBuilder::new(types);
    for v in 0..g.vertex_count() {
        b.add_vertex(g.id(v).clone(), g.type_of(v));
    }
    for &(v, w) in &plan.edge_owners {
        let owner = GadgetOwner::Edge(g.id(v).clone(), g.id(w).clone());
        let u = add_ray(&mut b, owner, plan);
        b.add_edge(v, u[0]);
        b.add_edge(u[0], w);
    }
    for &w in &plan.vertex_owners {
        let u = add_ray(&mut b, GadgetOwner::Vertex(g.id(w).clone()), plan);
        b.add_edge(w, u[0]);
        if g.degree(w) == 0 {
            b.add_edge(w, u[2]);
        }
    }
    b.build()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub m: usize,
    pub owners: usize,
    pub i0_count: usize,
    pub i1_count: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("class size audit failed: {0}")]
pub struct AuditFailure(pub String);

/// Checks the sizes of the two new type classes against
/// `(|E|+|V_{0,1}|)(M+3)` and `(|E|+|V_{0,1}|)(M+2)`, and that both exceed `M`.
pub fn class_size_audit(g: &ColoredGraph, refined: &ColoredGraph) -> Result<AuditReport, AuditFailure> {
    let plan = RefinementPlan::for_graph(g);
    if refined.type_count() != g.type_count() + 2 {
        return Err(AuditFailure(format!(
            "expected {} types, found {}",
            g.type_count() + 2,
            refined.type_count()
        )));
    }
    let sizes = refined.class_sizes();
    let report = AuditReport {
        m: plan.m,
        owners: plan.owner_count(),
        i0_count: sizes[plan.i0],
        i1_count: sizes[plan.i1],
    };
    let expected = plan.expected_class_sizes();
    if (report.i0_count, report.i1_count) != expected {
        return Err(AuditFailure(format!(
            "new classes have sizes ({}, {}), expected {:?}",
            report.i0_count, report.i1_count, expected
        )));
    }
    if report.i1_count <= plan.m || report.i0_count == report.i1_count {
        return Err(AuditFailure(format!(
            "new classes {expected:?} do not separate from M = {}",
            plan.m
        )));
    }
    if sizes[..g.type_count()] != g.class_sizes()[..] {
        return Err(AuditFailure("original class sizes changed".into()));
    }
    Ok(report)
}
