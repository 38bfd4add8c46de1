//! Reduction of 3-connected, maximally independent planar graphs: edge
//! contraction, triangle substitution and two-vertex (QS) decomposition.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::connectivity::{find_separation_pairs, is_k_connected_or_false};
use crate::error::{GraphError, ReductionError};
use crate::graph::{Edge, Graph, VertexId};
use crate::planarity::is_planar;

/// `G/e` is independent and has the same freedom number as `G`.
pub fn is_contractible(g: &Graph, e: Edge) -> Result<bool, GraphError> {
    let h = g.contract_edge(e)?;
    Ok(h.freedom() == g.freedom() && h.is_independent())
}

fn require_mi_planar(g: &Graph) -> Result<(), ReductionError> {
    if !g.is_maximally_independent() {
        return Err(ReductionError::Precondition("not maximally independent"));
    }
    if !is_planar(g) {
        return Err(ReductionError::Precondition("not planar"));
    }
    Ok(())
}

fn require_reducible_shape(g: &Graph) -> Result<(), ReductionError> {
    require_mi_planar(g)?;
    if g.order() > 3 && !is_k_connected_or_false(g, 3) {
        return Err(ReductionError::Precondition("not 3-connected"));
    }
    Ok(())
}

/// 3-connected, maximally independent and planar.
pub fn is_reducible_shape(g: &Graph) -> bool {
    g.order() > 3 && is_k_connected_or_false(g, 3) && g.is_maximally_independent() && is_planar(g)
}

pub fn contractible_edges(g: &Graph) -> Result<Vec<Edge>, ReductionError> {
    require_mi_planar(g)?;
    let mut out = Vec::new();
    for &e in g.edges() {
        if is_contractible(g, e)? {
            out.push(e);
        }
    }
    Ok(out)
}

/// A 3-cycle joined to the rest of the graph by exactly three edges, one at
/// each corner, ending at three distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Limpet {
    pub triangle: [VertexId; 3],
    /// Outgoing edges, listed in corner order.
    pub outgoing: [Edge; 3],
}

impl Limpet {
    /// Outside endpoints of the outgoing edges.
    pub fn feet(&self) -> Vec<VertexId> {
        self.outgoing
            .iter()
            .zip(self.triangle)
            .map(|(e, c)| if e.u() == c { e.v() } else { e.u() })
            .collect()
    }
}

pub fn find_limpets(g: &Graph) -> Vec<Limpet> {
    let mut out = Vec::new();
    for &e in g.edges() {
        let apexes = g.triangles_through(e).expect("edge of g");
        for z in apexes.into_iter().filter(|&z| z > e.v()) {
            let tri = [e.u(), e.v(), z];
            let mut outgoing = Vec::new();
            let mut per_corner = true;
            for &c in &tri {
                let out_edges: Vec<Edge> = g
                    .neighbors(c)
                    .expect("vertex of g")
                    .into_iter()
                    .filter(|w| !tri.contains(w))
                    .map(|w| Edge::new(c, w).expect("distinct"))
                    .collect();
                per_corner &= out_edges.len() == 1;
                outgoing.extend(out_edges);
            }
            if per_corner {
                let limpet = Limpet { triangle: tri, outgoing: [outgoing[0], outgoing[1], outgoing[2]] };
                let feet = limpet.feet();
                if feet[0] != feet[1] && feet[1] != feet[2] && feet[0] != feet[2] {
                    out.push(limpet);
                }
            }
        }
    }
    out
}

/// One step of the reduction calculus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionStep {
    Contract { edge: Edge },
    Substitute { subgraph: Vec<VertexId>, attachments: [VertexId; 3] },
}

pub fn apply_step(g: &Graph, step: &ReductionStep) -> Result<Graph, ReductionError> {
    match step {
        ReductionStep::Contract { edge } => Ok(g.contract_edge(*edge)?),
        ReductionStep::Substitute { subgraph, attachments } => {
            substitute_triangle(g, subgraph, *attachments)
        }
    }
}

/// Replaces the induced subgraph on `h` by a triangle on its three attachment vertices.
pub fn substitute_triangle(
    g: &Graph,
    h: &[VertexId],
    attachments: [VertexId; 3],
) -> Result<Graph, ReductionError> {
    let invalid = |m: &str| ReductionError::InvalidSubstitution(m.to_string());
    let mut h: Vec<VertexId> = h.to_vec();
    h.sort_unstable();
    h.dedup();
    let sub = g.induced_subgraph(&h)?;
    if h.len() < 3 || h.len() >= g.order() {
        return Err(invalid("subgraph must be proper with at least 3 vertices"));
    }
    if !sub.is_maximally_independent() {
        return Err(invalid("subgraph is not maximally independent"));
    }
    let mut want = attachments.to_vec();
    want.sort_unstable();
    if g.attachment_vertices(&h)? != want {
        return Err(invalid("attachment vertices do not match"));
    }
    let internal: Vec<VertexId> = h.iter().copied().filter(|v| !want.contains(v)).collect();
    let triangle: Vec<Edge> = want
        .iter()
        .tuple_combinations()
        .map(|(&a, &b)| Edge::new(a, b).expect("distinct"))
        .collect();
    Ok(g.remove_vertices(&internal)?.with_edges(&triangle)?)
}

/// Finds a contraction or a triangle substitution that keeps the graph
/// 3-connected, maximally independent and planar.
pub fn find_reduction(g: &Graph) -> Result<ReductionStep, ReductionError> {
    if g.order() <= 6 {
        return Err(ReductionError::Precondition("too small to reduce (at most 6 vertices)"));
    }
    require_reducible_shape(g)?;
    for &e in g.edges() {
        if g.triangles_through(e)?.len() != 1 {
            continue;
        }
        if is_reducible_shape(&g.contract_edge(e)?) {
            return Ok(ReductionStep::Contract { edge: e });
        }
    }
    let verts = g.vertices();
    for size in 4..g.order() {
        for idx in (0..g.order()).combinations(size) {
            let h: Vec<VertexId> = idx.iter().map(|&i| verts[i]).collect();
            let sub = g.induced_subgraph(&h)?;
            if sub.freedom().value() != 0 || !sub.is_independent() {
                continue;
            }
            let att = g.attachment_vertices(&h)?;
            if att.len() != 3 {
                continue;
            }
            let attachments = [att[0], att[1], att[2]];
            let reduced = substitute_triangle(g, &h, attachments)?;
            if reduced.order() < g.order() && is_reducible_shape(&reduced) {
                return Ok(ReductionStep::Substitute { subgraph: h, attachments });
            }
        }
    }
    Err(ReductionError::NoReduction { order: g.order() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TerminalKind {
    Doublet,
    Triangle,
    Other,
}

/// The 6-vertex prism: two disjoint triangles joined by a perfect matching.
pub fn is_doublet(g: &Graph) -> bool {
    // the only cubic graphs on six vertices are the prism and K33, and only the prism has a 3-cycle
    g.order() == 6
        && g.vertices().iter().all(|&v| g.degree(v).is_ok_and(|d| d == 3))
        && g.edges().iter().any(|&e| !g.triangles_through(e).expect("edge").is_empty())
}

fn terminal_kind(g: &Graph) -> TerminalKind {
    if is_doublet(g) {
        TerminalKind::Doublet
    } else if g.order() == 3 && g.size() == 3 {
        TerminalKind::Triangle
    } else {
        TerminalKind::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub terminal: Graph,
    pub terminal_kind: TerminalKind,
}

impl ReductionTrace {
    /// Re-applies the steps to `start`; the result must equal `terminal`.
    pub fn replay(&self, start: &Graph) -> Result<Graph, ReductionError> {
        self.steps.iter().try_fold(start.clone(), |g, s| apply_step(&g, s))
    }

    pub fn steps_json(&self) -> String {
        serde_json::to_string(&self.steps).expect("serializable")
    }
}

/// Applies reduction steps until at most six vertices remain.
pub fn reduce_to_minimal(g: &Graph) -> Result<ReductionTrace, ReductionError> {
    require_reducible_shape(g)?;
    let mut cur = g.clone();
    let mut steps = Vec::new();
    while cur.order() > 6 {
        let step = find_reduction(&cur)?;
        cur = apply_step(&cur, &step)?;
        steps.push(step);
    }
    let terminal_kind = terminal_kind(&cur);
    Ok(ReductionTrace { steps, terminal: cur, terminal_kind })
}

/// Which pieces of a two-vertex split receive the virtual edge between the
/// separating pair, when that edge is not already in the graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VirtualEdgePolicy {
    /// Add it to the flexible pieces when exactly one piece is rigid and the
    /// rest have one degree of freedom; otherwise fall back to `AllButLast`.
    #[default]
    FreedomGuided,
    /// Add it to every piece except the one whose vertex list sorts last.
    AllButLast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafKind {
    Triangle,
    /// A single edge; only arises when the input itself is one.
    Edge,
    /// 3-connected and maximally independent with more than three vertices.
    Core,
    /// Not maximally independent, so the decomposition cannot continue.
    Irreducible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum QsNode {
    Split {
        pair: [VertexId; 2],
        /// Whether the pair edge was present in the graph being split.
        pair_edge_present: bool,
        children: Vec<QsNode>,
    },
    Leaf { kind: LeafKind, graph: Graph },
}

impl QsNode {
    pub fn leaves(&self) -> Vec<(LeafKind, &Graph)> {
        match self {
            QsNode::Leaf { kind, graph } => vec![(*kind, graph)],
            QsNode::Split { children, .. } => children.iter().flat_map(QsNode::leaves).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QsDecomposition {
    pub policy: VirtualEdgePolicy,
    pub root: QsNode,
}

impl QsDecomposition {
    /// Every leaf is a triangle (or the input was a single edge).
    pub fn is_qs(&self) -> bool {
        self.root
            .leaves()
            .iter()
            .all(|(k, _)| matches!(k, LeafKind::Triangle | LeafKind::Edge))
    }

    pub fn cores(&self) -> Vec<&Graph> {
        self.root
            .leaves()
            .into_iter()
            .filter(|(k, _)| *k == LeafKind::Core)
            .map(|(_, g)| g)
            .collect()
    }

    pub fn has_irreducible(&self) -> bool {
        self.root.leaves().iter().any(|(k, _)| *k == LeafKind::Irreducible)
    }
}

pub fn qs_decompose(g: &Graph) -> QsDecomposition {
    qs_decompose_with(g, VirtualEdgePolicy::default())
}

pub fn qs_decompose_with(g: &Graph, policy: VirtualEdgePolicy) -> QsDecomposition {
    QsDecomposition { policy, root: decompose(g, policy) }
}

fn leaf(kind: LeafKind, g: &Graph) -> QsNode {
    QsNode::Leaf { kind, graph: g.clone() }
}

fn decompose(g: &Graph, policy: VirtualEdgePolicy) -> QsNode {
    if !g.is_maximally_independent() {
        return leaf(LeafKind::Irreducible, g);
    }
    match g.order() {
        2 => return leaf(LeafKind::Edge, g),
        3 => return leaf(LeafKind::Triangle, g),
        _ => {}
    }
    let Some(sep) = find_separation_pairs(g).into_iter().next() else {
        return leaf(LeafKind::Core, g);
    };
    let (a, b) = (sep.vertices[0], sep.vertices[1]);
    let ab = Edge::new(a, b).expect("distinct");
    let present = g.has_edge(ab);
    let pieces: Vec<Graph> = sep
        .components
        .iter()
        .map(|comp| {
            let mut vs = comp.clone();
            vs.extend([a, b]);
            g.induced_subgraph(&vs)
                .and_then(|h| h.without_edges(&[ab]))
                .expect("component vertices exist")
        })
        .collect();
    let gets_edge: Vec<bool> = if present {
        vec![true; pieces.len()]
    } else {
        let free: Vec<i64> = pieces.iter().map(|p| p.freedom().value()).collect();
        let rigid = free.iter().filter(|&&f| f == 0).count();
        let guided = policy == VirtualEdgePolicy::FreedomGuided
            && rigid == 1
            && free.iter().all(|&f| f == 0 || f == 1);
        if guided {
            free.iter().map(|&f| f == 1).collect()
        } else {
            let last = (0..pieces.len())
                .max_by(|&i, &j| pieces[i].vertices().cmp(pieces[j].vertices()))
                .expect("at least two pieces");
            (0..pieces.len()).map(|i| i != last).collect()
        }
    };
    let children = pieces
        .iter()
        .zip(gets_edge)
        .map(|(p, add)| {
            let p = if add { p.with_edges(&[ab]).expect("endpoints present") } else { p.clone() };
            decompose(&p, policy)
        })
        .collect();
    QsNode::Split { pair: [a, b], pair_edge_present: present, children }
}
