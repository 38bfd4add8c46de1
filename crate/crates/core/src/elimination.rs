//! Elimination for the doublet: y-coordinates are removed with the squared
//! form of each distance equation, then three resultants reduce the system
//! to a univariate eliminant whose factors are Galois-certified.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::Value;

use crate::algebra::format::parse_shorthand;
use crate::algebra::{
    factor_over_rationals, galois_certify, resultant, GaloisCertificate, GaloisVerdict, MultiPoly,
    UniPoly, Vars, DEFAULT_PRIME_BUDGET,
};
use crate::error::EliminationError;
use crate::graph::{Edge, Graph, VertexId};
use crate::reduction::is_doublet;
use crate::rigidity::DimensionedGraph;

/// Unsquared integer lengths of the eight non-base edges of the reference
/// doublet, in this edge order.
pub const DIM_EDGES: [(VertexId, VertexId); 8] =
    [(2, 3), (3, 4), (4, 5), (5, 6), (3, 6), (2, 6), (1, 5), (1, 4)];

/// Lengths for which the eliminant splits into factors of degrees 6, 6, 8, 8.
pub const REFERENCE_DIMS: [u64; 8] = [13, 15, 8, 16, 10, 13, 5, 5];

const GOLDEN_FACTORS: &str = include_str!("../fixtures/appendix-factors.txt");
const REFERENCE_GRAPH: &str = include_str!("../fixtures/doublet.json");

/// How the free vertices of a doublet are arranged around the pinned base edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubletLabeling {
    pub origin: VertexId,
    pub unit: VertexId,
    /// The free vertices around their 4-cycle, starting at the smallest and
    /// stepping to its smaller neighbor.
    pub cycle: [VertexId; 4],
    /// x-coordinate of the pinned neighbor of each cycle vertex (0 or 1).
    pub anchor_x: [u8; 4],
    pub anchor_edges: [Edge; 4],
    /// `(c0,c1), (c1,c2), (c2,c3), (c3,c0)`.
    pub cycle_edges: [Edge; 4],
}

fn wrong(msg: impl Into<String>) -> EliminationError {
    EliminationError::WrongShape(msg.into())
}

pub fn doublet_labeling(dg: &DimensionedGraph) -> Result<DoubletLabeling, EliminationError> {
    let g = dg.graph();
    if !is_doublet(g) {
        return Err(wrong("graph is not the 6-vertex prism"));
    }
    let (origin, unit) = dg.base_vertices();
    let free: Vec<VertexId> =
        g.vertices().iter().copied().filter(|&v| v != origin && v != unit).collect();
    let rest = g.induced_subgraph(&free).expect("vertices of g");
    if rest.size() != 4 || free.iter().any(|&v| rest.degree(v).ok() != Some(2)) {
        return Err(wrong("base edge must join the two triangles"));
    }
    let mut cycle = [free[0]; 4];
    let mut prev = None;
    for k in 1..4 {
        let cur = cycle[k - 1];
        let next = rest
            .neighbors(cur)
            .expect("cycle vertex")
            .into_iter()
            .filter(|&w| Some(w) != prev)
            .min()
            .expect("degree 2");
        prev = Some(cur);
        cycle[k] = next;
    }
    let mut anchor_x = [0u8; 4];
    let mut anchor_edges = [Edge::new(origin, unit).expect("base"); 4];
    for (k, &w) in cycle.iter().enumerate() {
        let (to_origin, to_unit) = (g.adjacent(w, origin), g.adjacent(w, unit));
        if to_origin == to_unit {
            return Err(wrong("each free vertex must touch exactly one base vertex"));
        }
        anchor_x[k] = u8::from(to_unit);
        anchor_edges[k] = Edge::new(w, if to_unit { unit } else { origin }).expect("distinct");
    }
    let cycle_edges = [0, 1, 2, 3].map(|k| Edge::new(cycle[k], cycle[(k + 1) % 4]).expect("distinct"));
    Ok(DoubletLabeling { origin, unit, cycle, anchor_x, anchor_edges, cycle_edges })
}

/// Four polynomials in the free x-coordinates, one per cycle edge.
#[derive(Clone, Debug)]
pub struct DoubletSystem {
    pub labeling: DoubletLabeling,
    pub vars: Vars,
    /// `g[k]` comes from cycle edge `k`.
    pub quartics: [MultiPoly; 4],
    /// Common denominator the squared lengths were scaled by.
    pub scale: BigInt,
}

fn quartic(
    vars: &Vars,
    (i, j): (usize, usize),
    (ci, cj): (u8, u8),
    d_edge: &MultiPoly,
    (d_i, d_j): (&MultiPoly, &MultiPoly),
    scale: &BigInt,
) -> MultiPoly {
    let xi = MultiPoly::var_at(vars, i);
    let xj = MultiPoly::var_at(vars, j);
    let shift = |x: &MultiPoly, c: u8| x - &MultiPoly::constant(vars, c);
    let sq = |p: &MultiPoly| (p * p).scale(scale);
    // scaled y_i^2, from the distance to the pinned neighbor
    let yi = d_i - &sq(&shift(&xi, ci));
    let yj = d_j - &sq(&shift(&xj, cj));
    let s = &(&(d_edge - &sq(&(&xi - &xj))) - &yi) - &yj;
    &(&s * &s) - &(&yi * &yj).scale(&BigInt::from(4))
}

fn build_system(
    labeling: DoubletLabeling,
    extra_vars: &[String],
    dim: impl Fn(&Vars, Edge) -> MultiPoly,
    scale: BigInt,
) -> DoubletSystem {
    let mut names: Vec<String> = labeling.cycle.iter().map(|v| format!("x{v}")).collect();
    names.extend(extra_vars.iter().cloned());
    let vars = Vars::new(&names);
    let anchors: Vec<MultiPoly> = labeling.anchor_edges.iter().map(|&e| dim(&vars, e)).collect();
    let quartics = [0, 1, 2, 3].map(|k| {
        let l = (k + 1) % 4;
        quartic(
            &vars,
            (k, l),
            (labeling.anchor_x[k], labeling.anchor_x[l]),
            &dim(&vars, labeling.cycle_edges[k]),
            (&anchors[k], &anchors[l]),
            &scale,
        )
    });
    DoubletSystem { labeling, vars, quartics, scale }
}

/// Eliminates the y-coordinates with the given squared lengths.
pub fn square_eliminate(dg: &DimensionedGraph) -> Result<DoubletSystem, EliminationError> {
    let labeling = doublet_labeling(dg)?;
    let scale = dg
        .dims()
        .values()
        .fold(BigInt::one(), |acc, d| acc.lcm(d.denom()));
    let dims: BTreeMap<Edge, BigInt> = dg
        .dims()
        .iter()
        .map(|(&e, d)| (e, (d * BigRational::from_integer(scale.clone())).to_integer()))
        .collect();
    Ok(build_system(labeling, &[], |vars, e| MultiPoly::constant(vars, dims[&e].clone()), scale))
}

/// The same system with every squared length left as a variable `D{u}_{v}`.
pub fn square_eliminate_symbolic(dg: &DimensionedGraph) -> Result<DoubletSystem, EliminationError> {
    let labeling = doublet_labeling(dg)?;
    let mut edges: Vec<Edge> = labeling.anchor_edges.to_vec();
    edges.extend(labeling.cycle_edges);
    edges.sort();
    let names: Vec<String> = edges.iter().map(|e| format!("D{}_{}", e.u(), e.v())).collect();
    Ok(build_system(
        labeling,
        &names,
        |vars, e| MultiPoly::var(vars, &format!("D{}_{}", e.u(), e.v())).expect("registered"),
        BigInt::one(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub polynomial: String,
    pub variable: String,
    pub generic: usize,
    pub specialized: usize,
}

/// Output of the three resultants.
#[derive(Clone, Debug)]
pub struct ChainResult {
    pub degree_checks: Vec<DegreeCheck>,
    /// Univariate in the first cycle vertex's x-coordinate, before content removal.
    pub eliminant: UniPoly,
}

struct Chain {
    left: MultiPoly,
    right: MultiPoly,
}

// Indices into the cycle: eliminate c1 from g0,g1 and c3 from g2,g3; c2 goes last.
fn inner_resultants(ds: &DoubletSystem) -> Result<Chain, EliminationError> {
    let q = &ds.quartics;
    let (left, right) = std::thread::scope(|s| {
        let right = s.spawn(|| resultant(&q[2], &q[3], 3));
        let left = resultant(&q[0], &q[1], 1);
        (left, right.join().expect("resultant thread"))
    });
    Ok(Chain { left: left?, right: right? })
}

fn names(ds: &DoubletSystem) -> Vec<String> {
    ds.vars.names()[..4].to_vec()
}

/// Runs the chain on a numeric system, checking at each step that the
/// eliminated variable keeps its generic degree.
pub fn resultant_chain(ds: &DoubletSystem, generic: &DoubletSystem) -> Result<ChainResult, EliminationError> {
    let x = names(ds);
    let gq = &generic.quartics;
    let sq = &ds.quartics;
    let mut checks = Vec::new();
    let mut check = |poly: String, var: usize, generic: usize, specialized: usize| {
        let c = DegreeCheck { polynomial: poly, variable: x[var].clone(), generic, specialized };
        if c.generic != c.specialized {
            return Err(EliminationError::DegreeDrop {
                stage: "resultant chain".into(),
                poly: c.polynomial,
                var: c.variable,
                generic,
                specialized,
            });
        }
        checks.push(c);
        Ok(())
    };
    for (k, var) in [(0, 1), (1, 1), (2, 3), (3, 3)] {
        check(format!("g{}", k + 1), var, gq[k].degree_in(var), sq[k].degree_in(var))?;
    }
    let generic_chain = inner_resultants(generic)?;
    let chain = inner_resultants(ds)?;
    let left_name = format!("Res(g1,g2,{})", x[1]);
    let right_name = format!("Res(g3,g4,{})", x[3]);
    check(left_name, 2, generic_chain.left.degree_in(2), chain.left.degree_in(2))?;
    check(right_name, 2, generic_chain.right.degree_in(2), chain.right.degree_in(2))?;
    let eliminant = resultant(&chain.left, &chain.right, 2)?.to_unipoly(0)?;
    Ok(ChainResult { degree_checks: checks, eliminant })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStatus {
    /// Some factor of degree at least 5 exists and every such factor is certified symmetric.
    Complete,
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedFactor {
    pub polynomial: UniPoly,
    pub multiplicity: u32,
    pub degree: usize,
    pub galois: Option<GaloisCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonSolubleCertificate {
    /// Unsquared lengths in `DIM_EDGES` order.
    pub dims_input: [u64; 8],
    /// The same lengths keyed by edge.
    pub dims: BTreeMap<String, u64>,
    pub labeling: DoubletLabeling,
    pub variable: String,
    pub degree_checks: Vec<DegreeCheck>,
    pub eliminant_degree: usize,
    /// Signed integer content removed before factoring.
    pub content: BigInt,
    pub eliminant: UniPoly,
    pub factors: Vec<CertifiedFactor>,
    pub prime_budget: usize,
    pub status: CertificateStatus,
}

fn reference_graph() -> Graph {
    Graph::from_json(REFERENCE_GRAPH).expect("bundled doublet parses")
}

/// The reference doublet with base edge `1-2` and the given unsquared lengths.
pub fn dimensioned_doublet(dims: &[u64; 8]) -> DimensionedGraph {
    let map = DIM_EDGES
        .iter()
        .zip(dims)
        .map(|(&(a, b), &d)| {
            (Edge::new(a, b).expect("distinct"), BigRational::from_integer(BigInt::from(d) * d))
        })
        .collect();
    DimensionedGraph::new(reference_graph(), (1, 2), map).expect("reference doublet is valid")
}

/// Squared-form elimination and the resultant chain for any dimensioned doublet.
pub fn doublet_eliminant(dg: &DimensionedGraph) -> Result<ChainResult, EliminationError> {
    let ds = square_eliminate(dg)?;
    let generic = square_eliminate_symbolic(dg)?;
    resultant_chain(&ds, &generic)
}

pub fn doublet_certificate(dims: &[u64; 8]) -> Result<NonSolubleCertificate, EliminationError> {
    doublet_certificate_with(dims, DEFAULT_PRIME_BUDGET)
}

pub fn doublet_certificate_with(
    dims: &[u64; 8],
    prime_budget: usize,
) -> Result<NonSolubleCertificate, EliminationError> {
    let dg = dimensioned_doublet(dims);
    let ds = square_eliminate(&dg)?;
    let generic = square_eliminate_symbolic(&dg)?;
    let chain = resultant_chain(&ds, &generic)?;
    let h = &chain.eliminant;
    if h.is_zero() {
        return Err(wrong("eliminant vanishes identically"));
    }
    let mut content = h.content();
    if h.leading().is_negative() {
        content = -content;
    }
    let eliminant = h.div_scalar(&content);
    let fac = factor_over_rationals(&eliminant);
    let mut factors = Vec::new();
    for (f, m) in fac.factors {
        let galois = if f.deg() >= 5 { Some(galois_certify(&f, prime_budget)?) } else { None };
        factors.push(CertifiedFactor { degree: f.deg(), polynomial: f, multiplicity: m, galois });
    }
    let big: Vec<&CertifiedFactor> = factors.iter().filter(|f| f.degree >= 5).collect();
    let status = if !big.is_empty()
        && big.iter().all(|f| {
            f.galois.as_ref().is_some_and(|g| g.verdict == GaloisVerdict::FullSymmetric)
        }) {
        CertificateStatus::Complete
    } else {
        CertificateStatus::Partial
    };
    Ok(NonSolubleCertificate {
        dims_input: *dims,
        dims: DIM_EDGES
            .iter()
            .zip(dims)
            .map(|(&(a, b), &d)| (format!("{a}-{b}"), d))
            .collect(),
        variable: ds.vars.names()[0].clone(),
        labeling: ds.labeling.clone(),
        degree_checks: chain.degree_checks,
        eliminant_degree: eliminant.deg(),
        content,
        eliminant,
        factors,
        prime_budget,
        status,
    })
}

static REFERENCE: OnceLock<NonSolubleCertificate> = OnceLock::new();

/// Certificate for `REFERENCE_DIMS`, computed once per process.
pub fn reference_certificate() -> &'static NonSolubleCertificate {
    REFERENCE.get_or_init(|| {
        doublet_certificate(&REFERENCE_DIMS).expect("reference dimensions do not degenerate")
    })
}

/// Recomputes a stored certificate from its dimensions and rejects it on any difference.
pub fn verify_certificate(text: &str) -> Result<NonSolubleCertificate, EliminationError> {
    let stored: Value = serde_json::from_str(text)?;
    let dims: Vec<u64> = stored
        .get("dims_input")
        .and_then(Value::as_array)
        .and_then(|a| a.iter().map(Value::as_u64).collect::<Option<Vec<_>>>())
        .ok_or_else(|| EliminationError::CertificateMismatch("missing dims_input".into()))?;
    let dims: [u64; 8] = dims
        .try_into()
        .map_err(|v: Vec<u64>| EliminationError::DimensionCount(v.len()))?;
    let budget = stored
        .get("prime_budget")
        .and_then(Value::as_u64)
        .unwrap_or(DEFAULT_PRIME_BUDGET as u64) as usize;
    let fresh = doublet_certificate_with(&dims, budget)?;
    let fresh_value = serde_json::to_value(&fresh)?;
    if let (Value::Object(a), Value::Object(b)) = (&stored, &fresh_value) {
        for (k, v) in b {
            if a.get(k) != Some(v) {
                return Err(EliminationError::CertificateMismatch(format!("field {k:?} differs")));
            }
        }
        if let Some(k) = a.keys().find(|k| !b.contains_key(*k)) {
            return Err(EliminationError::CertificateMismatch(format!("unexpected field {k:?}")));
        }
        Ok(fresh)
    } else {
        Err(EliminationError::CertificateMismatch("not a JSON object".into()))
    }
}

/// The published factors for `REFERENCE_DIMS`, in canonical order.
pub fn golden_factors() -> Vec<UniPoly> {
    let mut fs = parse_shorthand(GOLDEN_FACTORS).expect("bundled golden file parses");
    fs.sort_by(UniPoly::canonical_cmp);
    fs
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenComparison {
    pub matches: bool,
    pub differences: Vec<String>,
}

pub fn compare_with_golden(cert: &NonSolubleCertificate) -> GoldenComparison {
    let golden = golden_factors();
    let mut ours: Vec<UniPoly> = cert.factors.iter().map(|f| f.polynomial.clone()).collect();
    ours.sort_by(UniPoly::canonical_cmp);
    let mut differences = Vec::new();
    if ours.len() != golden.len() {
        differences.push(format!("{} factors, expected {}", ours.len(), golden.len()));
    }
    for (k, (a, b)) in ours.iter().zip(&golden).enumerate() {
        if a != b {
            differences.push(format!("factor {k}: got [{}], expected [{}]", a.to_shorthand(), b.to_shorthand()));
        }
    }
    if cert.factors.iter().any(|f| f.multiplicity != 1) {
        differences.push("repeated factor".into());
    }
    GoldenComparison { matches: differences.is_empty(), differences }
}
