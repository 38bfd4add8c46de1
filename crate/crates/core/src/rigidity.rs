//! Distance-constraint systems and their Jacobian.
//!
//! The base edge's first endpoint is pinned at `(0,0)` and its second at
//! `(1,0)`; every other vertex `v` contributes variables `x{v}` and `y{v}`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{rational_determinant, MultiPoly, Vars};
use crate::error::RigidityError;
use crate::graph::{Edge, Graph, VertexId};

/// A graph with a base edge and an exact squared length for every edge.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionedGraph {
    graph: Graph,
    base_edge: Edge,
    /// Ordered pair as given; the first endpoint is pinned at the origin.
    base_order: (VertexId, VertexId),
    dims: BTreeMap<Edge, BigRational>,
}

#[derive(Deserialize)]
struct RawDimensioned {
    vertices: Vec<VertexId>,
    edges: Vec<[VertexId; 2]>,
    base_edge: [VertexId; 2],
    #[serde(default)]
    dims: BTreeMap<String, Value>,
}

fn parse_rational(key: &str, v: &Value) -> Result<BigRational, RigidityError> {
    let bad = |reason: &str| RigidityError::MalformedDimension {
        key: key.to_string(),
        reason: reason.to_string(),
    };
    let text = match v {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(bad("expected an integer or a \"p/q\" string")),
    };
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.as_str(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad("numerator is not an integer"))?;
    let den = BigInt::from_str(den).map_err(|_| bad("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn parse_edge_key(key: &str) -> Option<Edge> {
    let (a, b) = key.split_once('-')?;
    Edge::new(a.trim().parse().ok()?, b.trim().parse().ok()?)
}

impl DimensionedGraph {
    pub fn new(
        graph: Graph,
        base: (VertexId, VertexId),
        dims: BTreeMap<Edge, BigRational>,
    ) -> Result<Self, RigidityError> {
        let base_edge = Edge::new(base.0, base.1).ok_or(RigidityError::MalformedDimension {
            key: format!("{}-{}", base.0, base.1),
            reason: "base edge is a loop".into(),
        })?;
        if !graph.has_edge(base_edge) {
            return Err(RigidityError::BaseEdgeAbsent(base_edge));
        }
        let mut dims = dims;
        for (e, d) in &dims {
            if !graph.has_edge(*e) {
                return Err(RigidityError::MalformedDimension {
                    key: e.to_string(),
                    reason: "not an edge of the graph".into(),
                });
            }
            if d.is_negative() {
                return Err(RigidityError::NegativeDimension { edge: *e, value: d.to_string() });
            }
        }
        match dims.get(&base_edge) {
            Some(d) if !d.is_one() => return Err(RigidityError::BaseDimension(d.to_string())),
            Some(_) => {}
            None => {
                dims.insert(base_edge, BigRational::one());
            }
        }
        if let Some(e) = graph.edges().iter().find(|e| !dims.contains_key(e)) {
            return Err(RigidityError::MissingDimension(*e));
        }
        Ok(DimensionedGraph { graph, base_edge, base_order: base, dims })
    }

    /// Every edge gets squared length 1; handy when only the Jacobian matters.
    pub fn unit(graph: Graph, base: Edge) -> Result<Self, RigidityError> {
        let dims = graph.edges().iter().map(|&e| (e, BigRational::one())).collect();
        DimensionedGraph::new(graph, base.endpoints(), dims)
    }

    pub fn from_json(text: &str) -> Result<Self, RigidityError> {
        DimensionedGraph::from_json_with(text, false)
    }

    /// Parses the JSON form; with `unsquared`, the given values are lengths and get squared.
    pub fn from_json_with(text: &str, unsquared: bool) -> Result<Self, RigidityError> {
        let raw: RawDimensioned = serde_json::from_str(text)?;
        let edges: Vec<(VertexId, VertexId)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        let graph = Graph::from_pairs(raw.vertices, edges)?;
        let mut dims = BTreeMap::new();
        for (key, v) in &raw.dims {
            let e = parse_edge_key(key).ok_or_else(|| RigidityError::MalformedDimension {
                key: key.clone(),
                reason: "expected \"u-v\"".into(),
            })?;
            let mut d = parse_rational(key, v)?;
            if unsquared {
                if d.is_negative() {
                    return Err(RigidityError::NegativeDimension { edge: e, value: d.to_string() });
                }
                d = &d * &d;
            }
            dims.insert(e, d);
        }
        DimensionedGraph::new(graph, (raw.base_edge[0], raw.base_edge[1]), dims)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            vertices: &'a [VertexId],
            edges: &'a [Edge],
            base_edge: [VertexId; 2],
            dims: BTreeMap<String, String>,
        }
        serde_json::to_string(&Out {
            vertices: self.graph.vertices(),
            edges: self.graph.edges(),
            base_edge: [self.base_order.0, self.base_order.1],
            dims: self
                .dims
                .iter()
                .map(|(e, d)| (format!("{}-{}", e.u(), e.v()), d.to_string()))
                .collect(),
        })
        .expect("serializable")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base_edge(&self) -> Edge {
        self.base_edge
    }

    /// Base endpoints in pinning order: origin first.
    pub fn base_vertices(&self) -> (VertexId, VertexId) {
        self.base_order
    }

    pub fn dim(&self, e: Edge) -> Option<&BigRational> {
        self.dims.get(&e)
    }

    pub fn dims(&self) -> &BTreeMap<Edge, BigRational> {
        &self.dims
    }
}

/// Normalized distance equations with denominators cleared.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub vars: Vars,
    /// Free vertices in variable order: vertex `free[k]` owns variables `2k`, `2k+1`.
    pub free: Vec<VertexId>,
    pub edges: Vec<Edge>,
    pub polynomials: Vec<MultiPoly>,
}

impl ConstraintSystem {
    pub fn is_square(&self) -> bool {
        self.polynomials.len() == self.vars.len()
    }

    pub fn polynomial_for(&self, e: Edge) -> Option<&MultiPoly> {
        self.edges.iter().position(|&x| x == e).map(|k| &self.polynomials[k])
    }
}

pub fn build_constraints(dg: &DimensionedGraph) -> ConstraintSystem {
    let (origin, unit) = dg.base_vertices();
    let free: Vec<VertexId> = dg
        .graph
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != origin && v != unit)
        .collect();
    let names: Vec<String> = free
        .iter()
        .flat_map(|v| [format!("x{v}"), format!("y{v}")])
        .collect();
    let vars = Vars::new(&names);
    let coords = |v: VertexId| -> (MultiPoly, MultiPoly) {
        if v == origin {
            (MultiPoly::zero(&vars), MultiPoly::zero(&vars))
        } else if v == unit {
            (MultiPoly::one(&vars), MultiPoly::zero(&vars))
        } else {
            let k = free.iter().position(|&w| w == v).expect("free vertex");
            (MultiPoly::var_at(&vars, 2 * k), MultiPoly::var_at(&vars, 2 * k + 1))
        }
    };
    let mut edges = Vec::new();
    let mut polynomials = Vec::new();
    for &e in dg.graph.edges() {
        if e == dg.base_edge {
            continue;
        }
        let (xu, yu) = coords(e.u());
        let (xv, yv) = coords(e.v());
        let dx = &xu - &xv;
        let dy = &yu - &yv;
        let d = &dg.dims[&e];
        let lhs = (&(&dx * &dx) + &(&dy * &dy)).scale(d.denom());
        polynomials.push(&lhs - &MultiPoly::constant(&vars, d.numer().clone()));
        edges.push(e);
    }
    ConstraintSystem { vars, free, edges, polynomials }
}

/// Matrix of partial derivatives, one row per equation.
pub fn rigidity_jacobian(cs: &ConstraintSystem) -> Result<Vec<Vec<MultiPoly>>, RigidityError> {
    if !cs.is_square() {
        return Err(RigidityError::NotSquare { polys: cs.polynomials.len(), vars: cs.vars.len() });
    }
    Ok(cs
        .polynomials
        .iter()
        .map(|f| (0..cs.vars.len()).map(|i| f.derivative(i)).collect())
        .collect())
}

pub const JACOBIAN_TRIALS: usize = 5;
const JACOBIAN_SEED: u64 = 0x6a61_636f_6269_616e;

/// Outcome of evaluating the Jacobian determinant at random rational points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobianEvidence {
    pub trials: usize,
    /// First trial (0-based) with a nonzero determinant, which proves `det J` is not identically zero.
    pub nonzero_at: Option<usize>,
    pub determinant: Option<String>,
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-1_000_000..=1_000_000);
    let den: i64 = rng.gen_range(1..=1_000_000);
    BigRational::new(num.into(), den.into())
}

pub fn jacobian_evidence(
    cs: &ConstraintSystem,
    trials: usize,
    seed: u64,
) -> Result<JacobianEvidence, RigidityError> {
    let jac = rigidity_jacobian(cs)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let point: Vec<BigRational> = (0..cs.vars.len()).map(|_| random_rational(&mut rng)).collect();
        let m: Vec<Vec<BigRational>> = jac
            .iter()
            .map(|row| row.iter().map(|p| p.eval_rational(&point)).collect())
            .collect();
        let det = rational_determinant(&m).expect("jacobian is square");
        if !det.is_zero() {
            return Ok(JacobianEvidence { trials: t + 1, nonzero_at: Some(t), determinant: Some(det.to_string()) });
        }
    }
    Ok(JacobianEvidence { trials, nonzero_at: None, determinant: None })
}

/// True iff some exact evaluation of `det J` within the trial budget is nonzero.
/// A `false` answer means "likely singular", not a proof.
pub fn jacobian_generically_nonsingular(cs: &ConstraintSystem) -> bool {
    matches!(
        jacobian_evidence(cs, JACOBIAN_TRIALS, JACOBIAN_SEED),
        Ok(JacobianEvidence { nonzero_at: Some(_), .. })
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> DimensionedGraph {
        DimensionedGraph::from_json(
            r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[0,2]],"base_edge":[0,1],
                "dims":{"0-2":"4","1-2":"9/4"}}"#,
        )
        .unwrap()
    }

    #[test]
    fn triangle_system() {
        let cs = build_constraints(&triangle());
        assert_eq!(cs.vars.names(), ["x2", "y2"]);
        assert_eq!(cs.polynomials.len(), 2);
        assert_eq!(cs.polynomials[0].to_string(), "x2^2 + y2^2 - 4");
        assert_eq!(cs.polynomials[1].to_string(), "4*x2^2 + 4*y2^2 - 8*x2 - 5");
        let jac = rigidity_jacobian(&cs).unwrap();
        assert_eq!(jac[0][0].to_string(), "2*x2");
        assert_eq!(jac[1][1].to_string(), "8*y2");
        assert!(jacobian_generically_nonsingular(&cs));
    }

    #[test]
    fn single_edge_is_empty() {
        let dg = DimensionedGraph::from_json(
            r#"{"vertices":[0,1],"edges":[[0,1]],"base_edge":[0,1],"dims":{}}"#,
        )
        .unwrap();
        let cs = build_constraints(&dg);
        assert!(cs.polynomials.is_empty());
        assert!(cs.vars.is_empty());
        assert!(jacobian_generically_nonsingular(&cs));
    }

    #[test]
    fn validation() {
        let miss = r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[0,2]],"base_edge":[0,1],"dims":{"0-2":1}}"#;
        assert!(matches!(DimensionedGraph::from_json(miss), Err(RigidityError::MissingDimension(_))));
        let base = r#"{"vertices":[0,1],"edges":[[0,1]],"base_edge":[0,1],"dims":{"0-1":"2"}}"#;
        assert!(matches!(DimensionedGraph::from_json(base), Err(RigidityError::BaseDimension(_))));
        let absent = r#"{"vertices":[0,1,2],"edges":[[0,1]],"base_edge":[1,2],"dims":{}}"#;
        assert!(matches!(DimensionedGraph::from_json(absent), Err(RigidityError::BaseEdgeAbsent(_))));
        let neg = r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2]],"base_edge":[0,1],"dims":{"1-2":"-1"}}"#;
        assert!(matches!(DimensionedGraph::from_json(neg), Err(RigidityError::NegativeDimension { .. })));
    }

    #[test]
    fn unsquared_input_is_squared() {
        let text = r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[0,2]],"base_edge":[0,1],"dims":{"0-2":"3/2","1-2":2}}"#;
        let dg = DimensionedGraph::from_json_with(text, true).unwrap();
        let e = Edge::new(0, 2).unwrap();
        assert_eq!(dg.dim(e).unwrap(), &BigRational::new(9.into(), 4.into()));
    }

    #[test]
    fn repeated_equation_is_singular() {
        let vars = Vars::new(&["x", "y"]);
        let x = MultiPoly::var(&vars, "x").unwrap();
        let y = MultiPoly::var(&vars, "y").unwrap();
        let f = &(&x * &x) + &(&y * &y);
        let cs = ConstraintSystem {
            vars,
            free: vec![2],
            edges: vec![Edge::new(0, 2).unwrap(), Edge::new(1, 2).unwrap()],
            polynomials: vec![f.clone(), f],
        };
        assert!(!jacobian_generically_nonsingular(&cs));
    }
}
