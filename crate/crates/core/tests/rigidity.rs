use cadgraph_core::corpus::fixture;
use cadgraph_core::rigidity::{
    build_constraints, jacobian_evidence, jacobian_generically_nonsingular, rigidity_jacobian,
    DimensionedGraph, JACOBIAN_TRIALS,
};
use cadgraph_core::{Edge, Graph, RigidityError};
use num_bigint::BigInt;
use num_rational::BigRational;

fn json(dims: &str) -> String {
    format!(
        "{{\"vertices\":[1,2,3],\"edges\":[[1,2],[2,3],[1,3]],\"base_edge\":[1,2],\"dims\":{{{dims}}}}}"
    )
}

#[test]
fn parses_dimensions() {
    let dg = DimensionedGraph::from_json(&json("\"2-3\":\"9/4\",\"1-3\":2")).unwrap();
    let e = Edge::new(2, 3).unwrap();
    assert_eq!(dg.dim(e), Some(&BigRational::new(BigInt::from(9), BigInt::from(4))));
    assert_eq!(dg.dim(Edge::new(1, 2).unwrap()), Some(&BigRational::from_integer(BigInt::from(1))));
    let back = DimensionedGraph::from_json(&dg.to_json()).unwrap();
    assert_eq!(back.dims(), dg.dims());

    let unsquared = DimensionedGraph::from_json_with(&json("\"2-3\":\"3/2\",\"1-3\":2"), true).unwrap();
    assert_eq!(unsquared.dim(e), dg.dim(e));
    assert_eq!(unsquared.dim(Edge::new(1, 3).unwrap()), Some(&BigRational::from_integer(BigInt::from(4))));
}

#[test]
fn rejects_bad_dimensions() {
    assert!(matches!(
        DimensionedGraph::from_json(&json("\"2-3\":1")),
        Err(RigidityError::MissingDimension(_))
    ));
    assert!(matches!(
        DimensionedGraph::from_json(&json("\"2-3\":-1,\"1-3\":1")),
        Err(RigidityError::NegativeDimension { .. })
    ));
    assert!(matches!(
        DimensionedGraph::from_json(&json("\"2-3\":1,\"1-3\":1,\"1-2\":2")),
        Err(RigidityError::BaseDimension(_))
    ));
    assert!(matches!(
        DimensionedGraph::from_json(&json("\"2-3\":\"x\",\"1-3\":1")),
        Err(RigidityError::MalformedDimension { .. })
    ));
    assert!(matches!(
        DimensionedGraph::from_json(&json("\"2:3\":1,\"1-3\":1")),
        Err(RigidityError::MalformedDimension { .. })
    ));
    let text = json("\"2-3\":1,\"1-3\":1").replace("\"base_edge\":[1,2]", "\"base_edge\":[1,4]");
    assert!(DimensionedGraph::from_json(&text).is_err());
}

#[test]
fn constraint_system_of_doublet() {
    let dg = DimensionedGraph::from_json(include_str!("../fixtures/doublet-dims.json")).unwrap();
    let cs = build_constraints(&dg);
    assert!(cs.is_square());
    assert_eq!(cs.free, vec![3, 4, 5, 6]);
    assert_eq!(cs.polynomials.len(), 8);
    let anchored = cs.polynomial_for(Edge::new(1, 4).unwrap()).unwrap();
    assert_eq!(anchored.to_string(), "x4^2 + y4^2 - 25");
    let ev = jacobian_evidence(&cs, JACOBIAN_TRIALS, 1).unwrap();
    assert_eq!(ev.nonzero_at, Some(0));
}

#[test]
fn jacobian_rank_tracks_rigidity() {
    let k33 = fixture("k33").unwrap();
    let dg = DimensionedGraph::unit(k33, Edge::new(0, 3).unwrap()).unwrap();
    assert!(jacobian_generically_nonsingular(&build_constraints(&dg)));

    let square = fixture("square").unwrap();
    let dg = DimensionedGraph::unit(square, Edge::new(0, 1).unwrap()).unwrap();
    assert!(matches!(rigidity_jacobian(&build_constraints(&dg)), Err(RigidityError::NotSquare { .. })));

    // two triangles glued along an edge plus a brace: square but dependent
    let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (3, 4)]).unwrap();
    let dg = DimensionedGraph::unit(g, Edge::new(0, 1).unwrap()).unwrap();
    let cs = build_constraints(&dg);
    assert!(cs.is_square());
    assert!(!jacobian_generically_nonsingular(&cs));
}
