use std::collections::BTreeMap;

use cadgraph_core::algebra::UniPoly;
use cadgraph_core::corpus::fixture;
use cadgraph_core::elimination::{
    doublet_certificate, doublet_eliminant, doublet_labeling, reference_certificate, square_eliminate,
    square_eliminate_symbolic, verify_certificate, CertificateStatus, REFERENCE_DIMS,
};
use cadgraph_core::rigidity::DimensionedGraph;
use cadgraph_core::{Edge, EliminationError, VertexId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Point = (BigRational, BigRational);

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A doublet realized at the given coordinates, with the squared lengths it induces.
fn realized(coords: &BTreeMap<VertexId, Point>) -> DimensionedGraph {
    let g = fixture("doublet").unwrap();
    let dims = g
        .edges()
        .iter()
        .map(|&e| {
            let (p, q) = (&coords[&e.u()], &coords[&e.v()]);
            let dx = &p.0 - &q.0;
            let dy = &p.1 - &q.1;
            (e, &dx * &dx + &dy * &dy)
        })
        .collect();
    DimensionedGraph::new(g, (1, 2), dims).unwrap()
}

#[test]
fn eliminant_vanishes_at_constructed_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    while checked < 6 {
        let mut coords = BTreeMap::new();
        coords.insert(1, (rat(0, 1), rat(0, 1)));
        coords.insert(2, (rat(1, 1), rat(0, 1)));
        let den = if checked % 2 == 0 { 1 } else { rng.gen_range(2..=5) };
        for v in 3..=6 {
            coords.insert(v, (rat(rng.gen_range(-7..=7), den), rat(rng.gen_range(-7..=7), den)));
        }
        let dg = realized(&coords);
        // the base edge carries length 1 by construction, so skip degenerate draws only
        let Ok(chain) = doublet_eliminant(&dg) else { continue };
        if chain.eliminant.is_zero() {
            continue;
        }
        let ds = square_eliminate(&dg).unwrap();
        let xs: Vec<BigRational> = ds.labeling.cycle.iter().map(|v| coords[v].0.clone()).collect();
        for q in &ds.quartics {
            assert!(q.eval_rational(&xs).is_zero());
        }
        assert_eq!(ds.labeling.cycle[0], 3);
        assert!(chain.eliminant.eval_rational(&coords[&3].0).is_zero());
        checked += 1;
    }
}

#[test]
fn symbolic_quartics_have_expected_shape() {
    let dg = DimensionedGraph::from_json(include_str!("../fixtures/doublet-dims.json")).unwrap();
    let sym = square_eliminate_symbolic(&dg).unwrap();
    assert_eq!(sym.vars.len(), 12);
    for (k, q) in sym.quartics.iter().enumerate() {
        let (i, j) = (k, (k + 1) % 4);
        assert_eq!(q.degree_in(i), 2);
        assert_eq!(q.degree_in(j), 2);
        for other in (0..4).filter(|&t| t != i && t != j) {
            assert_eq!(q.degree_in(other), 0);
        }
        let x_degree = q.terms().map(|(m, _)| m.exponents()[..4].iter().sum::<u32>()).max().unwrap();
        assert!(x_degree <= 4);
    }
    let numeric = square_eliminate(&dg).unwrap();
    assert_eq!(numeric.vars.len(), 4);
    assert_eq!(doublet_labeling(&dg).unwrap().cycle, [3, 4, 5, 6]);
}

#[test]
fn degenerate_dimensions() {
    let err = doublet_certificate(&[13, 15, 8, 16, 10, 13, 0, 0]).unwrap_err();
    assert!(matches!(err, EliminationError::DegreeDrop { .. }), "{err}");
    let cert = doublet_certificate(&[5; 8]).unwrap();
    assert_eq!(cert.status, CertificateStatus::Partial);
    assert!(cert.factors.iter().any(|f| f.multiplicity > 1));
    assert!(matches!(doublet_certificate(&[1; 8]), Err(EliminationError::WrongShape(_))));
}

#[test]
fn wrong_shapes_are_rejected() {
    let k33 = fixture("k33").unwrap();
    let dg = DimensionedGraph::unit(k33, Edge::new(0, 3).unwrap()).unwrap();
    assert!(matches!(square_eliminate(&dg), Err(EliminationError::WrongShape(_))));
    let doublet = fixture("doublet").unwrap();
    let dg = DimensionedGraph::unit(doublet, Edge::new(1, 4).unwrap()).unwrap();
    assert!(matches!(doublet_labeling(&dg), Err(EliminationError::WrongShape(_))));
}

#[test]
fn certificates_round_trip_and_reject_tampering() {
    let cert = reference_certificate();
    assert_eq!(cert.dims_input, REFERENCE_DIMS);
    assert_eq!(cert.content, BigInt::from(1u64 << 56));
    let text = serde_json::to_string(cert).unwrap();
    assert_eq!(verify_certificate(&text).unwrap(), *cert);

    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    value["status"] = "partial".into();
    assert!(matches!(
        verify_certificate(&value.to_string()),
        Err(EliminationError::CertificateMismatch(_))
    ));
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    value["eliminant"][0] = "1".into();
    assert!(verify_certificate(&value.to_string()).is_err());
    assert!(verify_certificate("{}").is_err());
    let product = cert.factors.iter().fold(UniPoly::one(), |acc, f| &acc * &f.polynomial);
    assert_eq!(product, cert.eliminant);
}
