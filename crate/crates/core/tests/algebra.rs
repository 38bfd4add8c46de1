mod common;

use cadgraph_core::algebra::format::{parse_shorthand, parse_sparse, write_sparse};
use cadgraph_core::algebra::{
    determinant, factor_over_rationals, galois_certify, rational_determinant, resultant_in,
    solubility_verdict, GaloisVerdict, MultiPoly, SolubilityStatus, UniPoly, Vars,
};
use cadgraph_core::AlgebraError;
use common::{cofactor_determinant, random_multipoly, random_unipoly, small_degree_is_symmetric};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly(c: &[i64]) -> UniPoly {
    UniPoly::from_i64(c)
}

#[test]
fn resultant_examples() {
    let f = parse_sparse("vars x a b\n1 1 0 0\n-1 0 1 0\n---\n1 1 0 0\n-1 0 0 1\n").unwrap();
    let r = resultant_in(&f[0], &f[1], "x").unwrap();
    assert_eq!(r.to_string(), "a - b");
    let vars = Vars::new(&["x", "d", "a"]);
    let v = |s| MultiPoly::var(&vars, s).unwrap();
    let r = resultant_in(&(&(&v("x") * &v("x")) - &v("d")), &(&v("x") - &v("a")), "x").unwrap();
    assert_eq!(r, &(&v("a") * &v("a")) - &v("d"));
    assert!(matches!(resultant_in(&v("a"), &v("x"), "x"), Err(AlgebraError::ConstantInVariable(_))));
    assert!(matches!(resultant_in(&MultiPoly::zero(&vars), &v("x"), "x"), Err(AlgebraError::ZeroPolynomial)));
}

#[test]
fn squarefree_and_factor_examples() {
    assert_eq!(poly(&[1, -2, 1]).squarefree_part(), poly(&[-1, 1]));
    assert_eq!(poly(&[1, 0, 1]).squarefree_part(), poly(&[1, 0, 1]));
    let fac = factor_over_rationals(&poly(&[-1, 0, 1]));
    assert_eq!(fac.factors, vec![(poly(&[-1, 1]), 1), (poly(&[1, 1]), 1)]);
    assert!(factor_over_rationals(&poly(&[1, 0, 1])).is_irreducible());
    let h = parse_shorthand(include_str!("../fixtures/h3prime.txt")).unwrap().remove(0);
    assert_eq!(h.squarefree_part(), h.primitive_part());
    let fac = factor_over_rationals(&h);
    assert_eq!(fac.degrees(), vec![6, 6, 8, 8]);
    let leading: Vec<String> = fac.factors.iter().map(|(f, _)| f.leading().to_string()).collect();
    for c in ["731161600000", "753831936", "2747437056"] {
        assert!(leading.iter().any(|l| l == c), "{c} missing from {leading:?}");
    }
    assert_eq!(fac.expand(), h);
}

#[test]
fn galois_examples() {
    assert_eq!(galois_certify(&poly(&[-2, 0, 1]), 200).unwrap().verdict, GaloisVerdict::FullSymmetric);
    // dihedral of order 8: 4-cycles and odd elements occur, but never a 3-cycle
    assert_eq!(galois_certify(&poly(&[-2, 0, 0, 0, 1]), 200).unwrap().verdict, GaloisVerdict::Inconclusive);
    assert!(matches!(galois_certify(&poly(&[-1, 0, 1]), 200), Err(AlgebraError::Reducible)));
    assert!(matches!(galois_certify(&poly(&[1, 1]), 200), Err(AlgebraError::DegreeTooSmall(1))));
}

#[test]
fn solubility_examples() {
    assert_eq!(solubility_verdict(&poly(&[7, -3, 0, 2, 5])).status, SolubilityStatus::Soluble);
    let quintic = poly(&[-1, -1, 0, 0, 0, 1]);
    let product = &quintic * &poly(&[1, 0, 1]);
    assert_eq!(solubility_verdict(&product).status, SolubilityStatus::NonSoluble);
    let h = parse_shorthand(include_str!("../fixtures/h3prime.txt")).unwrap().remove(0);
    assert_eq!(solubility_verdict(&h).status, SolubilityStatus::NonSoluble);
}

#[test]
fn small_degree_groups_match_classification() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut seen = [0usize; 2];
    for _ in 0..300 {
        let d = rng.gen_range(2..=4);
        let f = random_unipoly(&mut rng, d, 6);
        let fac = factor_over_rationals(&f);
        if !fac.is_irreducible() {
            continue;
        }
        let g = &fac.factors[0].0;
        let symmetric = small_degree_is_symmetric(g);
        let verdict = galois_certify(g, 200).unwrap().verdict;
        assert_eq!(verdict == GaloisVerdict::FullSymmetric, symmetric, "{g}");
        seen[symmetric as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn determinant_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let vars = Vars::new(&["t"]);
    for _ in 0..50 {
        let m: Vec<Vec<BigInt>> =
            (0..4).map(|_| (0..4).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect()).collect();
        let expected = cofactor_determinant(&m);
        let poly_m: Vec<Vec<MultiPoly>> =
            m.iter().map(|r| r.iter().map(|c| MultiPoly::constant(&vars, c.clone())).collect()).collect();
        let rat_m: Vec<Vec<BigRational>> =
            m.iter().map(|r| r.iter().map(|c| BigRational::from_integer(c.clone())).collect()).collect();
        assert_eq!(determinant(&poly_m).unwrap(), MultiPoly::constant(&vars, expected.clone()));
        assert_eq!(rational_determinant(&rat_m).unwrap(), BigRational::from_integer(expected));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_round_trip(seed in any::<u64>(), pieces in 1usize..=4, content in 1i64..=12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p = UniPoly::constant(BigInt::from(content));
        for _ in 0..pieces {
            let d = rng.gen_range(1..=4);
            p = &p * &random_unipoly(&mut rng, d, 9);
        }
        let fac = factor_over_rationals(&p);
        prop_assert_eq!(fac.expand(), p);
        for (f, _) in &fac.factors {
            prop_assert!(f.leading() > BigInt::zero());
            prop_assert_eq!(f.content(), BigInt::from(1));
            prop_assert!(factor_over_rationals(f).is_irreducible());
        }
    }

    #[test]
    fn resultant_vanishes_on_common_root(seed in any::<u64>(), alpha in -5i64..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = Vars::new(&["x", "a"]);
        let x = MultiPoly::var_at(&vars, 0);
        let a = MultiPoly::var_at(&vars, 1);
        let shift = &a - &MultiPoly::constant(&vars, alpha);
        let build = |rng: &mut ChaCha8Rng| {
            let (du, dw) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
            let u = random_multipoly(rng, &vars, du, 1, 4);
            let w = random_multipoly(rng, &vars, dw, 1, 4);
            &(&(&x - &a) * &u) + &(&shift * &w)
        };
        let f = build(&mut rng);
        let g = build(&mut rng);
        prop_assume!(f.degree_in(0) > 0 && g.degree_in(0) > 0);
        let r = resultant_in(&f, &g, "x").unwrap();
        prop_assert!(r.specialize(1, &BigInt::from(alpha)).is_zero());
    }

    #[test]
    fn sparse_format_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = Vars::new(&["x", "y", "z"]);
        let ps: Vec<MultiPoly> = (0..3).map(|_| random_multipoly(&mut rng, &vars, 2, 3, 50)).collect();
        let back = parse_sparse(&write_sparse(&ps)).unwrap();
        prop_assert_eq!(back, ps);
    }
}
