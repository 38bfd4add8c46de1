//! Brute-force oracles shared by the integration suites. None of these call
//! into the algorithms they are used to check.
#![allow(dead_code)]

use cadgraph_core::algebra::{MultiPoly, UniPoly, Vars};
use cadgraph_core::corpus::{connected_graphs, laman_tower, SmallGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn edges_within(g: &SmallGraph, mask: u32) -> u32 {
    (0..g.n)
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| (g.adj[v] as u32 & mask).count_ones())
        .sum::<u32>()
        / 2
}

/// Every vertex subset with `k >= 2` vertices spans at most `2k - 3` edges.
pub fn brute_independent(g: &SmallGraph) -> bool {
    (1u32..1 << g.n).all(|mask| {
        let k = mask.count_ones();
        k < 2 || edges_within(g, mask) <= 2 * k - 3
    })
}

pub fn brute_maximally_independent(g: &SmallGraph) -> bool {
    g.n >= 2 && g.size() == 2 * g.n - 3 && brute_independent(g)
}

/// Characterization of contractibility for an independent graph: the edge
/// lies on exactly one 3-cycle, with apex `z`, and no vertex set containing
/// both endpoints but not `z`, of size at least 3, spans `2k - 3` edges.
pub fn characterized_contractible(g: &SmallGraph, a: usize, b: usize) -> bool {
    let common = g.adj[a] & g.adj[b];
    if common.count_ones() != 1 {
        return false;
    }
    let z = common.trailing_zeros() as usize;
    let must = (1u32 << a) | (1u32 << b);
    !(0u32..1 << g.n).any(|mask| {
        mask & must == must
            && mask >> z & 1 == 0
            && mask.count_ones() >= 3
            && edges_within(g, mask) == 2 * mask.count_ones() - 3
    })
}

pub fn cofactor_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_determinant(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

/// Rational roots of an integer polynomial by the rational root test.
pub fn has_rational_root(f: &[BigInt]) -> bool {
    let f: Vec<BigInt> = f.to_vec();
    let Some(top) = f.iter().rposition(|c| !c.is_zero()) else {
        return true;
    };
    if f[0].is_zero() {
        return top > 0;
    }
    let eval = |x: &BigRational| {
        f[..=top]
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    for p in divisors(&f[0]) {
        for q in divisors(&f[top]) {
            for s in [1, -1] {
                let x = BigRational::new(&p * s, q.clone());
                if eval(&x).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Whether an irreducible integer polynomial of degree 2, 3 or 4 has the full
/// symmetric group, from the discriminant and the resolvent cubic.
pub fn small_degree_is_symmetric(f: &UniPoly) -> bool {
    let c = |k: usize| f.coeff(k);
    match f.deg() {
        2 => true,
        3 => {
            let (a, b, cc, d) = (c(3), c(2), c(1), c(0));
            let disc = &b * &b * &cc * &cc - 4 * &a * &cc * &cc * &cc - 4 * &b * &b * &b * &d
                - 27 * &a * &a * &d * &d
                + 18 * &a * &b * &cc * &d;
            !is_square(&disc)
        }
        4 => {
            let (a, b, cc, d, e) = (c(4), c(3), c(2), c(1), c(0));
            let disc = 256 * a.pow(3) * e.pow(3) - 192 * a.pow(2) * &b * &d * e.pow(2)
                - 128 * a.pow(2) * cc.pow(2) * e.pow(2)
                + 144 * a.pow(2) * &cc * d.pow(2) * &e
                - 27 * a.pow(2) * d.pow(4)
                + 144 * &a * b.pow(2) * &cc * e.pow(2)
                - 6 * &a * b.pow(2) * d.pow(2) * &e
                - 80 * &a * &b * cc.pow(2) * &d * &e
                + 18 * &a * &b * &cc * d.pow(3)
                + 16 * &a * cc.pow(4) * &e
                - 4 * &a * cc.pow(3) * d.pow(2)
                - 27 * b.pow(4) * e.pow(2)
                + 18 * b.pow(3) * &cc * &d * &e
                - 4 * b.pow(3) * d.pow(3)
                - 4 * b.pow(2) * cc.pow(3) * &e
                + b.pow(2) * cc.pow(2) * d.pow(2);
            // resolvent cubic y^3 - C y^2 + (BD - 4E) y - (B^2 E - 4CE + D^2) of the monic
            // quartic with B = b/a etc., rewritten in t = a y and multiplied by a^3
            let r3 = BigInt::one();
            let r2 = -&cc;
            let r1: BigInt = &b * &d - BigInt::from(4) * &a * &e;
            let r0: BigInt = -(&b * &b * &e - BigInt::from(4) * &a * &cc * &e + &a * &d * &d);
            let resolvent = [r0, r1, r2, r3];
            !has_rational_root(&resolvent) && !is_square(&disc)
        }
        n => panic!("degree {n} outside the oracle's range"),
    }
}

pub fn random_unipoly(rng: &mut ChaCha8Rng, deg: usize, bound: i64) -> UniPoly {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[deg] == 0 {
        c[deg] = rng.gen_range(-bound..=bound);
    }
    UniPoly::from_i64(&c)
}

/// Random polynomial in `vars` whose degree in variable 0 is exactly `deg`,
/// with coefficients of total degree at most `coeff_deg` in the others.
pub fn random_multipoly(
    rng: &mut ChaCha8Rng,
    vars: &Vars,
    deg: u32,
    coeff_deg: u32,
    bound: i64,
) -> MultiPoly {
    let others = vars.len() - 1;
    loop {
        let mut terms = Vec::new();
        for d in 0..=deg {
            for _ in 0..3 {
                let mut exps = vec![d];
                let mut left = coeff_deg;
                for _ in 0..others {
                    let e = rng.gen_range(0..=left);
                    left -= e;
                    exps.push(e);
                }
                let c = rng.gen_range(-bound..=bound);
                terms.push((exps, BigInt::from(c)));
            }
        }
        let p = MultiPoly::from_terms(vars, terms);
        if p.degree_in(0) == deg as usize {
            return p;
        }
    }
}

pub struct Corpus {
    /// Connected graphs on 1..=7 vertices, one per isomorphism class.
    pub connected: Vec<SmallGraph>,
    /// Maximally independent graphs on 2..=9 vertices, one per isomorphism class.
    pub laman: Vec<SmallGraph>,
}

pub fn corpus() -> Corpus {
    Corpus {
        connected: (1..=7).flat_map(connected_graphs).collect(),
        laman: laman_tower(9).into_iter().flatten().collect(),
    }
}
