//! Factorization over the rationals: square-free decomposition, factoring
//! modulo a prime, Hensel lifting and subset recombination.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::modp::{is_good_prime, primes, ModPoly};
use super::unipoly::UniPoly;

/// `content * prod f_i^{e_i}`, factors primitive with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        let prod: UniPoly = self
            .factors
            .iter()
            .map(|(f, e)| f.pow(*e))
            .product();
        prod.scale(&self.content)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|(f, _)| f.deg()).collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// How many good primes to try before settling on the one with the fewest modular factors.
const PRIME_CANDIDATES: usize = 6;

pub fn factor_over_rationals(p: &UniPoly) -> Factorization {
    if p.is_zero() {
        return Factorization { content: BigInt::zero(), factors: Vec::new() };
    }
    let mut content = p.content();
    if p.leading().is_negative() {
        content = -content;
    }
    let f = p.div_scalar(&content);
    let mut factors = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        let mut part = part;
        // a root at zero would defeat the constant-term filter
        if part.coeff(0).is_zero() {
            factors.push((UniPoly::x(), mult));
            part = part.div_exact(&UniPoly::x()).expect("x divides");
        }
        if part.deg() > 0 {
            factors.extend(factor_squarefree(&part).into_iter().map(|g| (g, mult)));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Factorization { content, factors }
}

/// Irreducible factors of a primitive, square-free polynomial with positive leading coefficient.
pub fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    let (p, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let bound = coefficient_bound(f);
    let mut modulus = BigInt::from(p);
    while modulus <= &bound * 2 {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_lift(f, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
}

fn choose_prime(f: &UniPoly) -> (u64, Vec<ModPoly>) {
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    for p in primes()
        .skip(1)
        .filter(|&p| is_good_prime(f, p))
        .take(PRIME_CANDIDATES)
    {
        let fs = ModPoly::from_unipoly(f, p).monic().factor_squarefree();
        if best.as_ref().map_or(true, |(_, b)| fs.len() < b.len()) {
            let done = fs.len() == 1;
            best = Some((p, fs));
            if done {
                break;
            }
        }
    }
    best.expect("some small prime is good for a square-free polynomial")
}

/// Bound on the coefficients of `lc(f) * g` for any factor `g` of `f`.
fn coefficient_bound(f: &UniPoly) -> BigInt {
    let n = f.deg();
    let root = BigInt::from(n + 1).sqrt() + 1;
    root * (BigInt::one() << n) * f.leading().abs() * f.max_norm()
}

fn reduce(c: &BigInt, m: &BigInt) -> BigInt {
    c.mod_floor(m)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_poly(f: &UniPoly, m: &BigInt) -> UniPoly {
    UniPoly::new(f.coeffs().iter().map(|c| reduce(c, m)).collect())
}

fn mul_mod(a: &UniPoly, b: &UniPoly, m: &BigInt) -> UniPoly {
    reduce_poly(&(a * b), m)
}

/// Division by a monic divisor modulo `m`.
fn div_rem_monic(a: &UniPoly, d: &UniPoly, m: &BigInt) -> (UniPoly, UniPoly) {
    debug_assert!(d.leading().is_one());
    let dd = d.deg();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    if rem.len() <= dd {
        return (UniPoly::zero(), reduce_poly(a, m));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let q = reduce(&rem[k + dd], m);
        if q.is_zero() {
            continue;
        }
        for (j, c) in d.coeffs().iter().enumerate() {
            rem[k + j] = reduce(&(&rem[k + j] - &q * c), m);
        }
        quot[k] = q;
    }
    rem.truncate(dd);
    (UniPoly::new(quot), reduce_poly(&UniPoly::new(rem), m))
}

fn lift_unipoly(f: &ModPoly) -> UniPoly {
    f.to_unipoly()
}

/// Lifts `f ≡ lc(f) * prod(factors) (mod p)` to monic factors modulo `target`,
/// which must be `p^(2^k)`.
fn hensel_lift(f: &UniPoly, factors: &[ModPoly], p: u64, target: &BigInt) -> Vec<UniPoly> {
    if factors.len() == 1 {
        let inv = reduce(&f.leading(), target)
            .modinv(target)
            .expect("leading coefficient is a unit");
        return vec![reduce_poly(&f.scale(&inv), target)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_p = ModPoly::new(p, vec![super::modp::reduce_bigint(&f.leading(), p)]);
    let g0 = left.iter().fold(lc_p, |acc, g| acc.mul(g));
    let h0 = right.iter().fold(ModPoly::one(p), |acc, g| acc.mul(g));
    let (one, s0, t0) = g0.ext_gcd(&h0);
    assert_eq!(one, ModPoly::one(p), "modular factors are coprime");

    let (mut g, mut h) = (lift_unipoly(&g0), lift_unipoly(&h0));
    let (mut s, mut t) = (lift_unipoly(&s0), lift_unipoly(&t0));
    let mut m = BigInt::from(p);
    while &m < target {
        let m2 = &m * &m;
        let e = reduce_poly(&(f - &(&g * &h)), &m2);
        let (q, r) = div_rem_monic(&mul_mod(&s, &e, &m2), &h, &m2);
        let g_new = reduce_poly(&(&(&g + &(&t * &e)) + &(&q * &g)), &m2);
        let h_new = reduce_poly(&(&h + &r), &m2);
        let b = reduce_poly(&(&(&(&s * &g_new) + &(&t * &h_new)) - &UniPoly::one()), &m2);
        let (c, d) = div_rem_monic(&mul_mod(&s, &b, &m2), &h_new, &m2);
        s = reduce_poly(&(&s - &d), &m2);
        t = reduce_poly(&(&(&t - &(&t * &b)) - &(&c * &g_new)), &m2);
        g = g_new;
        h = h_new;
        m = m2;
    }
    let mut out = hensel_lift(&g, left, p, target);
    out.extend(hensel_lift(&h, right, p, target));
    out
}

fn recombine(f: &UniPoly, mut lifted: Vec<UniPoly>, modulus: &BigInt) -> Vec<UniPoly> {
    let mut f = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = f.leading();
        let target_const = &lc * f.coeff(0);
        let mut hit = None;
        for subset in (0..lifted.len()).combinations(size) {
            let c0 = subset
                .iter()
                .fold(lc.clone(), |acc, &i| reduce(&(acc * lifted[i].coeff(0)), modulus));
            let c0 = symmetric(&c0, modulus);
            if c0.is_zero() || !(&target_const % &c0).is_zero() {
                continue;
            }
            let prod = subset
                .iter()
                .fold(UniPoly::constant(lc.clone()), |acc, &i| mul_mod(&acc, &lifted[i], modulus));
            let cand = UniPoly::new(prod.coeffs().iter().map(|c| symmetric(c, modulus)).collect())
                .primitive_part();
            if let Some(q) = f.div_exact(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    let f = f.primitive_part();
    if f.deg() > 0 {
        found.push(f);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn difference_of_squares() {
        let fac = factor_over_rationals(&p(&[-1, 0, 1]));
        assert_eq!(fac.content, BigInt::one());
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn irreducible_quadratic() {
        let fac = factor_over_rationals(&p(&[1, 0, 1]));
        assert!(fac.is_irreducible());
    }

    #[test]
    fn content_sign_and_multiplicity() {
        // -6 (x - 1)^2 (x^2 + x + 1) x
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[1, 1, 1])) * &p(&[0, -6]);
        let fac = factor_over_rationals(&f);
        assert_eq!(fac.content, BigInt::from(-6));
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn swinnerton_dyer_style_splitting() {
        // x^4 + 1 splits into quadratics mod every prime but is irreducible
        let fac = factor_over_rationals(&p(&[1, 0, 0, 0, 1]));
        assert!(fac.is_irreducible());
        // x^4 - 10x^2 + 1 likewise
        let fac = factor_over_rationals(&p(&[1, 0, -10, 0, 1]));
        assert!(fac.is_irreducible());
    }

    #[test]
    fn non_monic_product() {
        let a = p(&[3, 0, 5]);
        let b = p(&[-7, 2, 0, 4]);
        let c = p(&[1, -1, 0, 0, 0, 6]);
        let f = &(&a * &b) * &c;
        let fac = factor_over_rationals(&f);
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.degrees(), vec![2, 3, 5]);
    }
}
