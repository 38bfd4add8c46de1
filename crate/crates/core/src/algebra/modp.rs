//! Polynomials over a prime field `F_p` with word-sized `p`.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::unipoly::UniPoly;

/// A polynomial over `F_p`, coefficients low-to-high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    p: u64,
    c: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse");
    pow_mod(a, p - 2, p)
}

/// Reduces an integer into `0..p`.
pub fn reduce_bigint(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((c % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in &mut c {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn from_unipoly(f: &UniPoly, p: u64) -> Self {
        ModPoly::new(p, f.coeffs().iter().map(|c| reduce_bigint(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    /// Lifts to integers with residues in `0..p`.
    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(self.c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> ModPoly {
        ModPoly::new(self.p, self.c.iter().map(|&x| mul_mod(x, k, self.p)).collect())
    }

    pub fn add(&self, o: &ModPoly) -> ModPoly {
        let n = self.c.len().max(o.c.len());
        let get = |v: &[u64], k: usize| v.get(k).copied().unwrap_or(0);
        ModPoly::new(
            self.p,
            (0..n).map(|k| (get(&self.c, k) + get(&o.c, k)) % self.p).collect(),
        )
    }

    pub fn sub(&self, o: &ModPoly) -> ModPoly {
        let n = self.c.len().max(o.c.len());
        let get = |v: &[u64], k: usize| v.get(k).copied().unwrap_or(0);
        ModPoly::new(
            self.p,
            (0..n)
                .map(|k| (get(&self.c, k) + self.p - get(&o.c, k)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &ModPoly) -> ModPoly {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        ModPoly::new(self.p, acc.into_iter().map(|x| x as u64).collect())
    }

    pub fn div_rem(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = d.deg();
        if self.c.len() <= dd {
            return (ModPoly::zero(p), self.clone());
        }
        let inv = inv_mod(d.leading(), p);
        let mut rem = self.c.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd];
            if top == 0 {
                continue;
            }
            let q = mul_mod(top, inv, p);
            quot[k] = q;
            for (j, &c) in d.c.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mul_mod(q, c, p)) % p;
            }
        }
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> ModPoly {
        ModPoly::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| mul_mod(c, k as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        if self.deg() == 0 {
            return true;
        }
        let d = self.derivative();
        !d.is_zero() && self.gcd(&d).deg() == 0
    }

    /// `self^e mod m`, with `e` given as a big integer.
    pub fn pow_mod_big(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Distinct-degree factorization of a monic square-free polynomial:
    /// pairs `(g_d, d)` where `g_d` is the product of all irreducible factors of degree `d`.
    pub fn distinct_degree(&self) -> Vec<(ModPoly, usize)> {
        let p = self.p;
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = ModPoly::x(p);
        let mut h = x.rem(&f);
        let pb = BigUint::from(p);
        let mut d = 0;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod_big(&pb, &f);
            let g = f.gcd(&h.sub(&x));
            if g.deg() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.deg() > 0 {
            let deg = f.deg();
            out.push((f, deg));
        }
        out
    }

    /// Equal-degree splitting (Cantor–Zassenhaus) of a monic product of
    /// irreducibles of degree `d`; requires odd `p`.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
        let p = self.p;
        assert!(p % 2 == 1, "equal-degree splitting needs an odd prime");
        if self.deg() == d {
            return vec![self.monic()];
        }
        let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a = ModPoly::new(
                p,
                (0..self.deg()).map(|_| rng.gen_range(0..p)).collect(),
            );
            if a.deg() == 0 {
                continue;
            }
            let b = a.pow_mod_big(&exp, self).sub(&ModPoly::one(p));
            let g = self.gcd(&b);
            if g.deg() > 0 && g.deg() < self.deg() {
                let rest = self.div_rem(&g).0;
                let mut out = g.equal_degree(d, rng);
                out.extend(rest.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization of a square-free polynomial into monic irreducibles,
    /// sorted by degree then coefficients. Deterministic for a given input.
    pub fn factor_squarefree(&self) -> Vec<ModPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.p ^ ((self.deg() as u64) << 32));
        let mut out: Vec<ModPoly> = self
            .distinct_degree()
            .into_iter()
            .flat_map(|(g, d)| g.equal_degree(d, &mut rng))
            .collect();
        out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
        out
    }
}

/// Primes in increasing order, starting at 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// True iff `f mod p` keeps its degree and stays square-free.
pub fn is_good_prime(f: &UniPoly, p: u64) -> bool {
    if reduce_bigint(&f.leading(), p) == 0 {
        return false;
    }
    ModPoly::from_unipoly(f, p).is_squarefree()
}

#[allow(dead_code)]
pub(crate) fn is_zero_mod(c: &BigInt, p: u64) -> bool {
    (c % BigInt::from(p)).is_zero()
}
