//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficients stored low-to-high; the leading coefficient is nonzero unless
/// the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }

    /// `x`.
    pub fn x() -> Self {
        UniPoly::from_i64(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        UniPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn div_scalar(&self, c: &BigInt) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Max-norm of the coefficients.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn pow(&self, mut k: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division over the integers; `None` if `d` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let n = self.deg();
        if n < dd {
            return None;
        }
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(UniPoly::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.deg();
        let lc = d.leading();
        let mut rem = self.clone();
        let mut steps = 0usize;
        while !rem.is_zero() && rem.deg() >= dd {
            let shift = rem.deg() - dd;
            let top = rem.leading();
            rem = &rem.scale(&lc) - &(&UniPoly::monomial(top, shift) * d);
            steps += 1;
        }
        let full = (self.deg() + 1).saturating_sub(dd);
        rem.scale(&num_traits::pow(lc, full.saturating_sub(steps)))
    }

    /// Primitive gcd in `Z[x]` (content ignored), with positive leading coefficient.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Square-free decomposition `self = c * prod a_i^i` of a primitive polynomial
    /// (Yun's algorithm); returns the nonconstant `(a_i, i)`.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let f = self.primitive_part();
        if f.deg() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_exact(&a).expect("gcd divides");
        let mut c = df.div_exact(&a).expect("gcd divides the derivative");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while b.deg() > 0 {
            a = b.gcd(&d);
            let next_b = b.div_exact(&a).expect("gcd divides");
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            c = d.div_exact(&a).expect("gcd divides");
            b = next_b;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.deg() == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive_part()
    }

    /// Canonical ordering: by degree, then coefficients from the leading one down.
    pub fn canonical_cmp(&self, other: &UniPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Space-separated coefficients, constant term first.
    pub fn to_shorthand(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one() && k > 0;
            if !unit {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => {
                    if !unit {
                        out.push('*');
                    }
                    out.push_str(var);
                }
                _ => {
                    if !unit {
                        out.push('*');
                    }
                    out.push_str(&format!("{var}^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]", self.to_shorthand())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        let p = UniPoly::new(coeffs.clone());
        if p.coeffs.len() != coeffs.len() {
            return Err(D::Error::custom("leading coefficient must be nonzero"));
        }
        Ok(p)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| self.coeff(k) + rhs.coeff(k))
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| self.coeff(k) - rhs.coeff(k))
                .collect(),
        )
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::iter::Product for UniPoly {
    fn product<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!((&a - &a).degree(), None);
        assert_eq!(a.pow(3), p(&[-1, 3, -3, 1]));
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(f.div_exact(&p(&[1, 2])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 2])), Some(p(&[2])));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 1]);
        let f = &(&a * &a) * &b;
        assert_eq!(f.gcd(&f.derivative()), a);
        assert_eq!(a.pow(2).squarefree_part(), a);
        assert_eq!(p(&[1, 0, 1]).squarefree_part(), p(&[1, 0, 1]));
        assert_eq!(
            f.squarefree_decomposition(),
            vec![(b.clone(), 1), (a.clone(), 2)]
        );
        let g = &p(&[6, 0, 6]) * &a.pow(3);
        assert_eq!(
            g.squarefree_decomposition(),
            vec![(p(&[1, 0, 1]), 1), (a, 3)]
        );
    }

    #[test]
    fn pseudo_remainder_identity() {
        let f = p(&[3, 1, 4, 1, 5]);
        let d = p(&[2, 7, 3]);
        let r = f.pseudo_rem(&d);
        assert!(r.deg() < 2);
        let lc_pow = num_traits::pow(BigInt::from(3), 3);
        // lc^3 * f - r must be divisible by d
        assert!((&f.scale(&lc_pow) - &r).div_exact(&d).is_some());
    }

    #[test]
    fn display_and_shorthand() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.display_with("x3"), "x3^2 - 2");
        assert_eq!(f.to_shorthand(), "-2 0 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"["-2","0","1"]"#);
        assert_eq!(serde_json::from_str::<UniPoly>(&json).unwrap(), f);
    }
}
