//! Sparse multivariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::unipoly::UniPoly;
use crate::error::AlgebraError;

/// Ordered variable names shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.0
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, o: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial::one(vars.len()), c.into());
        p
    }

    pub fn one(vars: &Vars) -> Self {
        MultiPoly::constant(vars, 1)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &Vars, name: &str) -> Result<Self, AlgebraError> {
        let i = vars.index(name)?;
        Ok(MultiPoly::var_at(vars, i))
    }

    pub fn var_at(vars: &Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial(e), BigInt::one());
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in variable `i`.
    pub fn from_unipoly(vars: &Vars, i: usize, f: &UniPoly) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (k, c) in f.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = k as u32;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.total_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> usize {
        self.terms.keys().map(|m| m.0[i] as usize).max().unwrap_or(0)
    }

    pub fn degree_in_var(&self, name: &str) -> Result<usize, AlgebraError> {
        Ok(self.degree_in(self.vars.index(name)?))
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn div_scalar(&self, k: &BigInt) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / k)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.vars);
        let mut base = self.clone();
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

    /// Coefficients with respect to variable `i`, index = power of that variable.
    pub fn coefficients_in(&self, i: usize) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(&self.vars); self.degree_in(i) + 1];
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut e = m.0.clone();
            e[i] = 0;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[i] == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Monomial(e), c * BigInt::from(m.0[i]));
        }
        out
    }

    /// Replaces variable `i` by the polynomial `value`.
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, value.vars, "variable registries differ");
        let coeffs = self.coefficients_in(i);
        let mut acc = MultiPoly::zero(&self.vars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Replaces variable `i` by an integer.
    pub fn specialize(&self, i: usize, value: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[i], 0);
            out.add_term(Monomial(e), c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Evaluates at a rational point given for every variable.
    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(&m.0) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division; `None` if `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.vars, d.vars, "variable registries differ");
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&dm)?;
            let (qc, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let mut term = MultiPoly::zero(&self.vars);
            term.add_term(qm, qc);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Converts to a univariate polynomial in variable `i`; fails if other variables occur.
    pub fn to_unipoly(&self, i: usize) -> Result<UniPoly, AlgebraError> {
        let mut coeffs = vec![BigInt::zero(); self.degree_in(i) + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return Err(AlgebraError::NotUnivariate);
            }
            coeffs[m.0[i] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Re-expresses the polynomial over a registry that contains all occurring variables.
    pub fn remap(&self, vars: &Vars) -> Result<MultiPoly, AlgebraError> {
        let map: Vec<Option<usize>> =
            self.vars.names().iter().map(|n| vars.index(n).ok()).collect();
        let mut out = MultiPoly::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (j, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[j] {
                    Some(t) => e[t] = k,
                    None => {
                        return Err(AlgebraError::UnknownVariable(self.vars.names()[j].clone()))
                    }
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    fn same_vars(&self, o: &MultiPoly) {
        assert!(self.vars == o.vars, "variable registries differ");
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.total_degree() == 0 {
                factors.push(mag.to_string());
            }
            for (name, &k) in self.vars.names().iter().zip(&m.0) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.same_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.same_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.same_vars(o);
        let mut out = MultiPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Vars, MultiPoly, MultiPoly) {
        let vars = Vars::new(&["x", "y"]);
        let x = MultiPoly::var(&vars, "x").unwrap();
        let y = MultiPoly::var(&vars, "y").unwrap();
        (vars, x, y)
    }

    #[test]
    fn grlex_display_order() {
        let (vars, x, y) = xy();
        let p = &(&(&x * &x) + &(&y.scale(&BigInt::from(-3)))) + &MultiPoly::constant(&vars, 2);
        assert_eq!(p.to_string(), "x^2 - 3*y + 2");
        let q = &(&x * &y) + &(&y * &y);
        assert_eq!(q.to_string(), "x*y + y^2");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let (_, x, y) = xy();
        let p = &(&x + &y) - &x;
        assert_eq!(p, y);
        assert!((&p - &y).is_zero());
    }

    #[test]
    fn exact_division_and_coefficients() {
        let (vars, x, y) = xy();
        let a = &x + &y;
        let b = &(&x - &y) + &MultiPoly::one(&vars);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(ab.div_exact(&(&x + &MultiPoly::one(&vars))), None);
        let cs = ab.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[2], MultiPoly::one(&vars));
        assert_eq!(ab.degree_in(1), 2);
    }

    #[test]
    fn substitution_and_evaluation() {
        let (vars, x, y) = xy();
        let p = &(&x * &x) - &y;
        let q = p.substitute(1, &(&x * &x));
        assert!(q.is_zero());
        let s = p.specialize(0, &BigInt::from(3));
        assert_eq!(s, &MultiPoly::constant(&vars, 9) - &y);
        let half = BigRational::new(1.into(), 2.into());
        let v = p.eval_rational(&[half.clone(), half]);
        assert_eq!(v, BigRational::new((-1).into(), 4.into()));
    }

    #[test]
    fn derivative_and_unipoly() {
        let (_, x, _) = xy();
        let p = x.pow(3);
        assert_eq!(p.derivative(0), x.pow(2).scale(&BigInt::from(3)));
        assert_eq!(p.to_unipoly(0).unwrap(), UniPoly::from_i64(&[0, 0, 0, 1]));
    }
}
