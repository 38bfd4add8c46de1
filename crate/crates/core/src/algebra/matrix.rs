//! Exact determinants over polynomial and rational entries.

use num_rational::BigRational;
use num_traits::Zero;

use super::multipoly::MultiPoly;
use crate::error::AlgebraError;

pub type PolyMatrix = Vec<Vec<MultiPoly>>;

fn check_square<T>(m: &[Vec<T>]) -> Result<usize, AlgebraError> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(AlgebraError::NotSquare { rows: n, cols: row.len() });
    }
    Ok(n)
}

/// Fraction-free (Bareiss) determinant. The empty matrix has no registry to
/// build a polynomial in, so it is rejected.
pub fn determinant(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, AlgebraError> {
    let n = check_square(m)?;
    if n == 0 {
        return Err(AlgebraError::NotSquare { rows: 0, cols: 0 });
    }
    let vars = m[0][0].vars().clone();
    if m.iter().flatten().any(|p| p.vars() != &vars) {
        return Err(AlgebraError::RegistryMismatch);
    }
    let mut a: PolyMatrix = m.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one(&vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero(&vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).ok_or(AlgebraError::InexactDivision)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Determinant over the rationals by Gaussian elimination.
pub fn rational_determinant(m: &[Vec<BigRational>]) -> Result<BigRational, AlgebraError> {
    let n = check_square(m)?;
    let mut a = m.to_vec();
    let mut det = BigRational::from_integer(1.into());
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    Ok(det)
}
