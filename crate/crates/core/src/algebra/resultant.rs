//! Sylvester resultants.

use super::matrix::determinant;
use super::multipoly::MultiPoly;
use crate::error::AlgebraError;

/// Sylvester matrix of `f` and `g` with respect to variable `i`, coefficients
/// written from the highest power down.
pub fn sylvester_matrix(
    f: &MultiPoly,
    g: &MultiPoly,
    i: usize,
) -> Result<Vec<Vec<MultiPoly>>, AlgebraError> {
    if f.vars() != g.vars() {
        return Err(AlgebraError::RegistryMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let name = || f.vars().names()[i].clone();
    let (m, n) = (f.degree_in(i), g.degree_in(i));
    if m == 0 || n == 0 {
        return Err(AlgebraError::ConstantInVariable(name()));
    }
    let size = m + n;
    let zero = MultiPoly::zero(f.vars());
    let fc = f.coefficients_in(i);
    let gc = g.coefficients_in(i);
    let mut rows = Vec::with_capacity(size);
    for (coeffs, deg, copies) in [(&fc, m, n), (&gc, n, m)] {
        for shift in 0..copies {
            let mut row = vec![zero.clone(); size];
            for k in 0..=deg {
                row[shift + k] = coeffs[deg - k].clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// `Res(f, g)` with respect to variable `i`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, i: usize) -> Result<MultiPoly, AlgebraError> {
    determinant(&sylvester_matrix(f, g, i)?)
}

/// `Res(f, g)` with respect to the variable called `name`.
pub fn resultant_in(f: &MultiPoly, g: &MultiPoly, name: &str) -> Result<MultiPoly, AlgebraError> {
    resultant(f, g, f.vars().index(name)?)
}
