//! Exact polynomial arithmetic.

pub mod factor;
pub mod format;
pub mod galois;
pub mod matrix;
pub mod modp;
pub mod multipoly;
pub mod resultant;
pub mod unipoly;

pub use factor::{factor_over_rationals, Factorization};
pub use galois::{
    galois_certify, solubility_verdict, solubility_verdict_with_budget, GaloisCertificate,
    GaloisVerdict, SolubilityStatus, SolubilityVerdict, DEFAULT_PRIME_BUDGET,
};
pub use matrix::{determinant, rational_determinant};
pub use multipoly::{Monomial, MultiPoly, Vars};
pub use resultant::{resultant, resultant_in, sylvester_matrix};
pub use unipoly::UniPoly;
