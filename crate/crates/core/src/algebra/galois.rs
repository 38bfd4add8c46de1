//! Certifying that a Galois group is the full symmetric group from the
//! factorization patterns of a polynomial modulo primes (Frobenius cycle types).

use std::collections::BTreeMap;

use serde::Serialize;

use super::factor::factor_over_rationals;
use super::modp::{is_good_prime, primes, ModPoly};
use super::unipoly::UniPoly;
use crate::error::AlgebraError;

pub const DEFAULT_PRIME_BUDGET: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GaloisVerdict {
    FullSymmetric,
    Inconclusive,
}

/// A cycle type (parts in decreasing order) and the first prime exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleObservation {
    pub cycle_type: Vec<usize>,
    pub prime: u64,
}

/// Which observation supplies each ingredient of the argument.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// An `n`-cycle: the group is transitive on a single orbit of full length.
    pub full_cycle: Option<CycleObservation>,
    /// Degrees 2..4: the extra cycle types needed beyond the full cycle.
    pub small_degree: Option<CycleObservation>,
    /// A prime part larger than `n/2`, which forces primitivity.
    pub primitivity: Option<CycleObservation>,
    /// A pure prime cycle `p <= n - 3` obtainable as a power.
    pub jordan: Option<CycleObservation>,
    /// An odd permutation.
    pub odd: Option<CycleObservation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisCertificate {
    pub polynomial: UniPoly,
    pub degree: usize,
    pub primes_examined: usize,
    pub observed: Vec<CycleObservation>,
    pub witnesses: Witnesses,
    pub verdict: GaloisVerdict,
}

/// Cycle type of Frobenius at a good prime `p`, read off the distinct-degree factorization.
pub fn cycle_type_mod(f: &UniPoly, p: u64) -> Vec<usize> {
    let mut parts: Vec<usize> = ModPoly::from_unipoly(f, p)
        .distinct_degree()
        .into_iter()
        .flat_map(|(g, d)| std::iter::repeat(d).take(g.deg() / d))
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

fn is_prime(n: usize) -> bool {
    super::modp::is_prime(n as u64)
}

fn is_odd(n: usize, parts: &[usize]) -> bool {
    (n - parts.len()) % 2 == 1
}

fn gives_primitivity(n: usize, parts: &[usize]) -> bool {
    parts.iter().any(|&q| is_prime(q) && 2 * q > n)
}

/// Some prime `q <= n - 3` divides exactly one part, and that part is `q` itself:
/// a suitable power of the permutation is then a `q`-cycle.
fn gives_jordan(n: usize, parts: &[usize]) -> bool {
    (2..=n.saturating_sub(3)).filter(|&q| is_prime(q)).any(|q| {
        let divisible: Vec<usize> = parts.iter().copied().filter(|&x| x % q == 0).collect();
        divisible == [q]
    })
}

fn small_degree_extra(n: usize, parts: &[usize]) -> bool {
    match n {
        2 | 3 => is_odd(n, parts),
        4 => parts == [3, 1],
        _ => false,
    }
}

impl Witnesses {
    fn record(&mut self, n: usize, obs: &CycleObservation) {
        let parts = &obs.cycle_type;
        let slot = |s: &mut Option<CycleObservation>, hit: bool| {
            if hit && s.is_none() {
                *s = Some(obs.clone());
            }
        };
        slot(&mut self.full_cycle, parts == &[n]);
        if n <= 4 {
            slot(&mut self.small_degree, small_degree_extra(n, parts));
        } else {
            slot(&mut self.primitivity, is_prime(n) && parts == &[n] || gives_primitivity(n, parts));
            slot(&mut self.jordan, gives_jordan(n, parts));
        }
        slot(&mut self.odd, is_odd(n, parts));
    }

    fn complete(&self, n: usize) -> bool {
        let base = self.full_cycle.is_some() && self.odd.is_some();
        if n <= 4 {
            base && self.small_degree.is_some()
        } else {
            base && self.primitivity.is_some() && self.jordan.is_some()
        }
    }
}

/// Scans up to `budget` good primes and reports `FullSymmetric` once every
/// ingredient of the argument has been observed.
pub fn galois_certify(f: &UniPoly, budget: usize) -> Result<GaloisCertificate, AlgebraError> {
    let n = f.deg();
    if n < 2 {
        return Err(AlgebraError::DegreeTooSmall(n));
    }
    if !factor_over_rationals(f).is_irreducible() {
        return Err(AlgebraError::Reducible);
    }
    let f = f.primitive_part();
    let mut seen: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut witnesses = Witnesses::default();
    let mut examined = 0;
    for p in primes().filter(|&p| is_good_prime(&f, p)).take(budget) {
        examined += 1;
        let parts = cycle_type_mod(&f, p);
        if seen.contains_key(&parts) {
            continue;
        }
        seen.insert(parts.clone(), p);
        witnesses.record(n, &CycleObservation { cycle_type: parts, prime: p });
        if witnesses.complete(n) {
            break;
        }
    }
    let mut observed: Vec<CycleObservation> = seen
        .into_iter()
        .map(|(cycle_type, prime)| CycleObservation { cycle_type, prime })
        .collect();
    observed.sort_by_key(|o| o.prime);
    let verdict = if witnesses.complete(n) {
        GaloisVerdict::FullSymmetric
    } else {
        GaloisVerdict::Inconclusive
    };
    Ok(GaloisCertificate {
        polynomial: f,
        degree: n,
        primes_examined: examined,
        observed,
        witnesses,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolubilityStatus {
    Soluble,
    NonSoluble,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum FactorReason {
    /// Degree at most 4: solvable by radicals.
    LowDegree,
    /// Degree at least 5 with group certified as the full symmetric group.
    SymmetricGroup { certificate: GaloisCertificate },
    /// Degree at least 5 without a conclusive certificate.
    Inconclusive { certificate: GaloisCertificate },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorJustification {
    pub factor: UniPoly,
    pub multiplicity: u32,
    pub degree: usize,
    #[serde(flatten)]
    pub reason: FactorReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolubilityVerdict {
    pub status: SolubilityStatus,
    pub justification: Vec<FactorJustification>,
}

pub fn solubility_verdict(f: &UniPoly) -> SolubilityVerdict {
    solubility_verdict_with_budget(f, DEFAULT_PRIME_BUDGET)
}

pub fn solubility_verdict_with_budget(f: &UniPoly, budget: usize) -> SolubilityVerdict {
    let fac = factor_over_rationals(f);
    let mut justification = Vec::new();
    for (g, mult) in &fac.factors {
        let reason = if g.deg() <= 4 {
            FactorReason::LowDegree
        } else {
            let certificate = galois_certify(g, budget).expect("factors are irreducible");
            match certificate.verdict {
                GaloisVerdict::FullSymmetric => FactorReason::SymmetricGroup { certificate },
                GaloisVerdict::Inconclusive => FactorReason::Inconclusive { certificate },
            }
        };
        justification.push(FactorJustification {
            factor: g.clone(),
            multiplicity: *mult,
            degree: g.deg(),
            reason,
        });
    }
    let any = |pred: fn(&FactorReason) -> bool| justification.iter().any(|j| pred(&j.reason));
    let status = if any(|r| matches!(r, FactorReason::SymmetricGroup { .. })) {
        SolubilityStatus::NonSoluble
    } else if any(|r| matches!(r, FactorReason::Inconclusive { .. })) {
        SolubilityStatus::Unknown
    } else {
        SolubilityStatus::Soluble
    };
    SolubilityVerdict { status, justification }
}
