//! Solvability verdicts for maximally independent planar graphs.

use serde::Serialize;

use crate::elimination::{reference_certificate, CertificateStatus, REFERENCE_DIMS};
use crate::graph::Graph;
use crate::planarity::is_planar;
use crate::reduction::{
    qs_decompose_with, reduce_to_minimal, QsDecomposition, ReductionTrace, TerminalKind,
    VirtualEdgePolicy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphStatus {
    /// Every piece of the two-vertex decomposition is a triangle: ruler-and-compass constructible.
    Qs,
    /// A 3-connected planar core reduces to the doublet, whose generic system is not radical.
    NonSolubleCertified,
    Unknown,
}

/// A 3-connected core together with its reduction to the doublet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreEvidence {
    pub core: Graph,
    pub trace: ReductionTrace,
}

/// Condensed view of the doublet certificate a verdict relies on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateSummary {
    pub dims: [u64; 8],
    pub eliminant_degree: usize,
    pub factor_degrees: Vec<usize>,
    pub status: CertificateStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphVerdict {
    pub status: GraphStatus,
    pub reasons: Vec<String>,
    pub decomposition: Option<QsDecomposition>,
    pub cores: Vec<CoreEvidence>,
    pub certificate: Option<CertificateSummary>,
}

impl GraphVerdict {
    fn unknown(reason: impl Into<String>) -> Self {
        GraphVerdict {
            status: GraphStatus::Unknown,
            reasons: vec![reason.into()],
            decomposition: None,
            cores: Vec::new(),
            certificate: None,
        }
    }
}

pub fn classify(g: &Graph) -> GraphVerdict {
    classify_with(g, VirtualEdgePolicy::default())
}

pub fn classify_with(g: &Graph, policy: VirtualEdgePolicy) -> GraphVerdict {
    if !g.is_maximally_independent() {
        return GraphVerdict::unknown("graph is not maximally independent");
    }
    if !is_planar(g) {
        return GraphVerdict::unknown(
            "graph is not planar; the reduction argument only covers planar graphs",
        );
    }
    let decomposition = qs_decompose_with(g, policy);
    let mut verdict = GraphVerdict {
        status: GraphStatus::Unknown,
        reasons: Vec::new(),
        decomposition: None,
        cores: Vec::new(),
        certificate: None,
    };
    if decomposition.is_qs() {
        verdict.status = GraphStatus::Qs;
        verdict.reasons.push("every separation piece is a triangle".into());
        verdict.decomposition = Some(decomposition);
        return verdict;
    }
    for core in decomposition.cores() {
        match reduce_to_minimal(core) {
            Ok(trace) => verdict.cores.push(CoreEvidence { core: core.clone(), trace }),
            Err(e) => verdict.reasons.push(format!("reduction of a core failed: {e}")),
        }
    }
    let reaches_doublet = verdict
        .cores
        .iter()
        .any(|c| c.trace.terminal_kind == TerminalKind::Doublet);
    if reaches_doublet {
        let cert = reference_certificate();
        verdict.certificate = Some(CertificateSummary {
            dims: REFERENCE_DIMS,
            eliminant_degree: cert.eliminant_degree,
            factor_degrees: cert.factors.iter().map(|f| f.degree).collect(),
            status: cert.status,
        });
        if cert.status == CertificateStatus::Complete {
            verdict.status = GraphStatus::NonSolubleCertified;
            verdict.reasons.push(
                "a 3-connected planar core reduces to the doublet; a planar 3-connected \
                 maximally independent graph is generically not soluble by radicals"
                    .into(),
            );
            verdict.reasons.push(
                "doublet certificate recomputed: every factor of the eliminant has full symmetric Galois group"
                    .into(),
            );
        } else {
            verdict.reasons.push("doublet certificate is incomplete".into());
        }
    } else if decomposition.has_irreducible() {
        verdict.reasons.push(
            "the decomposition produced a piece that is not maximally independent".into(),
        );
    }
    verdict.decomposition = Some(decomposition);
    verdict
}
