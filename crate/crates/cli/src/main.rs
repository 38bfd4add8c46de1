//! `cadgraph`: checks, reduces and classifies planar constraint graphs, and
//! exposes the exact polynomial tools behind the classification.

use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use cadgraph_core::algebra::format::{parse_any, write_shorthand, write_sparse};
use cadgraph_core::algebra::{
    factor_over_rationals, galois_certify, resultant_in, GaloisVerdict, MultiPoly, UniPoly,
    DEFAULT_PRIME_BUDGET,
};
use cadgraph_core::classify::{classify, GraphStatus};
use cadgraph_core::connectivity::is_k_connected_or_false;
use cadgraph_core::elimination::{
    compare_with_golden, doublet_certificate_with, CertificateStatus, REFERENCE_DIMS,
};
use cadgraph_core::planarity::{is_planar, planar_embedding};
use cadgraph_core::reduction::{reduce_to_minimal, TerminalKind};
use cadgraph_core::rigidity::{build_constraints, jacobian_generically_nonsingular, DimensionedGraph};
use cadgraph_core::{
    AlgebraError, EliminationError, FormatError, Graph, GraphError, ReductionError, RigidityError,
};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "cadgraph", version, about = "Rigidity and solvability analysis of planar constraint graphs")]
struct Cli {
    /// Print a human-readable summary instead of the JSON report
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Report maximal independence, 3-connectivity, planarity and freedom
    Check {
        graph: PathBuf,
        /// Include a DOT rendering of the planar embedding
        #[arg(long)]
        emit_dot: bool,
    },
    /// Reduce a 3-connected planar rigid graph to six vertices
    Reduce { graph: PathBuf },
    /// Classify a graph or dimensioned graph by radical solvability
    Classify {
        graph: PathBuf,
        /// Dimensions are lengths rather than squared lengths
        #[arg(long)]
        unsquared: bool,
        /// Include a DOT rendering of the planar embedding
        #[arg(long)]
        emit_dot: bool,
    },
    /// Compute the non-solubility certificate of the doublet for integer lengths
    DoubletCert {
        /// Eight lengths for edges 2-3,3-4,4-5,5-6,3-6,2-6,1-5,1-4
        #[arg(long, value_delimiter = ',', default_values_t = REFERENCE_DIMS)]
        dims: Vec<u64>,
        /// Compare the factors with the bundled reference factorization
        #[arg(long)]
        golden: bool,
        #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
        prime_budget: usize,
    },
    /// Resultant of two polynomials with respect to a variable
    Resultant {
        /// Input file; standard input when omitted or `-`
        input: Option<PathBuf>,
        #[arg(long)]
        var: String,
    },
    /// Factor univariate polynomials over the rationals
    Factor { input: Option<PathBuf> },
    /// Try to certify that the Galois group of an irreducible polynomial is symmetric
    Galois {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
        prime_budget: usize,
    },
}

#[derive(Debug)]
enum Failure {
    /// Valid input with a negative answer.
    Negative(String),
    Input { message: String, line: Option<usize>, column: Option<usize> },
    Internal(String),
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure::Input { message: message.to_string(), line: None, column: None }
    }

    fn exit_code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Input { .. } => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input { message: e.message, line: Some(e.line), column: None }
    }
}

fn json_failure(e: &serde_json::Error) -> Failure {
    Failure::Input { message: e.to_string(), line: Some(e.line()), column: Some(e.column()) }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Json(j) => json_failure(&j),
            other => Failure::input(other),
        }
    }
}

impl From<RigidityError> for Failure {
    fn from(e: RigidityError) -> Self {
        match e {
            RigidityError::Json(j) => json_failure(&j),
            RigidityError::Graph(g) => g.into(),
            other => Failure::input(other),
        }
    }
}

/// A finished command: its result and whether the answer was affirmative.
struct Outcome {
    result: Value,
    affirmative: bool,
}

#[derive(Serialize)]
struct ErrorInfo {
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    column: Option<usize>,
}

#[derive(Serialize)]
struct Report {
    command: Vec<String>,
    input_digest: String,
    status: &'static str,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorInfo>,
    timing_ms: u128,
}

struct Input {
    bytes: Vec<u8>,
}

impl Input {
    fn text(&self) -> Result<&str, Failure> {
        std::str::from_utf8(&self.bytes).map_err(|_| Failure::input("input is not valid UTF-8"))
    }
}

fn read_input(path: Option<&Path>) -> Result<Input, Failure> {
    let mut bytes = Vec::new();
    match path {
        None => std::io::stdin().read_to_end(&mut bytes).map(|_| ()),
        Some(p) if p == Path::new("-") => std::io::stdin().read_to_end(&mut bytes).map(|_| ()),
        Some(p) => std::fs::read(p).map(|b| bytes = b),
    }
    .map_err(|e| Failure::input(format!("cannot read input: {e}")))?;
    Ok(Input { bytes })
}

fn input_path(cmd: &Commands) -> Option<Option<&Path>> {
    match cmd {
        Commands::Check { graph, .. } | Commands::Reduce { graph } | Commands::Classify { graph, .. } => {
            Some(Some(graph.as_path()))
        }
        Commands::Resultant { input, .. } | Commands::Factor { input } | Commands::Galois { input, .. } => {
            Some(input.as_deref())
        }
        Commands::DoubletCert { .. } => None,
    }
}

fn name_of(cmd: &Commands) -> &'static str {
    match cmd {
        Commands::Check { .. } => "check",
        Commands::Reduce { .. } => "reduce",
        Commands::Classify { .. } => "classify",
        Commands::DoubletCert { .. } => "doublet-cert",
        Commands::Resultant { .. } => "resultant",
        Commands::Factor { .. } => "factor",
        Commands::Galois { .. } => "galois",
    }
}

/// SHA-256 over the argument list and the input bytes.
fn digest(args: &[String], input: &[u8]) -> String {
    let mut h = Sha256::new();
    for a in args {
        h.update(a.as_bytes());
        h.update([0]);
    }
    h.update(input);
    hex::encode(h.finalize())
}

fn embedding_dot(g: &Graph) -> Value {
    match planar_embedding(g) {
        Ok(emb) => Value::String(emb.to_dot()),
        Err(_) => Value::Null,
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure::Internal(e.to_string()))
}

fn cmd_check(input: &Input, emit_dot: bool) -> Result<Outcome, Failure> {
    let g = Graph::from_json(input.text()?)?;
    let mi = g.is_maximally_independent();
    let mut result = json!({
        "vertices": g.order(),
        "edges": g.size(),
        "independent": g.is_independent(),
        "mi": mi,
        "threeconn": is_k_connected_or_false(&g, 3),
        "planar": is_planar(&g),
        "freedom": g.freedom().value(),
    });
    if emit_dot {
        result["embedding_dot"] = embedding_dot(&g);
    }
    Ok(Outcome { result, affirmative: mi })
}

fn cmd_reduce(input: &Input) -> Result<Outcome, Failure> {
    let g = Graph::from_json(input.text()?)?;
    let trace = reduce_to_minimal(&g).map_err(|e| match e {
        ReductionError::Precondition(_) => Failure::Negative(e.to_string()),
        e if e.is_internal() => Failure::Internal(e.to_string()),
        e => Failure::input(e),
    })?;
    let mut result = to_value(&trace)?;
    result["step_count"] = json!(trace.steps.len());
    Ok(Outcome { result, affirmative: trace.terminal_kind == TerminalKind::Doublet })
}

fn cmd_classify(input: &Input, unsquared: bool, emit_dot: bool) -> Result<Outcome, Failure> {
    let text = input.text()?;
    let raw: Value = serde_json::from_str(text).map_err(|e| json_failure(&e))?;
    let (g, dimensioned) = if raw.get("dims").is_some() {
        let dg = DimensionedGraph::from_json_with(text, unsquared)?;
        let cs = build_constraints(&dg);
        let info = json!({
            "base_edge": dg.base_edge(),
            "square_system": cs.is_square(),
            "jacobian_nonsingular": cs.is_square() && jacobian_generically_nonsingular(&cs),
        });
        (dg.graph().clone(), Some(info))
    } else if unsquared {
        return Err(Failure::input("--unsquared needs a dimensioned graph with a \"dims\" field"));
    } else {
        (Graph::from_json(text)?, None)
    };
    if !g.is_maximally_independent() {
        return Err(Failure::input(format!(
            "graph is not maximally independent (freedom {})",
            g.freedom()
        )));
    }
    let verdict = classify(&g);
    let mut result = to_value(&verdict)?;
    if let Some(info) = dimensioned {
        result["dimensioned"] = info;
    }
    if emit_dot {
        result["embedding_dot"] = embedding_dot(&g);
    }
    Ok(Outcome { result, affirmative: verdict.status != GraphStatus::Unknown })
}

fn cmd_doublet_cert(dims: &[u64], golden: bool, prime_budget: usize) -> Result<Outcome, Failure> {
    let dims: [u64; 8] = dims
        .try_into()
        .map_err(|_| Failure::input(format!("expected 8 lengths, got {}", dims.len())))?;
    let cert = doublet_certificate_with(&dims, prime_budget).map_err(|e| match e {
        EliminationError::DegreeDrop { .. } | EliminationError::WrongShape(_) => {
            Failure::Negative(e.to_string())
        }
        EliminationError::NonIntegralDimension(_) | EliminationError::DimensionCount(_) => {
            Failure::input(e)
        }
        e => Failure::Internal(e.to_string()),
    })?;
    let mut affirmative = cert.status == CertificateStatus::Complete;
    let mut result = to_value(&cert)?;
    if golden {
        let cmp = compare_with_golden(&cert);
        affirmative &= cmp.matches;
        result["golden"] = to_value(&cmp)?;
    }
    Ok(Outcome { result, affirmative })
}

fn algebra_failure(e: AlgebraError) -> Failure {
    match e {
        AlgebraError::RegistryMismatch | AlgebraError::NotSquare { .. } | AlgebraError::InexactDivision => {
            Failure::Internal(e.to_string())
        }
        e => Failure::input(e),
    }
}

/// Reads univariate polynomials; returns them with the variable name.
fn univariate(text: &str) -> Result<Vec<(UniPoly, String)>, Failure> {
    parse_any(text, &[])?
        .iter()
        .map(|p: &MultiPoly| {
            let support = p.support();
            if support.len() > 1 {
                return Err(algebra_failure(AlgebraError::NotUnivariate));
            }
            let i = support.first().copied().unwrap_or(0);
            let name = p.vars().names().get(i).cloned().unwrap_or_else(|| "x".into());
            Ok((p.to_unipoly(i).map_err(algebra_failure)?, name))
        })
        .collect()
}

fn cmd_resultant(input: &Input, var: &str) -> Result<Outcome, Failure> {
    let polys = parse_any(input.text()?, &[var])?;
    let [f, g] = polys.as_slice() else {
        return Err(Failure::input(format!("expected 2 polynomials, got {}", polys.len())));
    };
    let r = resultant_in(f, g, var).map_err(algebra_failure)?;
    let result = json!({
        "variable": var,
        "resultant": r.to_string(),
        "sparse": write_sparse(&[r]),
    });
    Ok(Outcome { result, affirmative: true })
}

fn cmd_factor(input: &Input) -> Result<Outcome, Failure> {
    let mut out = Vec::new();
    for (p, var) in univariate(input.text()?)? {
        if p.is_zero() {
            return Err(algebra_failure(AlgebraError::ZeroPolynomial));
        }
        let fac = factor_over_rationals(&p);
        let factors: Vec<Value> = fac
            .factors
            .iter()
            .map(|(f, m)| {
                json!({
                    "degree": f.deg(),
                    "multiplicity": m,
                    "polynomial": f.display_with(&var),
                    "shorthand": f.to_shorthand(),
                })
            })
            .collect();
        let plain: Vec<UniPoly> = fac.factors.iter().map(|(f, _)| f.clone()).collect();
        out.push(json!({
            "degree": p.deg(),
            "content": fac.content.to_string(),
            "degrees": fac.degrees(),
            "factors": factors,
            "shorthand": write_shorthand(&plain),
        }));
    }
    Ok(Outcome { result: json!({ "polynomials": out }), affirmative: true })
}

fn cmd_galois(input: &Input, prime_budget: usize) -> Result<Outcome, Failure> {
    let polys = univariate(input.text()?)?;
    let [(f, var)] = polys.as_slice() else {
        return Err(Failure::input(format!("expected 1 polynomial, got {}", polys.len())));
    };
    let cert = galois_certify(f, prime_budget).map_err(algebra_failure)?;
    let symmetric = cert.verdict == GaloisVerdict::FullSymmetric;
    let mut result = to_value(&cert)?;
    result["display"] = json!(f.display_with(var));
    if !symmetric {
        result["notice"] = json!(format!(
            "prime budget exhausted: {} primes examined without certifying the full symmetric group",
            cert.primes_examined
        ));
    }
    Ok(Outcome { result, affirmative: symmetric })
}

fn run(cmd: &Commands, input: Option<&Input>) -> Result<Outcome, Failure> {
    let input = || input.ok_or_else(|| Failure::Internal("input was not read".into()));
    match cmd {
        Commands::Check { emit_dot, .. } => cmd_check(input()?, *emit_dot),
        Commands::Reduce { .. } => cmd_reduce(input()?),
        Commands::Classify { unsquared, emit_dot, .. } => cmd_classify(input()?, *unsquared, *emit_dot),
        Commands::DoubletCert { dims, golden, prime_budget } => cmd_doublet_cert(dims, *golden, *prime_budget),
        Commands::Resultant { var, .. } => cmd_resultant(input()?, var),
        Commands::Factor { .. } => cmd_factor(input()?),
        Commands::Galois { prime_budget, .. } => cmd_galois(input()?, *prime_budget),
    }
}

fn flag(v: &Value, key: &str) -> String {
    match v.get(key) {
        Some(Value::String(s)) => s.clone(),
        Some(Value::Null) | None => "-".into(),
        Some(other) => other.to_string(),
    }
}

/// Human summary built from the report alone.
fn summarize(r: &Report) -> String {
    let mut s = format!("{} [{}]\n", r.command.join(" "), r.status);
    if let Some(e) = &r.error {
        let at = match (e.line, e.column) {
            (Some(l), Some(c)) => format!(" at line {l}, column {c}"),
            (Some(l), None) => format!(" at line {l}"),
            _ => String::new(),
        };
        let _ = writeln!(s, "{} error{at}: {}", e.kind, e.message);
        return s;
    }
    let v = &r.result;
    match r.command.first().map(String::as_str) {
        Some("check") => {
            for k in ["vertices", "edges", "mi", "threeconn", "planar", "freedom"] {
                let _ = writeln!(s, "{k}: {}", flag(v, k));
            }
        }
        Some("reduce") => {
            let _ = writeln!(s, "steps: {}", flag(v, "step_count"));
            for step in v["steps"].as_array().into_iter().flatten() {
                let _ = writeln!(s, "  {step}");
            }
            let _ = writeln!(s, "terminal: {}", flag(v, "terminal_kind"));
        }
        Some("classify") => {
            let _ = writeln!(s, "status: {}", flag(v, "status"));
            for reason in v["reasons"].as_array().into_iter().flatten() {
                let _ = writeln!(s, "  {}", reason.as_str().unwrap_or_default());
            }
        }
        Some("doublet-cert") => {
            let _ = writeln!(s, "eliminant degree: {}", flag(v, "eliminant_degree"));
            for f in v["factors"].as_array().into_iter().flatten() {
                let verdict = f["galois"]["verdict"].as_str().unwrap_or("-");
                let _ = writeln!(s, "  factor of degree {} (multiplicity {}): {verdict}", f["degree"], f["multiplicity"]);
            }
            let _ = writeln!(s, "status: {}", flag(v, "status"));
            if let Some(g) = v.get("golden") {
                let _ = writeln!(s, "golden match: {}", flag(g, "matches"));
            }
        }
        Some("resultant") => {
            let _ = writeln!(s, "{}", flag(v, "resultant"));
        }
        Some("factor") => {
            for p in v["polynomials"].as_array().into_iter().flatten() {
                let _ = writeln!(s, "content {}, factor degrees {}", flag(p, "content"), p["degrees"]);
                for f in p["factors"].as_array().into_iter().flatten() {
                    let _ = writeln!(s, "  ({})^{}", flag(f, "polynomial"), f["multiplicity"]);
                }
            }
        }
        Some("galois") => {
            let _ = writeln!(s, "{}: {} after {} primes", flag(v, "display"), flag(v, "verdict"), flag(v, "primes_examined"));
            if let Some(n) = v.get("notice") {
                let _ = writeln!(s, "{}", n.as_str().unwrap_or_default());
            }
        }
        _ => {}
    }
    let _ = writeln!(s, "digest {} ({} ms)", r.input_digest, r.timing_ms);
    s
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let start = Instant::now();
    // the subcommand leads; the presentation flag does not affect the digest
    let mut echo: Vec<String> = args.into_iter().filter(|a| a != "--pretty").collect();
    if echo.first().map(String::as_str) != Some(name_of(&cli.command)) {
        echo.insert(0, name_of(&cli.command).to_string());
    }

    let input = input_path(&cli.command).map(read_input).transpose();
    let (outcome, bytes) = match input {
        Ok(input) => {
            let bytes = input.as_ref().map(|i| i.bytes.clone()).unwrap_or_default();
            (run(&cli.command, input.as_ref()), bytes)
        }
        Err(e) => (Err(e), Vec::new()),
    };

    let (status, result, error, code) = match outcome {
        Ok(o) if o.affirmative => ("ok", o.result, None, 0),
        Ok(o) => ("negative", o.result, None, 1),
        Err(f) => {
            let code = f.exit_code();
            let (kind, message, line, column) = match f {
                Failure::Negative(m) => ("negative", m, None, None),
                Failure::Input { message, line, column } => ("input", message, line, column),
                Failure::Internal(m) => ("internal", m, None, None),
            };
            eprintln!("cadgraph: {message}");
            let status = match code {
                1 => "negative",
                2 => "input_error",
                _ => "internal_error",
            };
            (status, Value::Null, Some(ErrorInfo { kind, message, line, column }), code)
        }
    };

    let report = Report {
        input_digest: digest(&echo, &bytes),
        command: echo,
        status,
        result,
        error,
        timing_ms: start.elapsed().as_millis(),
    };
    let text = if cli.pretty {
        summarize(&report)
    } else {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    };
    // a closed pipe is not an error for a report writer
    let _ = std::io::stdout().write_all(text.as_bytes());
    ExitCode::from(code)
}
