//! Command implementations behind the `ppart` binary.
//!
//! Every command is a pure function from parsed inputs to a rendered string
//! plus an exit code, so the binary stays a thin argument parser. Exit code
//! conventions: 0 for success, 1 for semantic failures (mismatching checks,
//! cap violations), 2 for usage and parse errors.
//!
//! JSON output is the stable machine contract: identical invocations
//! produce byte-identical stdout. Reports therefore omit wall-clock timing
//! from JSON and only show it in the plain rendering.

use std::fmt;
use std::time::Instant;

use thiserror::Error;

use crate::composition::{Composition, Partition};
use crate::matrices::{enumerate_q, enumerate_r, enumerate_r_symmetric, FillingMatrix};
use crate::poset::WeightedLabelledPoset;
use crate::ppartition::{enumerate_ppartitions, k_truncated};
use crate::qsym::{
    f_to_m, m_to_f, power_sum_capped, power_sum_to_f_capped, reverse_power_sum_capped, Basis,
    QSymElement,
};
use crate::verify::{run_suite, suite_names, worked_examples, CheckRecord};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Plain,
    Json,
    Latex,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "plain" => Some(Self::Plain),
            "json" => Some(Self::Json),
            "latex" => Some(Self::Latex),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

impl Status {
    pub fn tag(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        }
    }
}

/// Outcome of a batch command: named checks with expected and actual values.
/// The status is `ok` exactly when every record matches.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub details: Vec<CheckRecord>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn from_checks(command: String, details: Vec<CheckRecord>, elapsed_ms: u128) -> Self {
        let status = if details.iter().all(CheckRecord::passed) {
            Status::Ok
        } else {
            Status::Mismatch
        };
        Self {
            command,
            status,
            details,
            elapsed_ms,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let details: Vec<serde_json::Value> = self
                    .details
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "name": r.name,
                            "expected": r.expected,
                            "actual": r.actual,
                            "pass": r.passed(),
                        })
                    })
                    .collect();
                let report = serde_json::json!({
                    "command": self.command,
                    "status": self.status.tag(),
                    "details": details,
                });
                format!("{report}\n")
            }
            OutputFormat::Plain | OutputFormat::Latex => {
                let mut out = String::new();
                for r in &self.details {
                    if r.passed() {
                        out.push_str(&format!("PASS {}\n", r.name));
                    } else {
                        out.push_str(&format!(
                            "FAIL {}\n    expected: {}\n    actual:   {}\n",
                            r.name, r.expected, r.actual
                        ));
                    }
                }
                let passed = self.details.iter().filter(|r| r.passed()).count();
                out.push_str(&format!(
                    "{}: {} ({passed}/{} checks passed, {} ms)\n",
                    self.command,
                    self.status.tag(),
                    self.details.len(),
                    self.elapsed_ms
                ));
                out
            }
        }
    }
}

/// Resource caps surfaced as CLI flags.
#[derive(Clone, Copy, Debug)]
pub struct CliLimits {
    pub max_degree: u32,
    pub max_poset_elements: usize,
    pub vars: Option<u32>,
}

impl Default for CliLimits {
    fn default() -> Self {
        Self {
            max_degree: 7,
            max_poset_elements: 10,
            vars: None,
        }
    }
}

/// Assignment enumeration guard for `kpartitions`/`ktruncate`.
const MAX_ASSIGNMENTS: f64 = 1e7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Cap(_) => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CmdOutput {
    pub stdout: String,
    pub exit_code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            exit_code: 0,
        }
    }
}

fn parse_composition(text: &str) -> Result<Composition, CliError> {
    text.parse()
        .map_err(|e: crate::composition::CompositionError| CliError::Parse(e.to_string()))
}

fn render_element(e: &QSymElement, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format!("{}\n", e.render_plain()),
        OutputFormat::Json => format!("{}\n", e.to_json()),
        OutputFormat::Latex => format!("{}\n", e.render_latex()),
    }
}

/// `expand <basis> <composition> --to <basis>`: expands a basis element
/// into the monomial or fundamental basis.
pub fn cmd_expand(
    basis_from: &str,
    index: &str,
    basis_to: &str,
    format: OutputFormat,
    limits: CliLimits,
) -> Result<CmdOutput, CliError> {
    let from = Basis::parse(basis_from)
        .ok_or_else(|| CliError::Usage(format!("unknown source basis `{basis_from}`")))?;
    let to = match Basis::parse(basis_to) {
        Some(Basis::M) => Basis::M,
        Some(Basis::F) => Basis::F,
        _ => {
            return Err(CliError::Usage(format!(
                "target basis must be M or F, got `{basis_to}`"
            )))
        }
    };
    let alpha = parse_composition(index)?;
    if alpha.size() > limits.max_degree {
        return Err(CliError::Cap(format!(
            "degree {} is over the cap of {} (raise --max-degree)",
            alpha.size(),
            limits.max_degree
        )));
    }
    let cap_err = |e: crate::qsym::QsymError| CliError::Cap(e.to_string());
    let element = match (from, to) {
        (Basis::M, Basis::M) | (Basis::F, Basis::F) => {
            QSymElement::from_term(from, alpha, crate::coeff::int(1))
        }
        (Basis::M, Basis::F) => m_to_f(&QSymElement::from_term(
            Basis::M,
            alpha,
            crate::coeff::int(1),
        )),
        (Basis::F, Basis::M) => f_to_m(&QSymElement::from_term(
            Basis::F,
            alpha,
            crate::coeff::int(1),
        )),
        (Basis::P, Basis::M) => power_sum_capped(&alpha, limits.max_degree).map_err(cap_err)?,
        (Basis::P, Basis::F) => {
            power_sum_to_f_capped(&alpha, limits.max_degree).map_err(cap_err)?
        }
        (Basis::Pr, Basis::M) => {
            reverse_power_sum_capped(&alpha, limits.max_degree).map_err(cap_err)?
        }
        (Basis::Pr, Basis::F) => {
            m_to_f(&reverse_power_sum_capped(&alpha, limits.max_degree).map_err(cap_err)?)
        }
        _ => unreachable!("target is M or F"),
    };
    Ok(CmdOutput::ok(render_element(&element, format)))
}

/// Largest degree at which every suite completes: above this the
/// all-ones composition alone needs more chains than the expansion cap
/// admits.
pub const MAX_SUITE_DEGREE: u32 = 9;

/// `verify <suite> <degree>`: runs a named invariant suite exhaustively.
pub fn cmd_verify(suite: &str, degree: u32, format: OutputFormat) -> Result<CmdOutput, CliError> {
    if degree > MAX_SUITE_DEGREE {
        return Err(CliError::Usage(format!(
            "suites run up to degree {MAX_SUITE_DEGREE}, got {degree}"
        )));
    }
    let start = Instant::now();
    let records = run_suite(suite, degree).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown suite `{suite}`; expected one of {}",
            suite_names().join(", ")
        ))
    })?;
    let report = RunReport::from_checks(
        format!("verify {suite} {degree}"),
        records,
        start.elapsed().as_millis(),
    );
    let exit_code = if report.is_ok() { 0 } else { 1 };
    Ok(CmdOutput {
        stdout: report.render(format),
        exit_code,
    })
}

enum MatrixKind {
    R,
    RSym,
    Q,
}

impl MatrixKind {
    fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Some(Self::R),
            "rsym" => Some(Self::RSym),
            "q" => Some(Self::Q),
            _ => None,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            Self::R => "R",
            Self::RSym => "Rsym",
            Self::Q => "Q",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// `matrices <R|Rsym|Q> <alpha> <beta>`: lists the filling matrices for a
/// pair of compositions (partitions for `Rsym`) and their count.
pub fn cmd_matrices(
    kind: &str,
    alpha: &str,
    beta: &str,
    format: OutputFormat,
) -> Result<CmdOutput, CliError> {
    let kind = MatrixKind::parse(kind)
        .ok_or_else(|| CliError::Usage(format!("unknown matrix kind `{kind}`")))?;
    let alpha_comp = parse_composition(alpha)?;
    let beta_comp = parse_composition(beta)?;
    if alpha_comp.size() != beta_comp.size() {
        return Err(CliError::Usage(format!(
            "sizes differ: |{alpha_comp}| = {} but |{beta_comp}| = {}",
            alpha_comp.size(),
            beta_comp.size()
        )));
    }
    let matrices: Vec<FillingMatrix> = match kind {
        MatrixKind::R => enumerate_r(&alpha_comp, &beta_comp),
        MatrixKind::Q => enumerate_q(&alpha_comp, &beta_comp),
        MatrixKind::RSym => {
            let lambda = Partition::new(alpha_comp.parts().to_vec())
                .map_err(|_| CliError::Parse(format!("`{alpha_comp}` is not a partition")))?;
            let mu = Partition::new(beta_comp.parts().to_vec())
                .map_err(|_| CliError::Parse(format!("`{beta_comp}` is not a partition")))?;
            enumerate_r_symmetric(&lambda, &mu)
        }
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let stdout = match format {
        OutputFormat::Json => {
            let value = serde_json::json!({
                "kind": kind.tag(),
                "alpha": alpha_comp.parts(),
                "beta": beta_comp.parts(),
                "count": matrices.len(),
                "matrices": matrices.iter().map(FillingMatrix::to_json).collect::<Vec<_>>(),
            });
            format!("{value}\n")
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            for m in &matrices {
                out.push_str(&m.render_latex());
                out.push('\n');
            }
            out.push_str(&format!("count: {}\n", matrices.len()));
            out
        }
        OutputFormat::Plain => {
            let mut out = String::new();
            for m in &matrices {
                out.push_str(&m.render_plain());
                out.push_str("\n\n");
            }
            out.push_str(&format!("count: {}\n", matrices.len()));
            out
        }
    };
    Ok(CmdOutput::ok(stdout))
}

/// `poset <extensions|lowersets|kpartitions|ktruncate> <file>`: enumerations
/// over a poset given in the text format.
pub fn cmd_poset(
    action: &str,
    text: &str,
    format: OutputFormat,
    limits: CliLimits,
) -> Result<CmdOutput, CliError> {
    let poset =
        WeightedLabelledPoset::from_text(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if poset.len() > limits.max_poset_elements {
        return Err(CliError::Cap(format!(
            "poset has {} elements, over the cap of {} (raise --max-elements)",
            poset.len(),
            limits.max_poset_elements
        )));
    }
    let n_vars = limits.vars.unwrap_or_else(|| poset.total_weight());
    let guard_assignments = || -> Result<(), CliError> {
        let states = (f64::from(n_vars)).powi(poset.len() as i32);
        if states > MAX_ASSIGNMENTS {
            return Err(CliError::Cap(format!(
                "{n_vars}^{} assignments exceed the enumeration budget",
                poset.len()
            )));
        }
        Ok(())
    };
    let labels: Vec<String> = poset.labels().iter().map(|l| l.to_string()).collect();
    let stdout = match action {
        "extensions" => {
            let extensions = poset
                .linear_extensions_capped(limits.max_poset_elements)
                .map_err(|e| CliError::Cap(e.to_string()))?;
            match format {
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "command": "extensions",
                        "count": extensions.len(),
                        "extensions": extensions
                            .iter()
                            .map(|ext| ext.entries().iter().map(|l| l.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    });
                    format!("{value}\n")
                }
                _ => {
                    let mut out = String::new();
                    for ext in &extensions {
                        out.push_str(&format!("{ext}\n"));
                    }
                    out.push_str(&format!("count: {}\n", extensions.len()));
                    out
                }
            }
        }
        "lowersets" => {
            let lower_sets = poset
                .lower_sets_capped(limits.max_poset_elements)
                .map_err(|e| CliError::Cap(e.to_string()))?;
            match format {
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "command": "lowersets",
                        "count": lower_sets.len(),
                        "lower_sets": lower_sets
                            .iter()
                            .map(|set| set.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    });
                    format!("{value}\n")
                }
                _ => {
                    let mut out = String::new();
                    for set in &lower_sets {
                        if set.is_empty() {
                            out.push_str("e\n");
                        } else {
                            let rendered: Vec<&str> =
                                set.iter().map(|&i| labels[i].as_str()).collect();
                            out.push_str(&format!("{}\n", rendered.join(" ")));
                        }
                    }
                    out.push_str(&format!("count: {}\n", lower_sets.len()));
                    out
                }
            }
        }
        "kpartitions" => {
            guard_assignments()?;
            let partitions = enumerate_ppartitions(&poset, n_vars);
            match format {
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "command": "kpartitions",
                        "vars": n_vars,
                        "elements": labels,
                        "count": partitions.len(),
                        "assignments": partitions
                            .iter()
                            .map(|f| f.values().to_vec())
                            .collect::<Vec<_>>(),
                    });
                    format!("{value}\n")
                }
                _ => {
                    let mut out = String::new();
                    for f in &partitions {
                        if f.values().is_empty() {
                            out.push_str("e\n");
                        } else {
                            let rendered: Vec<String> = f
                                .values()
                                .iter()
                                .enumerate()
                                .map(|(i, v)| format!("{}->{v}", labels[i]))
                                .collect();
                            out.push_str(&format!("{}\n", rendered.join(" ")));
                        }
                    }
                    out.push_str(&format!("count: {}\n", partitions.len()));
                    out
                }
            }
        }
        "ktruncate" => {
            guard_assignments()?;
            let poly = k_truncated(&poset, n_vars);
            match format {
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "command": "ktruncate",
                        "vars": n_vars,
                        "polynomial": poly.to_json(),
                    });
                    format!("{value}\n")
                }
                _ => format!("{}\n", poly.render_plain()),
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown poset action `{other}`; expected extensions, lowersets, kpartitions or ktruncate"
            )))
        }
    };
    Ok(CmdOutput::ok(stdout))
}

/// `paper-examples`: replays the built-in worked examples and reports exact
/// matches.
pub fn cmd_paper_examples(format: OutputFormat) -> Result<CmdOutput, CliError> {
    let start = Instant::now();
    let records = worked_examples();
    let report = RunReport::from_checks(
        "paper-examples".to_string(),
        records,
        start.elapsed().as_millis(),
    );
    let exit_code = if report.is_ok() { 0 } else { 1 };
    Ok(CmdOutput {
        stdout: report.render(format),
        exit_code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_golden_outputs() {
        let limits = CliLimits::default();
        let out = cmd_expand("p", "1,1,2", "M", OutputFormat::Plain, limits).unwrap();
        assert_eq!(out.stdout, "2*M[1,1,2] + 1*M[2,2]\n");
        let out = cmd_expand("p", "1,2,1", "F", OutputFormat::Plain, limits).unwrap();
        assert_eq!(out.stdout, "-2*F[1,1,2] + 2*F[1,3]\n");
        let out = cmd_expand("p", "e", "M", OutputFormat::Plain, limits).unwrap();
        assert_eq!(out.stdout, "1*M[e]\n");
        let out = cmd_expand("m", "2,2", "F", OutputFormat::Latex, limits).unwrap();
        assert_eq!(out.stdout, "F_{1111} - F_{112} - F_{211} + F_{22}\n");
        let out = cmd_expand("pr", "1,1", "M", OutputFormat::Json, limits).unwrap();
        assert_eq!(
            out.stdout,
            "{\"basis\":\"M\",\"terms\":[{\"coeff\":{\"den\":1,\"num\":2},\"composition\":[1,1]},{\"coeff\":{\"den\":1,\"num\":1},\"composition\":[2]}]}\n"
        );
    }

    #[test]
    fn expand_errors() {
        let limits = CliLimits::default();
        let err = cmd_expand("x", "1", "M", OutputFormat::Plain, limits).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_expand("p", "1,0", "M", OutputFormat::Plain, limits).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_expand("p", "1,1", "P", OutputFormat::Plain, limits).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_expand("p", "4,4", "M", OutputFormat::Plain, limits).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn verify_small_suites() {
        let out = cmd_verify("refinement", 3, OutputFormat::Plain).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("verify refinement 3: ok"));
        let err = cmd_verify("bogus", 3, OutputFormat::Plain).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_verify("all", 99, OutputFormat::Plain).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn matrices_output() {
        let out = cmd_matrices("R", "1,2,1", "1,3", OutputFormat::Plain).unwrap();
        assert_eq!(out.stdout, ". 1 .\n2 . 1\n\n. . 1\n2 1 .\n\ncount: 2\n");
        let out = cmd_matrices("Rsym", "2,1,1", "4", OutputFormat::Plain).unwrap();
        assert_eq!(out.stdout, "2 1 1\n\ncount: 1\n");
        let out = cmd_matrices("Q", "1,2,1", "1,3", OutputFormat::Json).unwrap();
        assert!(out.stdout.contains("\"count\":2"));
        let err = cmd_matrices("R", "1,2", "1,3", OutputFormat::Plain).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_matrices("Rsym", "1,2", "2,1", OutputFormat::Plain).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn poset_actions() {
        let text = "elements: 1_1, 1_2\ncovers:\n";
        let limits = CliLimits::default();
        let out = cmd_poset("extensions", text, OutputFormat::Plain, limits).unwrap();
        assert_eq!(out.stdout, "1_1 1_2\n1_2 1_1\ncount: 2\n");
        let out = cmd_poset("lowersets", text, OutputFormat::Plain, limits).unwrap();
        assert_eq!(out.stdout, "e\n1_1\n1_2\n1_1 1_2\ncount: 4\n");
        let out = cmd_poset("ktruncate", text, OutputFormat::Plain, limits).unwrap();
        assert_eq!(out.stdout, "1*x1^2 + 2*x1*x2 + 1*x2^2\n");
        let out = cmd_poset("kpartitions", text, OutputFormat::Plain, limits).unwrap();
        assert!(out.stdout.ends_with("count: 4\n"));
        let err = cmd_poset("extensions", "", OutputFormat::Plain, limits).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_poset("bogus", text, OutputFormat::Plain, limits).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn worked_examples_command() {
        let out = cmd_paper_examples(OutputFormat::Plain).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("paper-examples: ok"));
        let json = cmd_paper_examples(OutputFormat::Json).unwrap();
        assert!(json.stdout.starts_with("{\"command\":\"paper-examples\""));
        // JSON output carries no timing, so repeated runs are byte-identical
        let again = cmd_paper_examples(OutputFormat::Json).unwrap();
        assert_eq!(json.stdout, again.stdout);
    }
}
