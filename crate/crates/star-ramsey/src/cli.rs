//! Command execution behind the `star-ramsey` binary.
//!
//! The binary only parses arguments and performs IO; everything else runs
//! through [`run`], which returns the exact bytes for stdout and stderr plus
//! an exit code. That keeps every code path testable in-process and makes
//! the printed artifacts reproducible byte for byte.
//!
//! Exit codes: 0 success (and, for searches, formula and scan agree);
//! 1 a check failed (mono star found, values disagree, criterion failed);
//! 2 unusable request (bad input, unsupported branch, refused scale);
//! 3 search budget exhausted before a verdict.

use serde::Serialize;

use crate::arrow::{
    min_degree_search, ramsey_search, regular_nonarrowing_search, regular_ramsey_search,
    star_critical_search, SearchBudget,
};
use crate::construct::{
    audit_witness, max_nonarrowing_regular_degree, regular_nonarrowing_witness,
    star_critical_witness,
};
use crate::error::{Error, Result};
use crate::formulas::{
    min_degree_threshold_f, ramsey_stars, regular_ramsey_stars, regular_threshold_g,
    star_critical_stars, threshold_chain, Branch,
};
use crate::json::{coloring_from_json, coloring_to_dot, coloring_to_json};
use crate::params::StarParams;
use crate::selftest::{run_all, run_criterion, CriterionOutcome};

pub const ENV_BUDGET_NODES: &str = "STAR_RAMSEY_BUDGET_NODES";
pub const ENV_BUDGET_SECONDS: &str = "STAR_RAMSEY_BUDGET_SECONDS";

/// Node and time caps from flags, falling back to the environment
/// (`STAR_RAMSEY_BUDGET_NODES`, `STAR_RAMSEY_BUDGET_SECONDS`), then to the
/// built-in defaults.
#[derive(Debug, Clone, Copy, Default)]
pub struct BudgetConfig {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl BudgetConfig {
    pub fn resolve(&self) -> SearchBudget {
        let nodes = self
            .max_nodes
            .or_else(|| std::env::var(ENV_BUDGET_NODES).ok()?.parse().ok())
            .unwrap_or(SearchBudget::DEFAULT_MAX_NODES);
        let seconds = self
            .max_seconds
            .or_else(|| std::env::var(ENV_BUDGET_SECONDS).ok()?.parse().ok())
            .unwrap_or(SearchBudget::DEFAULT_MAX_SECONDS);
        SearchBudget::new(nodes, seconds)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    StarCritical,
    Regular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchTarget {
    Ramsey,
    StarCritical,
    Regular,
    MinDegree,
}

impl SearchTarget {
    fn label(self) -> &'static str {
        match self {
            SearchTarget::Ramsey => "ramsey",
            SearchTarget::StarCritical => "star-critical",
            SearchTarget::Regular => "regular",
            SearchTarget::MinDegree => "min-degree",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone)]
pub enum Command {
    Compute {
        params: StarParams,
        n: Option<usize>,
    },
    Construct {
        kind: WitnessKind,
        params: StarParams,
        n: Option<usize>,
        format: OutputFormat,
        budget: BudgetConfig,
    },
    Verify {
        params: StarParams,
        certificate: String,
    },
    Search {
        target: SearchTarget,
        params: StarParams,
        n: Option<usize>,
        n_max: Option<usize>,
        budget: BudgetConfig,
    },
    Selftest {
        id: Option<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
}

/// Printable result of one command: nothing has touched the process yet.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutcome {
    fn ok(stdout: String) -> Self {
        RunOutcome {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted { .. } => 3,
        Error::AuditFailed(_) | Error::ChainViolation(_) => 1,
        _ => 2,
    }
}

/// Executes one parsed command. Never panics on bad input and never prints;
/// the caller decides what to do with the outcome.
pub fn run(config: &RunConfig) -> RunOutcome {
    let result = match &config.command {
        Command::Compute { params, n } => compute(params, *n),
        Command::Construct {
            kind,
            params,
            n,
            format,
            budget,
        } => construct(*kind, params, *n, *format, budget),
        Command::Verify {
            params,
            certificate,
        } => verify(params, certificate),
        Command::Search {
            target,
            params,
            n,
            n_max,
            budget,
        } => search(*target, params, *n, *n_max, budget),
        Command::Selftest { id } => selftest(*id),
    };
    result.unwrap_or_else(|e| RunOutcome {
        exit_code: exit_code_for(&e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

#[derive(Serialize)]
struct ComputeReport<'a> {
    params: &'a StarParams,
    ramsey: usize,
    star_critical: usize,
    regular_ramsey: usize,
    n: usize,
    regular_threshold: usize,
    regular_branch: Branch,
    min_degree_threshold: usize,
    min_degree_branch: Branch,
}

fn compute(params: &StarParams, n: Option<usize>) -> Result<RunOutcome> {
    let (star_critical, regular_ramsey, ramsey) = threshold_chain(params)?;
    let n = n.unwrap_or(ramsey);
    let g = regular_threshold_g(params, n)?;
    let f = min_degree_threshold_f(params, n)?;
    let report = ComputeReport {
        params,
        ramsey,
        star_critical,
        regular_ramsey,
        n,
        regular_threshold: g.value,
        regular_branch: g.branch,
        min_degree_threshold: f.value,
        min_degree_branch: f.branch,
    };
    Ok(RunOutcome::ok(format!(
        "{}\n",
        serde_json::to_string(&report)?
    )))
}

fn construct(
    kind: WitnessKind,
    params: &StarParams,
    n: Option<usize>,
    format: OutputFormat,
    budget: &BudgetConfig,
) -> Result<RunOutcome> {
    let mut stderr = String::new();
    let cert = match kind {
        WitnessKind::StarCritical => star_critical_witness(params)?,
        WitnessKind::Regular => {
            let n = n.unwrap_or_else(|| ramsey_stars(params));
            match regular_nonarrowing_witness(params, n) {
                Ok(c) => c,
                Err(Error::DegenerateBranch(msg)) => {
                    let d = max_nonarrowing_regular_degree(params, n)?;
                    stderr = format!("note: {msg}; falling back to exhaustive search\n");
                    regular_nonarrowing_search(params, n, d, &budget.resolve()).map_err(
                        |e| match e {
                            Error::NotFound(_) => Error::AuditFailed(format!(
                                "no {d}-regular graph on {n} vertices avoids arrowing; \
                                 the threshold claim fails here"
                            )),
                            other => other,
                        },
                    )?
                }
                Err(e) => return Err(e),
            }
        }
    };
    let report = audit_witness(&cert, params)?;
    if !report.star_free {
        return Err(Error::AuditFailed(
            "assembled witness failed its audit; refusing to print it".into(),
        ));
    }
    let stdout = match format {
        OutputFormat::Json => format!("{}\n", coloring_to_json(&cert)),
        OutputFormat::Dot => coloring_to_dot(&cert),
    };
    Ok(RunOutcome {
        exit_code: 0,
        stdout,
        stderr,
    })
}

fn verify(params: &StarParams, certificate: &str) -> Result<RunOutcome> {
    let cert = coloring_from_json(certificate)?;
    let report = audit_witness(&cert, params)?;
    let exit_code = i32::from(!report.star_free);
    Ok(RunOutcome {
        exit_code,
        stdout: format!("{}\n", serde_json::to_string(&report)?),
        stderr: String::new(),
    })
}

#[derive(Serialize)]
struct SearchReport<'a> {
    target: &'static str,
    params: &'a StarParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    formula: usize,
    search: usize,
    agree: bool,
}

fn search(
    target: SearchTarget,
    params: &StarParams,
    n: Option<usize>,
    n_max: Option<usize>,
    budget: &BudgetConfig,
) -> Result<RunOutcome> {
    let budget = budget.resolve();
    let mut report_n = None;
    let (formula, found) = match target {
        SearchTarget::Ramsey => {
            let want = ramsey_stars(params);
            (
                want,
                ramsey_search(params, n_max.unwrap_or(want + 2), &budget)?,
            )
        }
        SearchTarget::StarCritical => (
            star_critical_stars(params),
            star_critical_search(params, &budget)?,
        ),
        SearchTarget::Regular => (
            regular_ramsey_stars(params),
            regular_ramsey_search(params, &budget)?,
        ),
        SearchTarget::MinDegree => {
            let n = n.unwrap_or_else(|| ramsey_stars(params));
            report_n = Some(n);
            (
                min_degree_threshold_f(params, n)?.value,
                min_degree_search(params, n, &budget)?,
            )
        }
    };
    let agree = formula == found;
    let report = SearchReport {
        target: target.label(),
        params,
        n: report_n,
        formula,
        search: found,
        agree,
    };
    Ok(RunOutcome {
        exit_code: i32::from(!agree),
        stdout: format!("{}\n", serde_json::to_string(&report)?),
        stderr: String::new(),
    })
}

fn selftest(id: Option<usize>) -> Result<RunOutcome> {
    let outcomes: Vec<CriterionOutcome> = match id {
        Some(i) => vec![run_criterion(i)?],
        None => run_all(),
    };
    let mut stdout = String::new();
    let mut all_passed = true;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        stdout.push_str(&format!(
            "criterion {} ({}): {} - {}\n",
            o.id, o.name, status, o.detail
        ));
        all_passed &= o.passed;
    }
    Ok(RunOutcome {
        exit_code: i32::from(!all_passed),
        stdout,
        stderr: String::new(),
    })
}
