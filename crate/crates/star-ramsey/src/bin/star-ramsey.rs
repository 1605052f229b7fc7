use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use star_ramsey::cli::{
    run, BudgetConfig, Command, OutputFormat, RunConfig, SearchTarget, WitnessKind,
};
use star_ramsey::StarParams;

/// Star Ramsey thresholds, extremal witnesses, and exact arrowing search.
#[derive(Parser)]
#[command(name = "star-ramsey", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print every closed-form threshold for one parameter list
    Compute {
        /// Star sizes, comma separated, e.g. 2,2,3
        #[arg(long)]
        params: StarParams,
        /// Order for the degree thresholds (defaults to the Ramsey number)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build an extremal witness coloring and print its certificate
    Construct {
        #[command(subcommand)]
        kind: ConstructCmd,
    },
    /// Check a certificate (JSON, from a file or stdin) against the stars
    Verify {
        #[arg(long)]
        params: StarParams,
        /// Certificate path; reads stdin when omitted
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Re-derive a threshold by exhaustive search and compare with the formula
    Search {
        #[command(subcommand)]
        target: SearchCmd,
    },
    /// Run the built-in verification suite
    Selftest {
        /// Run a single criterion (1 through 9) instead of all of them
        #[arg(long)]
        id: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Coloring of the complete graph minus a small star at vertex 0
    StarCritical {
        #[arg(long)]
        params: StarParams,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Coloring of a largest-degree regular graph that avoids arrowing
    Regular {
        #[arg(long)]
        params: StarParams,
        /// Host order (defaults to the Ramsey number)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Least complete-graph order that arrows
    Ramsey {
        #[arg(long)]
        params: StarParams,
        /// Stop scanning beyond this order
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Least kept degree at one vertex of the critical complete graph
    StarCritical {
        #[arg(long)]
        params: StarParams,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Least regular degree from which every regular graph arrows
    Regular {
        #[arg(long)]
        params: StarParams,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Least minimum degree that forces arrowing on n vertices
    MinDegree {
        #[arg(long)]
        params: StarParams,
        /// Host order (defaults to the Ramsey number)
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Cap on backtracking nodes per decision
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Cap in seconds per decision
    #[arg(long)]
    max_seconds: Option<f64>,
}

impl From<BudgetArgs> for BudgetConfig {
    fn from(b: BudgetArgs) -> Self {
        BudgetConfig {
            max_nodes: b.max_nodes,
            max_seconds: b.max_seconds,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Default)]
enum FormatArg {
    #[default]
    Json,
    Dot,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Dot => OutputFormat::Dot,
        }
    }
}

fn read_certificate(input: Option<PathBuf>) -> std::io::Result<String> {
    match input {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Compute { params, n } => Command::Compute { params, n },
        Cmd::Construct { kind } => match kind {
            ConstructCmd::StarCritical { params, format } => Command::Construct {
                kind: WitnessKind::StarCritical,
                params,
                n: None,
                format: format.into(),
                budget: BudgetConfig::default(),
            },
            ConstructCmd::Regular {
                params,
                n,
                format,
                budget,
            } => Command::Construct {
                kind: WitnessKind::Regular,
                params,
                n,
                format: format.into(),
                budget: budget.into(),
            },
        },
        Cmd::Verify { params, input } => {
            let certificate = match read_certificate(input) {
                Ok(text) => text,
                Err(e) => {
                    eprintln!("error: {e}");
                    std::process::exit(2);
                }
            };
            Command::Verify {
                params,
                certificate,
            }
        }
        Cmd::Search { target } => match target {
            SearchCmd::Ramsey {
                params,
                n_max,
                budget,
            } => Command::Search {
                target: SearchTarget::Ramsey,
                params,
                n: None,
                n_max,
                budget: budget.into(),
            },
            SearchCmd::StarCritical { params, budget } => Command::Search {
                target: SearchTarget::StarCritical,
                params,
                n: None,
                n_max: None,
                budget: budget.into(),
            },
            SearchCmd::Regular { params, budget } => Command::Search {
                target: SearchTarget::Regular,
                params,
                n: None,
                n_max: None,
                budget: budget.into(),
            },
            SearchCmd::MinDegree { params, n, budget } => Command::Search {
                target: SearchTarget::MinDegree,
                params,
                n,
                n_max: None,
                budget: budget.into(),
            },
        },
        Cmd::Selftest { id } => Command::Selftest { id },
    };
    let outcome = run(&RunConfig { command });
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.exit_code);
}
