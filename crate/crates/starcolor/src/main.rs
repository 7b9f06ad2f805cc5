//! Command-line front end.
//!
//! Exit codes: 0 success, 1 semantic failure (invalid coloring or refuted
//! claim), 2 usage or parse error, 3 budget exhaustion.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use starcolor::certify::{certify, CertifyOptions, ClaimStatus};
use starcolor::construct::four_star_coloring;
use starcolor::dot::to_dot;
use starcolor::error::Error;
use starcolor::search::{enumerate_star_colorings, star_chromatic_number, SolveOptions};
use starcolor::verify::check_star_coloring;
use starcolor::{cycle, path, splitting_graph, Coloring, Graph};

#[derive(Parser)]
#[command(name = "starcolor", version, about = "Construct, verify, and exactly solve star colorings of cycles and their splitting graphs")]
struct Cli {
    /// Maximum attempted assignments per (graph, k) search.
    #[arg(long, global = true, default_value_t = 1_000_000_000)]
    node_budget: u64,

    /// Wall-clock limit per (graph, k) search, in seconds.
    #[arg(long = "time-budget-s", global = true, default_value_t = 600)]
    time_budget_s: u64,

    /// Worker threads for the exact searches. Results are identical for
    /// every worker count.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Write primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Emit compact JSON instead of pretty-printed.
    #[arg(long, global = true)]
    minify: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Path,
    SplittingCycle,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph file.
    Gen { family: Family, n: usize },
    /// Check a coloring file against a graph file.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Compute the star chromatic number exactly.
    Chi { graph: PathBuf },
    /// Enumerate every star coloring with k colors.
    Enumerate {
        graph: PathBuf,
        /// Palette size k.
        #[arg(long)]
        colors: u32,
        /// Keep one representative per vertex-colored-isomorphism class.
        #[arg(long)]
        dedup: bool,
    },
    /// Emit the explicit 4-star-coloring of splitting_graph(cycle(n)) as a
    /// graph/coloring JSON pair.
    Construct {
        n: usize,
        /// Also write a DOT rendering of the colored graph here.
        #[arg(long)]
        dot_out: Option<PathBuf>,
    },
    /// Run the claim registry (default: all claims) and write a report.
    Certify { claims: Vec<String> },
    /// Render a graph (optionally colored) as Graphviz DOT.
    ExportDot {
        graph: PathBuf,
        coloring: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    ExitCode::from(code)
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter(_) | Error::InvalidInput(_) => 2,
            Error::BudgetExhausted { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let solve_opts = SolveOptions {
        node_budget: cli.node_budget,
        time_budget: Duration::from_secs(cli.time_budget_s),
        workers: cli.workers.max(1),
    };
    match &cli.cmd {
        Cmd::Gen { family, n } => {
            let g = match family {
                Family::Cycle => cycle(*n)?,
                Family::Path => path(*n)?,
                Family::SplittingCycle => splitting_graph(&cycle(*n)?)?,
            };
            emit(&cli, &g)?;
            Ok(0)
        }
        Cmd::Verify { graph, coloring } => {
            let g: Graph = load(graph)?;
            let c: Coloring = load(coloring)?;
            match check_star_coloring(&g, &c)? {
                None => {
                    eprintln!("valid star coloring ({} colors)", c.num_colors());
                    Ok(0)
                }
                Some(witness) => {
                    emit(&cli, &witness)?;
                    Ok(1)
                }
            }
        }
        Cmd::Chi { graph } => {
            let g: Graph = load(graph)?;
            match star_chromatic_number(&g, &solve_opts) {
                Ok(report) => {
                    emit(&cli, &report)?;
                    Ok(0)
                }
                Err(Error::BudgetExhausted { nodes, infeasible }) => {
                    emit(
                        &cli,
                        &json!({
                            "error": "budget-exhausted",
                            "infeasible": infeasible,
                            "nodes": nodes,
                        }),
                    )?;
                    Ok(3)
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Enumerate {
            graph,
            colors,
            dedup,
        } => {
            let g: Graph = load(graph)?;
            let found = enumerate_star_colorings(&g, *colors, *dedup, &solve_opts)?;
            emit(
                &cli,
                &json!({
                    "colorings": found,
                    "count": found.len(),
                }),
            )?;
            Ok(0)
        }
        Cmd::Construct { n, dot_out } => {
            let c = four_star_coloring(*n)?;
            let g = c.graph();
            if let Some(dot_path) = dot_out {
                fs::write(dot_path, to_dot(&g, Some(&c.coloring))?).map_err(Failure::from)?;
            }
            emit(
                &cli,
                &json!({
                    "coloring": c.coloring,
                    "graph": g,
                }),
            )?;
            Ok(0)
        }
        Cmd::Certify { claims } => {
            let opts = CertifyOptions {
                solve: solve_opts,
                ..CertifyOptions::default()
            };
            let report = certify(claims, &opts)?;
            for claim in &report.claims {
                let status = match claim.status {
                    ClaimStatus::Certified => "certified",
                    ClaimStatus::Refuted => "REFUTED",
                    ClaimStatus::BudgetExhausted => "budget-exhausted",
                };
                eprintln!("{:<10} {status} ({} ms)", claim.id, claim.elapsed_ms);
            }
            emit(&cli, &report)?;
            if report.all_certified() {
                Ok(0)
            } else if report.any_refuted() {
                Ok(1)
            } else {
                Ok(3)
            }
        }
        Cmd::ExportDot { graph, coloring } => {
            let g: Graph = load(graph)?;
            let c: Option<Coloring> = match coloring {
                Some(p) => Some(load(p)?),
                None => None,
            };
            let dot = to_dot(&g, c.as_ref())?;
            write_out(&cli, dot.as_bytes())?;
            Ok(0)
        }
    }
}

fn load<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    serde_json::from_str(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit<T: Serialize>(cli: &Cli, value: &T) -> Result<(), Failure> {
    let mut text = if cli.minify {
        serde_json::to_string(value)
    } else {
        serde_json::to_string_pretty(value)
    }
    .map_err(|e| Failure {
        code: 2,
        message: e.to_string(),
    })?;
    text.push('\n');
    write_out(cli, text.as_bytes())
}

fn write_out(cli: &Cli, bytes: &[u8]) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, bytes).map_err(Failure::from),
        None => {
            std::io::stdout().write_all(bytes).map_err(Failure::from)?;
            Ok(())
        }
    }
}
