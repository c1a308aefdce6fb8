use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use hist::conditions::condition_report;
use hist::hist::{check_hist, oracle_enumerate, SpanningTree, DEFAULT_BUDGET, DEFAULT_CAP};
use hist::io::{encode_graph, parse_graph, parse_tree_edges, Format};
use hist::obstructions::{generate_h, match_family, Family};
use hist::sampling::gnp;
use hist::solve::{solve, Method, SolveOptions, Status};
use hist::sweep::{atlas_sweep, random_sweep, SweepLimits};
use hist::Graph;

/// Decide, construct and verify homeomorphically irreducible spanning trees.
#[derive(Parser)]
#[command(name = "hist", version)]
struct Cli {
    /// Graph format; inferred from the extension (.g6, .el) when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Human-readable summary on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    /// Include wall-clock times in the JSON output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    #[value(alias = "g6")]
    Graph6,
    #[value(alias = "el")]
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edgelist => Format::Edgelist,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Constructive,
    Exact,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    H1,
    H2,
    H3,
    Gnp,
    Clique,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMode {
    Atlas,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Print the condition report and obstruction report of a graph.
    Check { path: PathBuf },
    /// Decide whether a graph has a HIST.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that a tree file is a HIST of a graph; exit 1 if not.
    Verify { graph: PathBuf, tree: PathBuf },
    /// Print a generated graph.
    Gen {
        family: GenFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// H3 only: attach the triangle vertex to the second clique's contact.
        #[arg(long)]
        coincide: bool,
    },
    /// Count spanning trees and HISTs exhaustively.
    Oracle {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Run a batch over the atlas of small graphs or random samples.
    Sweep {
        /// Defaults to 7 in atlas mode and 10 in random mode.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value = "atlas")]
        mode: SweepMode,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit statuses.
const OK: u8 = 0;
const REJECTED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const UNKNOWN: u8 = 3;

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn read_graph(path: &Path, format: Option<FormatArg>) -> Result<Graph, Failure> {
    let format = match format {
        Some(f) => f.into(),
        None => Format::from_path(path).ok_or_else(|| {
            Failure(format!(
                "{}: cannot infer the format; use a .g6 or .el extension or --format",
                path.display()
            ))
        })?,
    };
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_graph(&text, format).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let started = Instant::now();
    let elapsed = || started.elapsed().as_millis() as u64;
    match cli.command {
        Command::Check { path } => {
            let g = read_graph(&path, cli.format)?;
            let report = condition_report(&g)?;
            let obstruction = match_family(&g);
            if cli.verbose {
                eprintln!(
                    "n = {}, m = {}, δ = {}, σ = {}, NC = {}, obstruction {:?}",
                    report.n, report.m, report.delta, report.sigma, report.nc, obstruction.kind
                );
            }
            print_json(&json!({ "report": report, "obstruction": obstruction }));
            Ok(OK)
        }
        Command::Solve {
            path,
            method,
            budget,
            seed,
        } => {
            let g = read_graph(&path, cli.format)?;
            let opts = SolveOptions {
                method: match method {
                    MethodArg::Auto => Method::Auto,
                    MethodArg::Constructive => Method::Constructive,
                    MethodArg::Exact => Method::Exact,
                    MethodArg::Greedy => Method::Greedy,
                },
                budget,
                seed,
                ..SolveOptions::default()
            };
            let mut r = solve(&g, &opts)?;
            if cli.timing {
                r.stats.elapsed_ms = Some(elapsed());
            }
            if cli.verbose {
                eprintln!(
                    "{:?} by {:?} after {} search nodes",
                    r.status, r.method, r.stats.nodes_explored
                );
            }
            print_json(&r);
            Ok(if r.status == Status::Unknown { UNKNOWN } else { OK })
        }
        Command::Verify { graph, tree } => {
            let g = read_graph(&graph, cli.format)?;
            let text =
                fs::read_to_string(&tree).map_err(|e| Failure(format!("{}: {e}", tree.display())))?;
            let edges = parse_tree_edges(&text).map_err(|e| Failure(format!("{}: {e}", tree.display())))?;
            match check_hist(&g, &SpanningTree::new(g.n(), edges)) {
                Ok(()) => {
                    print_json(&json!({ "valid": true }));
                    Ok(OK)
                }
                Err(defect) => {
                    if cli.verbose {
                        eprintln!("not a HIST: {defect}");
                    }
                    print_json(&json!({ "valid": false, "reason": defect.to_string() }));
                    Ok(REJECTED)
                }
            }
        }
        Command::Gen {
            family,
            n,
            p,
            seed,
            coincide,
        } => {
            let g = match family {
                GenFamily::H1 => generate_h(Family::H1, n, coincide)?,
                GenFamily::H2 => generate_h(Family::H2, n, coincide)?,
                GenFamily::H3 => generate_h(Family::H3, n, coincide)?,
                GenFamily::Gnp => gnp(n, p, seed)?,
                GenFamily::Clique => Graph::complete(n),
            };
            let format = cli.format.map_or(Format::Edgelist, Format::from);
            print!("{}", encode_graph(&g, format));
            Ok(OK)
        }
        Command::Oracle { path, cap } => {
            let g = read_graph(&path, cli.format)?;
            let outcome = oracle_enumerate(&g, cap)?;
            if cli.verbose {
                eprintln!("{outcome:?}");
            }
            print_json(&outcome);
            Ok(OK)
        }
        Command::Sweep {
            n_max,
            mode,
            samples,
            seed,
        } => {
            let mut value = match mode {
                SweepMode::Atlas => {
                    let s = atlas_sweep(n_max.unwrap_or(7), SweepLimits::default())?;
                    if cli.verbose {
                        for o in &s.orders {
                            eprintln!(
                                "n = {}: {} graphs, {} with HIST, {} disagreements",
                                o.n, o.graphs, o.with_hist, o.disagree
                            );
                        }
                    }
                    serde_json::to_value(s)?
                }
                SweepMode::Random => {
                    let limits = SweepLimits {
                        cap: DEFAULT_CAP,
                        ..SweepLimits::default()
                    };
                    let s = random_sweep(samples, n_max.unwrap_or(10), seed, limits)?;
                    if cli.verbose {
                        eprintln!("{} samples, {} violations", s.samples, s.violations.len());
                    }
                    serde_json::to_value(s)?
                }
            };
            if cli.timing {
                value["elapsed_ms"] = json!(elapsed());
            }
            print_json(&value);
            Ok(OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
