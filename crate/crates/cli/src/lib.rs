//! Argument parsing and command execution for the `primefree` binary.
//!
//! Exit codes: 0 for an INFINITE decision or any other success, 1 for a
//! FINITE decision or a certificate that does not verify, 2 for usage
//! errors and 3 for runtime failures.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use primefree::census::{run_census_with, CensusOptions};
use primefree::chains::{chain_to_string, string_to_graph, BitString};
use primefree::decider::{decide, pattern_bound_n, DecideOptions, Decision, Outcome, PeriodCap};
use primefree::families::{generate_family, FamilyKind};
use primefree::graph::Graph;
use primefree::graph6::{parse_graph6, parse_graph6_lines, write_graph6};
use primefree::primality::find_homogeneous_set;
use primefree::representations::{enumerate_representations, string_contains_graph};
use primefree::routes::route_by_name;
use serde_json::json;

pub const EXIT_INFINITE: i32 = 0;
pub const EXIT_FINITE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

const DEFAULT_MAX_ORDER: usize = 12;

/// Decisions at `n >= 5` scan `4^n`-ish strings under the stated cap.
const EXPONENTIAL_N: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "primefree", version, about = "Prime graphs in classes defined by forbidden induced subgraphs")]
struct Cli {
    /// File of forbidden graphs, one graph6 word per line.
    #[arg(short = 'f', long = "forbidden", global = true, value_name = "FILE")]
    forbidden: Option<PathBuf>,

    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Longest period scanned by `decide`: stated, proof, or a positive integer.
    #[arg(long, global = true, value_name = "CAP")]
    period_cap: Option<String>,

    /// Largest order examined by `census`.
    #[arg(long, global = true, value_name = "INT")]
    max_order: Option<usize>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "INT")]
    threads: Option<usize>,

    /// Allow decisions whose string scan is exponential in n (n >= 5).
    #[arg(long, global = true)]
    acknowledge_exponential: bool,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Decide whether the class has infinitely many prime graphs.
    Decide,
    /// List the prime graphs of the class order by order.
    Census,
    /// Test graphs for primality and show a homogeneous set when there is one.
    PrimeCheck {
        /// graph6 words; read from --forbidden when absent.
        graphs: Vec<String>,
    },
    /// Print a member of one of the unavoidable prime families.
    Family { kind: String, n: usize },
    /// Print the graph induced by the chain of a binary string.
    ChainDecode { string: String },
    /// Print the string of a chain, given as a vertex order.
    ChainEncode {
        graph: String,
        /// Comma-separated vertex order (default: 0, 1, ..).
        #[arg(long)]
        order: Option<String>,
    },
    /// List every representation of a graph.
    Reps { graph: String },
    /// Whether the chain of a string contains a graph as an induced subgraph.
    Contains {
        graph: String,
        string: String,
        /// direct, representations, or auto.
        #[arg(long, default_value = "auto")]
        route: String,
    },
    /// Check a JSON decision against the forbidden set.
    Verify {
        /// JSON file produced by `decide --json`.
        certificate: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandPlan {
    pub command: Command,
    pub json: bool,
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Decide {
        forbidden: PathBuf,
        period_cap: PeriodCap,
        acknowledge_exponential: bool,
    },
    Census {
        forbidden: PathBuf,
        max_order: usize,
    },
    PrimeCheck(GraphSource),
    Family {
        kind: FamilyKind,
        n: usize,
    },
    ChainDecode(BitString),
    ChainEncode {
        graph: Graph,
        order: Option<Vec<usize>>,
    },
    Reps(Graph),
    Contains {
        graph: Graph,
        string: BitString,
        route: Option<String>,
    },
    Verify {
        forbidden: PathBuf,
        certificate: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    Words(Vec<Graph>),
    File(PathBuf),
}

/// A parse failure. `code` is 0 for `--help` and `--version`.
#[derive(Debug)]
pub struct UsageError {
    pub message: String,
    pub code: i32,
}

impl UsageError {
    fn new(message: impl Into<String>) -> UsageError {
        UsageError {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }
}

pub fn parse_args<I, T>(argv: I) -> Result<CommandPlan, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError {
        message: e.render().to_string(),
        code: if e.use_stderr() { EXIT_USAGE } else { 0 },
    })?;

    if cli.threads == Some(0) {
        return Err(UsageError::new("--threads must be at least 1"));
    }
    let is_decide = matches!(cli.command, Sub::Decide);
    let is_census = matches!(cli.command, Sub::Census);
    if cli.period_cap.is_some() && !is_decide {
        return Err(UsageError::new("--period-cap only applies to `decide`"));
    }
    if cli.acknowledge_exponential && !is_decide {
        return Err(UsageError::new("--acknowledge-exponential only applies to `decide`"));
    }
    if cli.max_order.is_some() && !is_census {
        return Err(UsageError::new("--max-order only applies to `census`"));
    }
    let uses_file = matches!(cli.command, Sub::Decide | Sub::Census | Sub::Verify { .. })
        || matches!(&cli.command, Sub::PrimeCheck { graphs } if graphs.is_empty());
    if cli.forbidden.is_some() && !uses_file {
        return Err(UsageError::new("--forbidden does not apply to this subcommand"));
    }
    let forbidden = || -> Result<PathBuf, UsageError> {
        let path = cli
            .forbidden
            .clone()
            .ok_or_else(|| UsageError::new("missing --forbidden FILE"))?;
        existing(path)
    };

    let command = match cli.command {
        Sub::Decide => Command::Decide {
            forbidden: forbidden()?,
            period_cap: match &cli.period_cap {
                Some(text) => text.parse().map_err(|e| UsageError::new(format!("--period-cap: {e}")))?,
                None => PeriodCap::default(),
            },
            acknowledge_exponential: cli.acknowledge_exponential,
        },
        Sub::Census => {
            let max_order = cli.max_order.unwrap_or(DEFAULT_MAX_ORDER);
            if max_order <= primefree::census::SEED_ORDER {
                return Err(UsageError::new(format!(
                    "--max-order must be at least {}",
                    primefree::census::SEED_ORDER + 1
                )));
            }
            Command::Census {
                forbidden: forbidden()?,
                max_order,
            }
        }
        Sub::PrimeCheck { graphs } => {
            if graphs.is_empty() {
                Command::PrimeCheck(GraphSource::File(forbidden()?))
            } else {
                Command::PrimeCheck(GraphSource::Words(
                    graphs.iter().map(|w| graph_arg(w)).collect::<Result<_, _>>()?,
                ))
            }
        }
        Sub::Family { kind, n } => Command::Family {
            kind: kind.parse().map_err(|e| UsageError::new(format!("{e}")))?,
            n: if n >= 3 {
                n
            } else {
                return Err(UsageError::new(format!("n must be at least 3, got {n}")));
            },
        },
        Sub::ChainDecode { string } => Command::ChainDecode(string_arg(&string)?),
        Sub::ChainEncode { graph, order } => Command::ChainEncode {
            graph: graph_arg(&graph)?,
            order: order.map(|o| order_arg(&o)).transpose()?,
        },
        Sub::Reps { graph } => Command::Reps(graph_arg(&graph)?),
        Sub::Contains { graph, string, route } => Command::Contains {
            graph: graph_arg(&graph)?,
            string: string_arg(&string)?,
            route: match route.as_str() {
                "auto" => None,
                name => {
                    route_by_name(name).map_err(|e| UsageError::new(format!("{e}")))?;
                    Some(name.to_string())
                }
            },
        },
        Sub::Verify { certificate } => Command::Verify {
            forbidden: forbidden()?,
            certificate: existing(certificate)?,
        },
    };
    Ok(CommandPlan {
        command,
        json: cli.json,
        threads: cli.threads,
    })
}

fn existing(path: PathBuf) -> Result<PathBuf, UsageError> {
    if path.is_file() {
        Ok(path)
    } else {
        Err(UsageError::new(format!("no such file: {}", path.display())))
    }
}

fn graph_arg(word: &str) -> Result<Graph, UsageError> {
    parse_graph6(word).map_err(|e| UsageError::new(format!("`{word}`: {e}")))
}

fn string_arg(text: &str) -> Result<BitString, UsageError> {
    text.parse().map_err(|e| UsageError::new(format!("`{text}`: {e}")))
}

fn order_arg(text: &str) -> Result<Vec<usize>, UsageError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| UsageError::new(format!("bad vertex `{t}` in --order")))
        })
        .collect()
}

/// A failure while running a parsed plan.
#[derive(Debug)]
pub enum RunError {
    Usage(String),
    Runtime(String),
}

impl From<primefree::Error> for RunError {
    fn from(e: primefree::Error) -> RunError {
        RunError::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> RunError {
        RunError::Runtime(e.to_string())
    }
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>, RunError> {
    let text = fs::read_to_string(path).map_err(|e| RunError::Runtime(format!("{}: {e}", path.display())))?;
    parse_graph6_lines(&text).map_err(|e| RunError::Runtime(format!("{}: {e}", path.display())))
}

fn g6(g: &Graph) -> Result<String, RunError> {
    Ok(write_graph6(g)?)
}

/// Runs `plan`, writing results to `out`. Returns the exit code.
pub fn run(plan: &CommandPlan, out: &mut dyn Write) -> Result<i32, RunError> {
    match &plan.command {
        Command::Decide {
            forbidden,
            period_cap,
            acknowledge_exponential,
        } => {
            let patterns = read_graphs(forbidden)?;
            let n = pattern_bound_n(&patterns)?;
            if n >= EXPONENTIAL_N && !acknowledge_exponential && *period_cap != PeriodCap::Proof {
                return Err(RunError::Usage(format!(
                    "n = {n}: the string scan is exponential in n; pass --acknowledge-exponential \
                     or --period-cap proof"
                )));
            }
            let options = DecideOptions {
                period_cap: *period_cap,
                threads: plan.threads,
            };
            let decision = decide(&patterns, &options)?;
            if plan.json {
                writeln!(out, "{}", decision.to_json())?;
            } else {
                write_decision(&decision, out)?;
            }
            Ok(match decision.outcome {
                Outcome::Infinite => EXIT_INFINITE,
                Outcome::Finite => EXIT_FINITE,
            })
        }
        Command::Census { forbidden, max_order } => {
            let patterns = read_graphs(forbidden)?;
            let mut options = CensusOptions::new(*max_order);
            options.threads = plan.threads;
            let result = run_census_with(&patterns, &options)?;
            if plan.json {
                let mut by_order = serde_json::Map::new();
                for (k, list) in &result.by_order {
                    let words = list.iter().map(g6).collect::<Result<Vec<_>, _>>()?;
                    by_order.insert(k.to_string(), json!(words));
                }
                let doc = json!({
                    "halted": result.halted,
                    "last_order": result.last_order,
                    "by_order": by_order,
                });
                writeln!(out, "{doc}")?;
            } else {
                for (k, list) in &result.by_order {
                    writeln!(out, "# order {k} (count {})", list.len())?;
                    for g in list {
                        writeln!(out, "{}", g6(g)?)?;
                    }
                }
                if result.halted {
                    writeln!(out, "# halted after order {}", result.last_order)?;
                } else {
                    writeln!(out, "# stopped at order {} without halting", result.last_order)?;
                }
            }
            Ok(0)
        }
        Command::PrimeCheck(source) => {
            let graphs = match source {
                GraphSource::Words(gs) => gs.clone(),
                GraphSource::File(path) => read_graphs(path)?,
            };
            let mut rows = Vec::new();
            for g in &graphs {
                let witness = find_homogeneous_set(g).map(|w| w.members.to_vec());
                if plan.json {
                    rows.push(json!({
                        "graph": g6(g)?,
                        "prime": witness.is_none(),
                        "homogeneous_set": witness,
                    }));
                } else {
                    match witness {
                        None => writeln!(out, "{}\tprime", g6(g)?)?,
                        Some(set) => writeln!(out, "{}\tnot prime\t{}", g6(g)?, join(&set))?,
                    }
                }
            }
            if plan.json {
                writeln!(out, "{}", serde_json::Value::Array(rows))?;
            }
            Ok(0)
        }
        Command::Family { kind, n } => {
            let g = generate_family(*kind, *n)?;
            if plan.json {
                writeln!(out, "{}", json!({"kind": kind, "n": n, "graph": g6(&g)?}))?;
            } else {
                writeln!(out, "{}", g6(&g)?)?;
            }
            Ok(0)
        }
        Command::ChainDecode(s) => {
            let g = string_to_graph(s)?;
            if plan.json {
                writeln!(out, "{}", json!({"string": s.to_string(), "graph": g6(&g)?}))?;
            } else {
                writeln!(out, "{}", g6(&g)?)?;
            }
            Ok(0)
        }
        Command::ChainEncode { graph, order } => {
            let order = order.clone().unwrap_or_else(|| (0..graph.order()).collect());
            let s = chain_to_string(graph, &order)?;
            if plan.json {
                writeln!(out, "{}", json!({"order": order, "string": s.to_string()}))?;
            } else {
                writeln!(out, "{s}")?;
            }
            Ok(0)
        }
        Command::Reps(g) => {
            let reps = enumerate_representations(g)?;
            if plan.json {
                let words: Vec<&str> = reps.iter().map(|r| r.as_str()).collect();
                writeln!(out, "{}", json!(words))?;
            } else {
                for r in &reps {
                    writeln!(out, "{}", r.as_str())?;
                }
            }
            Ok(0)
        }
        Command::Contains { graph, string, route } => {
            let found = match route {
                Some(name) => route_by_name(name)?.contains(graph, string)?,
                None => string_contains_graph(graph, string)?,
            };
            if plan.json {
                writeln!(out, "{}", json!({"contains": found}))?;
            } else {
                writeln!(out, "{}", if found { "yes" } else { "no" })?;
            }
            Ok(0)
        }
        Command::Verify { forbidden, certificate } => {
            let patterns = read_graphs(forbidden)?;
            let text = fs::read_to_string(certificate)
                .map_err(|e| RunError::Runtime(format!("{}: {e}", certificate.display())))?;
            let decision = Decision::from_json(text.trim())?;
            let valid = decision.verify(&patterns)?;
            if plan.json {
                writeln!(out, "{}", json!({"valid": valid}))?;
            } else {
                writeln!(out, "{}", if valid { "valid" } else { "invalid" })?;
            }
            Ok(if valid { 0 } else { 1 })
        }
    }
}

fn write_decision(d: &Decision, out: &mut dyn Write) -> Result<(), RunError> {
    writeln!(out, "{} (n = {})", d.outcome, d.n)?;
    match &d.certificate {
        Some(primefree::Certificate::Family { kind, n }) => {
            writeln!(out, "certificate: {kind} at n = {n} is prime and avoids every forbidden graph")?
        }
        Some(primefree::Certificate::PeriodicChain { period, power_checked }) => writeln!(
            out,
            "certificate: every power of {period} is free (checked up to power {power_checked})"
        )?,
        None => {}
    }
    if let Some(b) = &d.bounds {
        writeln!(out, "no chain of length {} avoids the forbidden graphs", b.chain_length)?;
    }
    Ok(())
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
