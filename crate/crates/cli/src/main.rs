//! `brooks`: command-line access to the colorings, orientations, kernels and
//! oracles in `brooks-core`. Every command prints one JSON report on stdout
//! and a short summary on stderr.
//!
//! Exit codes: 0 success, 1 well-formed negative answer, 2 bad input (also
//! an oracle asked to exceed its size limit), 3 broken internal contract.

mod commands;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Map;

use brooks_core::generate::{generate, GraphKind};
use brooks_core::io::{
    encode_dimacs, encode_graph6, parse_dimacs, parse_graph6, parse_lists_json, parse_partition_json,
    parse_vertex_map_json,
};
use brooks_core::{Error, Graph, ListAssignment, Result, VertexSet};

use commands::{Ctx, Outcome, PainterKind};
use report::{ErrorReport, ExitKind, InputSummary, RunReport, SCHEMA};

#[derive(Parser)]
#[command(name = "brooks", version, about = "Certified Brooks colorings and list colorings")]
struct Cli {
    /// Print colors 1-based. Input and vertex ids are unaffected.
    #[arg(long, global = true)]
    one_based: bool,
    /// Corrupt the computed coloring before self-verification (testing aid).
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
    Graph6,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file; stdin when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Input format; guessed from the extension or the content when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Brooks coloring with at most max{3, ω, Δ} colors.
    Color {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Coloring from lists of at least the Brooks bound.
    ListColor {
        #[command(flatten)]
        graph: GraphInput,
        /// JSON object mapping vertex ids to color arrays.
        #[arg(long)]
        lists: PathBuf,
    },
    /// Orientation with in-degree at least g(v), or a violating set.
    Orient {
        #[command(flatten)]
        graph: GraphInput,
        /// JSON object mapping vertex ids to demands.
        #[arg(long)]
        demands: PathBuf,
    },
    /// Kernel of an AB digraph, optionally followed by list coloring.
    Kernel {
        #[command(flatten)]
        graph: GraphInput,
        /// JSON `{"A":[ids]}` with optional `"heads":[[u,v,head],...]`;
        /// cross edges point into A by default.
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        lists: Option<PathBuf>,
    },
    /// Induced subgraph with a kernel-perfect orientation certifying
    /// f_H-choosability.
    Witness {
        #[command(flatten)]
        graph: GraphInput,
        /// JSON object mapping vertex ids to f(v).
        #[arg(long)]
        f: PathBuf,
        /// JSON `{"A":[ids]}`; chosen automatically when absent.
        #[arg(long = "A", alias = "a")]
        a: Option<PathBuf>,
    },
    /// Lister/Painter game outcome.
    Paint {
        #[command(flatten)]
        graph: GraphInput,
        /// JSON object mapping vertex ids to token counts.
        #[arg(long)]
        tokens: PathBuf,
        #[arg(long, value_enum, default_value = "minimax")]
        painter: PainterKind,
        /// AB partition for the kernel painter.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Exhaustive oracles for small graphs.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Checks a coloring given as a JSON vertex map.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        lists: Option<PathBuf>,
    },
    /// Seeded graph generator.
    Gen {
        /// cycle N | path N | complete N | complete_bipartite A B | petersen |
        /// cube | random_regular N D | erdos_renyi N P
        kind: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print only the graph in this format instead of a report.
        #[arg(long, value_enum)]
        emit: Option<Format>,
    },
    /// Throughput of color and list-color on random regular graphs.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "16,32,64")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        seeds: u64,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    Chi {
        #[command(flatten)]
        graph: GraphInput,
    },
    Omega {
        #[command(flatten)]
        graph: GraphInput,
    },
    Choosable {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        sizes: Sizes,
    },
    Paintable {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        sizes: Sizes,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Sizes {
    /// JSON object mapping vertex ids to list sizes or tokens.
    #[arg(long)]
    f: Option<PathBuf>,
    /// The same size for every vertex.
    #[arg(long)]
    k: Option<usize>,
}

impl Sizes {
    fn resolve(&self, n: usize) -> Result<Vec<usize>> {
        match (&self.f, self.k) {
            (Some(path), _) => parse_vertex_map_json(&read(path)?, n),
            (None, Some(k)) => Ok(vec![k; n]),
            (None, None) => Err(Error::InvalidInput("give --f or --k".into())),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(input: &GraphInput, warnings: &mut Vec<String>) -> Result<Graph> {
    let text = match &input.input {
        Some(path) => read(path)?,
        None => std::io::read_to_string(std::io::stdin())
            .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?,
    };
    let by_extension = input.input.as_ref().and_then(|p| {
        match p.extension()?.to_str()? {
            "g6" | "graph6" => Some(Format::Graph6),
            "col" | "dimacs" => Some(Format::Dimacs),
            _ => None,
        }
    });
    let format = input.format.or(by_extension).unwrap_or_else(|| {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        if first.starts_with("p ") || first.starts_with("c ") || first == "c" {
            Format::Dimacs
        } else {
            Format::Graph6
        }
    });
    match format {
        Format::Dimacs => {
            let (g, w) = parse_dimacs(&text)?;
            warnings.extend(w);
            Ok(g)
        }
        Format::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            parse_graph6(line)
        }
    }
}

fn parse_kind(kind: &str, params: &[String]) -> Result<GraphKind> {
    let int = |i: usize| -> Result<usize> {
        let p = params
            .get(i)
            .ok_or_else(|| Error::InvalidInput(format!("{kind}: missing parameter {}", i + 1)))?;
        p.parse()
            .map_err(|_| Error::InvalidInput(format!("{kind}: bad integer `{p}`")))
    };
    let expect = |count: usize| -> Result<()> {
        if params.len() != count {
            return Err(Error::InvalidInput(format!(
                "{kind} takes {count} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    let kind_norm = kind.replace('-', "_");
    let k = match kind_norm.as_str() {
        "cycle" => GraphKind::Cycle(int(0)?),
        "path" => GraphKind::Path(int(0)?),
        "complete" => GraphKind::Complete(int(0)?),
        "complete_bipartite" => GraphKind::CompleteBipartite(int(0)?, int(1)?),
        "petersen" => GraphKind::Petersen,
        "cube" => GraphKind::Cube,
        "random_regular" => GraphKind::RandomRegular { n: int(0)?, d: int(1)? },
        "erdos_renyi" => {
            let p = params
                .get(1)
                .and_then(|p| p.parse::<f64>().ok())
                .ok_or_else(|| Error::InvalidInput("erdos_renyi: bad probability".into()))?;
            GraphKind::ErdosRenyi { n: int(0)?, p }
        }
        _ => return Err(Error::InvalidInput(format!("unknown graph kind `{kind}`"))),
    };
    expect(match k {
        GraphKind::Petersen | GraphKind::Cube => 0,
        GraphKind::Cycle(_) | GraphKind::Path(_) | GraphKind::Complete(_) => 1,
        _ => 2,
    })?;
    Ok(k)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Color { .. } => "color",
        Command::ListColor { .. } => "list-color",
        Command::Orient { .. } => "orient",
        Command::Kernel { .. } => "kernel",
        Command::Witness { .. } => "witness",
        Command::Paint { .. } => "paint",
        Command::Oracle { which } => match which {
            OracleCommand::Chi { .. } => "oracle chi",
            OracleCommand::Omega { .. } => "oracle omega",
            OracleCommand::Choosable { .. } => "oracle choosable",
            OracleCommand::Paintable { .. } => "oracle paintable",
        },
        Command::Verify { .. } => "verify",
        Command::Gen { .. } => "gen",
        Command::Bench { .. } => "bench",
    }
}

/// Runs the command. The graph is recorded in `instance` as soon as it is
/// known so that a failure can report it.
fn dispatch(cli: &Cli, instance: &mut Option<Graph>, warnings: &mut Vec<String>) -> Result<Outcome> {
    let ctx = Ctx {
        one_based: cli.one_based,
        inject_fault: cli.inject_fault,
    };
    let mut load = |input: &GraphInput| -> Result<Graph> {
        let g = load_graph(input, warnings)?;
        *instance = Some(g.clone());
        Ok(g)
    };
    match &cli.command {
        Command::Color { graph } => commands::color(&ctx, &load(graph)?),
        Command::ListColor { graph, lists } => {
            let g = load(graph)?;
            let lists = parse_lists_json(&read(lists)?, g.n())?;
            commands::list_color(&ctx, &g, &lists)
        }
        Command::Orient { graph, demands } => {
            let g = load(graph)?;
            let demand = parse_vertex_map_json(&read(demands)?, g.n())?;
            commands::orient(&g, &demand)
        }
        Command::Kernel { graph, partition, lists } => {
            let g = load(graph)?;
            let p = parse_partition_json(&read(partition)?, g.n())?;
            let lists: Option<ListAssignment> = match lists {
                Some(path) => Some(parse_lists_json(&read(path)?, g.n())?),
                None => None,
            };
            commands::kernel(&ctx, &g, &p, lists.as_ref())
        }
        Command::Witness { graph, f, a } => {
            let g = load(graph)?;
            let f = parse_vertex_map_json(&read(f)?, g.n())?;
            let a: Option<VertexSet> = match a {
                Some(path) => Some(parse_partition_json(&read(path)?, g.n())?.a),
                None => None,
            };
            commands::witness(&g, &f, a)
        }
        Command::Paint { graph, tokens, painter, partition } => {
            let g = load(graph)?;
            let tokens = parse_vertex_map_json(&read(tokens)?, g.n())?;
            let p = match partition {
                Some(path) => Some(parse_partition_json(&read(path)?, g.n())?),
                None => None,
            };
            commands::paint(&g, &tokens, *painter, p.as_ref())
        }
        Command::Oracle { which } => match which {
            OracleCommand::Chi { graph } => commands::oracle_chi(&load(graph)?),
            OracleCommand::Omega { graph } => commands::oracle_omega(&load(graph)?),
            OracleCommand::Choosable { graph, sizes } => {
                let g = load(graph)?;
                let f = sizes.resolve(g.n())?;
                commands::oracle_choosable(&g, &f)
            }
            OracleCommand::Paintable { graph, sizes } => {
                let g = load(graph)?;
                let t = sizes.resolve(g.n())?;
                commands::paint(&g, &t, PainterKind::Minimax, None)
            }
        },
        Command::Verify { graph, coloring, lists } => {
            let g = load(graph)?;
            let colors = parse_vertex_map_json(&read(coloring)?, g.n())?;
            let lists: Option<ListAssignment> = match lists {
                Some(path) => Some(parse_lists_json(&read(path)?, g.n())?),
                None => None,
            };
            commands::verify(&ctx, &g, &colors, lists.as_ref())
        }
        Command::Gen { kind, params, seed, .. } => {
            let g = generate(&parse_kind(kind, params)?, *seed)?;
            *instance = Some(g.clone());
            commands::gen(&g)
        }
        Command::Bench { sizes, degrees, seeds } => commands::bench(sizes, degrees, *seeds),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut instance = None;
    let mut warnings = Vec::new();
    let outcome = dispatch(&cli, &mut instance, &mut warnings);

    if let (Command::Gen { emit: Some(format), .. }, Ok(_), Some(g)) = (&cli.command, &outcome, &instance) {
        match format {
            Format::Graph6 => match encode_graph6(g) {
                Ok(s) => println!("{s}"),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(ExitKind::Input as u8);
                }
            },
            Format::Dimacs => print!("{}", encode_dimacs(g)),
        }
        return ExitCode::SUCCESS;
    }

    let (exit, result, checks, error, summary) = match outcome {
        Ok(out) => {
            let broken: Vec<&String> = out
                .checks
                .iter()
                .filter(|(_, v)| **v == serde_json::Value::Bool(false))
                .map(|(k, _)| k)
                .collect();
            if !broken.is_empty() {
                let message = format!("self-check failed: {broken:?}");
                let err = invariant_report(message.clone(), instance.as_ref());
                (ExitKind::Invariant, out.result, out.checks, Some(err), message)
            } else if out.negative {
                (ExitKind::Negative, out.result, out.checks, None, out.summary)
            } else {
                (ExitKind::Ok, out.result, out.checks, None, out.summary)
            }
        }
        Err(e) => {
            let message = e.to_string();
            let (exit, err) = match e {
                Error::Invariant { .. } => (ExitKind::Invariant, invariant_report(message.clone(), instance.as_ref())),
                _ => (
                    ExitKind::Input,
                    ErrorReport {
                        kind: if matches!(e, Error::ResourceLimit(_)) {
                            "resource_limit"
                        } else {
                            "input"
                        },
                        message: message.clone(),
                        instance_graph6: None,
                    },
                ),
            };
            (exit, serde_json::Value::Null, Map::new(), Some(err), message)
        }
    };

    let report = RunReport {
        schema: SCHEMA,
        command: command_name(&cli.command).to_string(),
        input: instance.as_ref().map(InputSummary::of),
        result,
        checks,
        warnings,
        error,
        exit_code: exit as i32,
        wall_ms: start.elapsed().as_secs_f64() * 1000.0,
    };
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    match exit {
        ExitKind::Ok | ExitKind::Negative => eprintln!("{}: {summary}", report.command),
        _ => eprintln!("{}: error: {summary}", report.command),
    }
    if let Some(ErrorReport { instance_graph6: Some(g6), .. }) = &report.error {
        eprintln!("offending instance (graph6): {g6}");
    }
    ExitCode::from(exit as u8)
}

fn invariant_report(message: String, instance: Option<&Graph>) -> ErrorReport {
    ErrorReport {
        kind: "invariant",
        message,
        instance_graph6: instance.and_then(|g| encode_graph6(g).ok()),
    }
}
