//! Command-line interface. [`run`] is what the `trireg` binary calls;
//! [`run_with`] takes explicit streams so it can be driven from tests.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{is_optimal, lower_bound_triangles};
use crate::construct::{Construction, NamedGraph};
use crate::diamond::{
    contract_diamonds, enumerate_ecds, extract_ecd, find_diamond_decomposition, synthesize_quintic,
    EvenCycleDecomposition,
};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::io::{parse_edge_list, to_dot, write_edge_list, write_graph6};
use crate::removability::{classify_edges, verify_theorem3};
use crate::search::{enumerate_regular_graphs_with, filter_optimal, Graph6Stream, SearchConfig};
use crate::triangles::{enumerate_triangles, has_triangle_property_direct, has_triangle_property_lemma};

/// Environment variable read by the binary for log filtering, e.g.
/// `TRIREG_LOG=debug`.
pub const LOG_ENV: &str = "TRIREG_LOG";

/// Exit status for a completed run whose verification failed.
pub const EXIT_VERIFICATION_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "trireg", version, about = "Regular graphs with every edge in a triangle")]
struct Cli {
    /// Input format; by default detected from the first line.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edges,
    Ecd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    Edges,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph from one of the constructions.
    Construct {
        #[command(subcommand)]
        family: Family,
        /// Output format; multigraphs default to `edges`, simple graphs to `graph6`.
        #[arg(long, value_enum, global = true)]
        format: Option<OutputFormat>,
        /// Shorthand for `--format dot`.
        #[arg(long, global = true)]
        dot: bool,
    },
    /// Report regularity, triangle counts, the triangle property, optimality
    /// and removable edges as JSON (one object per input graph).
    Check {
        /// Input file, `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Exit with status 2 unless every input graph is optimal.
        #[arg(long)]
        expect_optimal: bool,
    },
    /// Write the even cycle decomposition of an optimal quintic graph.
    Decompose {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Build the quintic graph described by an even cycle decomposition.
    Synthesize {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        format: OutputFormat,
    },
    /// List rule-valid decompositions of a simple 4-regular base graph, one
    /// per resulting quintic graph.
    EnumerateEcds {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Write graph6 lines for the simple r-regular graphs on n vertices.
    Census {
        n: usize,
        r: usize,
        #[arg(long)]
        connected_only: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Abort after this many seconds.
        #[arg(long)]
        time_budget: Option<f64>,
    },
    /// Find the optimal graphs in the connected census of r-regular graphs on
    /// n vertices, or among graph6 lines read with `--from`.
    Scan {
        #[arg(required_unless_present = "from")]
        n: Option<usize>,
        #[arg(required_unless_present = "from")]
        r: Option<usize>,
        /// graph6 file (or `-`) to scan instead of the internal census.
        #[arg(long, conflicts_with_all = ["n", "r"])]
        from: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        time_budget: Option<f64>,
    },
    /// Check on every connected quintic graph up to the bound that having no
    /// removable edge is the same as being optimal.
    VerifyThm3 { bound: usize },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// The quintic graph L_n on 2n vertices (n >= 3).
    Ln { n: usize },
    /// Line graph of a named cubic graph.
    Line { name: NamedGraph },
    /// The 6-regular graph on 15 vertices from the Petersen line graph.
    Petersen6,
    /// The 7-regular graph on 6j vertices (j >= 5).
    Seven { j: usize },
    /// Line graph of the cube with a perfect matching doubled.
    DoubledCube,
    /// A named graph as is.
    Named { name: NamedGraph },
}

impl clap::builder::ValueParserFactory for NamedGraph {
    type Parser = clap::builder::ValueParser;

    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<NamedGraph>().map_err(|e| e.to_string()))
    }
}

/// Parses `std::env::args` and runs against the process streams.
pub fn run() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(stdout, "{}", e.render())
            } else {
                write!(stderr, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    let fmt = cli.input_format;
    match cli.command {
        Command::Construct { family, format, dot } => {
            let c = match family {
                Family::Ln { n } => Construction::ln(n)?,
                Family::Line { name } => Construction::line_graph_of(name)?,
                Family::Petersen6 => Construction::petersen_six()?,
                Family::Seven { j } => Construction::seven_regular(j)?,
                Family::DoubledCube => Construction::doubled_cube()?,
                Family::Named { name } => Construction::external(crate::construct::named_graph(name)),
            };
            let format = if dot {
                OutputFormat::Dot
            } else {
                format.unwrap_or(if c.graph.is_simple() {
                    OutputFormat::Graph6
                } else {
                    OutputFormat::Edges
                })
            };
            emit_graph(out, &c.graph, format, &c)?;
            Ok(0)
        }
        Command::Check { input, expect_optimal } => {
            let graphs = read_graphs(&input, fmt, stdin)?;
            let mut all_optimal = true;
            for g in &graphs {
                let report = check_report(g);
                all_optimal &= report["optimal"] == json!(true);
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
            }
            if expect_optimal && !all_optimal {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
            Ok(0)
        }
        Command::Decompose { input } => {
            let g = single_graph(read_graphs(&input, fmt, stdin)?)?;
            let dd = find_diamond_decomposition(&g)?.ok_or_else(|| {
                Error::precondition("graph is not an optimal quintic graph; no diamond decomposition")
            })?;
            write!(out, "{}", extract_ecd(&dd)?.to_text())?;
            Ok(0)
        }
        Command::Synthesize { input, format } => {
            let text = read_text(&input, stdin)?;
            if !matches!(fmt, InputFormat::Auto | InputFormat::Ecd) {
                return Err(Error::precondition("synthesize reads an ecd file"));
            }
            let ecd = EvenCycleDecomposition::parse_text(&text)?;
            let g = synthesize_quintic(&ecd)?;
            emit_graph(out, &g, format, &Construction::external(g.clone()))?;
            Ok(0)
        }
        Command::EnumerateEcds { input, limit } => {
            let base = single_graph(read_graphs(&input, fmt, stdin)?)?;
            let ecds = enumerate_ecds(&base, limit.unwrap_or(usize::MAX))?;
            for (i, e) in ecds.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                let g = synthesize_quintic(e)?;
                writeln!(out, "# {}", write_graph6(&g)?)?;
                write!(out, "{}", e.to_text())?;
            }
            writeln!(out, "# {} decompositions", ecds.len())?;
            Ok(0)
        }
        Command::Census {
            n,
            r,
            connected_only,
            limit,
            time_budget,
        } => {
            let config = SearchConfig {
                connected_only,
                limit,
                time_budget: budget(time_budget)?,
            };
            for g in enumerate_regular_graphs_with(n, r, &config)? {
                writeln!(out, "{}", write_graph6(&g)?)?;
            }
            Ok(0)
        }
        Command::Scan {
            n,
            r,
            from,
            limit,
            time_budget,
        } => {
            let found = match (from, n, r) {
                (Some(path), _, _) => {
                    let text = read_text(&path, stdin)?;
                    let graphs = Graph6Stream::new(text.as_bytes()).collect::<Result<Vec<_>>>()?;
                    filter_optimal(graphs.into_iter().take(limit.unwrap_or(usize::MAX)))?
                }
                (None, Some(n), Some(r)) => {
                    lower_bound_triangles(r, n)?;
                    let config = SearchConfig {
                        connected_only: true,
                        limit,
                        time_budget: budget(time_budget)?,
                    };
                    filter_optimal(enumerate_regular_graphs_with(n, r, &config)?)?
                }
                _ => unreachable!("clap requires n and r without --from"),
            };
            for g in &found {
                writeln!(out, "{}", write_graph6(g)?)?;
            }
            writeln!(out, "{} optimal graphs found", found.len())?;
            Ok(0)
        }
        Command::VerifyThm3 { bound } => {
            let report = verify_theorem3(bound)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).expect("json"))?;
            Ok(if report.counterexamples.is_empty() {
                0
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
    }
}

fn budget(seconds: Option<f64>) -> Result<Option<Duration>> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).map_err(|e| Error::precondition(format!("time budget: {e}"))))
        .transpose()
}

fn emit_graph(out: &mut dyn Write, g: &MultiGraph, format: OutputFormat, c: &Construction) -> Result<()> {
    match format {
        OutputFormat::Graph6 => writeln!(out, "{}", write_graph6(g)?)?,
        OutputFormat::Edges => write!(out, "{}", write_edge_list(g))?,
        OutputFormat::Dot => write!(out, "{}", to_dot(g, &c.highlights))?,
    }
    Ok(())
}

fn read_text(input: &str, stdin: &mut dyn Read) -> Result<String> {
    if input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(PathBuf::from(input)).map_err(|e| Error::Io(format!("{input}: {e}")))
    }
}

fn detect(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    match first.split_whitespace().next() {
        Some("multigraph") => InputFormat::Edges,
        Some("ecd") => InputFormat::Ecd,
        _ => InputFormat::Graph6,
    }
}

fn read_graphs(input: &str, fmt: InputFormat, stdin: &mut dyn Read) -> Result<Vec<MultiGraph>> {
    let text = read_text(input, stdin)?;
    let fmt = if fmt == InputFormat::Auto { detect(&text) } else { fmt };
    match fmt {
        InputFormat::Edges => Ok(vec![parse_edge_list(&text)?]),
        InputFormat::Ecd => Ok(vec![EvenCycleDecomposition::parse_text(&text)?.base()]),
        _ => {
            let graphs = Graph6Stream::new(text.as_bytes()).collect::<Result<Vec<_>>>()?;
            if graphs.is_empty() {
                return Err(Error::format("no graph in input"));
            }
            Ok(graphs)
        }
    }
}

fn single_graph(mut graphs: Vec<MultiGraph>) -> Result<MultiGraph> {
    if graphs.len() != 1 {
        return Err(Error::format(format!("expected one graph, found {}", graphs.len())));
    }
    Ok(graphs.pop().unwrap())
}

/// The `check` report for one graph.
pub fn check_report(g: &MultiGraph) -> Value {
    let report = enumerate_triangles(g);
    let direct = has_triangle_property_direct(g);
    let lemma = has_triangle_property_lemma(g);
    let regularity = g.regularity();
    let bound = regularity.and_then(|r| lower_bound_triangles(r, g.vertex_count()).ok());
    let optimal = is_optimal(g).ok();
    let removability = if direct {
        classify_edges(g).map(|c| c.to_json()).unwrap_or(Value::Null)
    } else {
        Value::Null
    };
    let decomposition = if regularity == Some(5) && g.is_simple() {
        match find_diamond_decomposition(g) {
            Ok(Some(dd)) => {
                let (base, _) = contract_diamonds(&dd);
                json!({ "diamonds": dd.diamonds().len(), "base_edges": base.edge_count() })
            }
            _ => Value::Null,
        }
    } else {
        Value::Null
    };
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "simple": g.is_simple(),
        "connected": g.is_connected(),
        "regularity": regularity,
        "triangles": report.weighted_count,
        "triangle_report": report.to_json(g),
        "triangle_property": { "direct": direct, "lemma": lemma },
        "lower_bound": bound,
        "optimal": optimal,
        "removability": removability,
        "diamond_decomposition": decomposition,
    })
}
