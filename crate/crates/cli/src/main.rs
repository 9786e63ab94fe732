use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use lgindex::harness::{graph_key, ENUMERATION_CAP};
use lgindex::io::{emit_graph6, emit_report, parse_edge_list, parse_graph6, ReportFormat};
use lgindex::theorems::parse_theorem_list;
use lgindex::{
    compute_index_vector, enumerate_graphs, extremal_search, hyperbolicity_constant_with,
    line_graph, run_verification, EnumerationSpec, ExtremalClass, ExtremalQuery, Graph,
    GraphSource, HyperbolicityOptions, Objective,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "lgindex",
    version,
    about = "Degree-based indices, line graphs and bound checks on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Max,
    Min,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    Trees,
    Unicyclic,
    Connected,
}

#[derive(Subcommand)]
enum Command {
    /// Index vector of one graph, optionally with its line graph.
    Compute {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: InputFormat,
        #[arg(long)]
        line_graph: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Check theorems over enumerated graphs or a graph6 file. Exits 1 on any violation.
    Verify {
        /// Comma-separated ids such as T1,T7, or `all`.
        #[arg(long)]
        theorems: String,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        non_trivial: bool,
        /// graph6 file, one graph per line, instead of internal enumeration.
        #[arg(long)]
        source: Option<PathBuf>,
        /// Report path; `.csv` writes CSV, anything else JSON.
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact hyperbolicity constant, printed as JSON.
    Hyperbolicity {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: InputFormat,
        #[arg(long, default_value_t = lgindex::hyperbolicity::DEFAULT_HYPERBOLICITY_CAP)]
        cap: usize,
    },
    /// Graphs of one order and class attaining the max or min of an index.
    Extremal {
        #[arg(long)]
        index: String,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
    },
    /// All graphs on n vertices up to isomorphism, one graph6 string per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

fn read_graph(path: &Path, format: InputFormat) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = match format {
        InputFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            parse_graph6(line.trim_start_matches(">>graph6<<"))?
        }
        InputFormat::Edgelist => {
            let parsed = parse_edge_list(&text)?;
            if parsed.duplicates > 0 {
                eprintln!("warning: {} duplicate edge(s) collapsed", parsed.duplicates);
            }
            parsed.graph
        }
    };
    Ok(g)
}

fn write(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

/// Reports carry a timestamp only when `SOURCE_DATE_EPOCH` is set, so reruns stay byte-identical.
fn timestamp() -> Option<String> {
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .filter(|s| !s.trim().is_empty())
}

fn compute(
    input: &Path,
    format: InputFormat,
    with_line: bool,
    out: &Path,
    emit: Emit,
) -> Result<()> {
    let g = read_graph(input, format)?;
    let iv = compute_index_vector(&g)?;
    let line = if with_line {
        let l = line_graph(&g)?;
        let liv = compute_index_vector(&l.line_graph)?;
        Some((l, liv))
    } else {
        None
    };
    let bytes = match emit {
        Emit::Json => {
            let mut doc = json!({
                "graph6": emit_graph6(&g)?,
                "n": g.n(),
                "m": g.m(),
                "indices": iv,
            });
            if let Some((l, liv)) = &line {
                doc["line_graph"] = json!({
                    "graph6": emit_graph6(&l.line_graph)?,
                    "n": l.line_graph.n(),
                    "m": l.line_graph.m(),
                    "vertex_map": l.vertex_map,
                    "indices": liv,
                });
            }
            let mut b = serde_json::to_vec_pretty(&doc)?;
            b.push(b'\n');
            b
        }
        Emit::Csv => {
            let mut s = String::from("graph,index,value\n");
            let mut rows = |name: &str, v: &lgindex::IndexVector| {
                for idx in lgindex::index::INDEX_NAMES {
                    s.push_str(&format!(
                        "{name},{idx},{}\n",
                        v.get(idx).expect("known index")
                    ));
                }
            };
            rows("G", &iv);
            if let Some((_, liv)) = &line {
                rows("L(G)", liv);
            }
            s.into_bytes()
        }
    };
    write(out, &bytes)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute {
            input,
            format,
            line_graph,
            out,
            emit,
        } => compute(&input, format, line_graph, &out, emit)?,
        Command::Verify {
            theorems,
            n_min,
            n_max,
            connected,
            non_trivial,
            source,
            out,
        } => {
            let ids = parse_theorem_list(&theorems)?;
            let spec = EnumerationSpec {
                n_min,
                n_max,
                connected_only: connected,
                non_trivial_only: non_trivial,
                source: match source {
                    Some(path) => GraphSource::Graph6File { path },
                    None => GraphSource::Internal,
                },
            };
            let mut report = run_verification(&spec, &ids)?;
            report.meta.timestamp = timestamp();
            let fmt = match out.extension().and_then(|e| e.to_str()) {
                Some(e) if e.eq_ignore_ascii_case("csv") => ReportFormat::Csv,
                _ => ReportFormat::Json,
            };
            write(&out, &emit_report(&report, fmt)?)?;
            let a = &report.aggregates;
            eprintln!(
                "{} graphs, {} checks ({} not applicable), {} violations, {} equality cases",
                a.graphs_checked, a.checks_run, a.not_applicable, a.violations, a.equality_cases
            );
            if report.has_violations() {
                for v in &a.violation_list {
                    eprintln!("violation: {} on {} ({})", v.theorem, v.graph6, v.graph_key);
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Hyperbolicity { input, format, cap } => {
            let g = read_graph(&input, format)?;
            let opts = HyperbolicityOptions {
                cap,
                ..HyperbolicityOptions::default()
            };
            let res = hyperbolicity_constant_with(&g, opts)?;
            println!("{}", serde_json::to_string_pretty(&res)?);
        }
        Command::Extremal {
            index,
            objective,
            class,
            n,
        } => {
            let q = ExtremalQuery {
                index,
                objective: match objective {
                    ObjectiveArg::Max => Objective::Max,
                    ObjectiveArg::Min => Objective::Min,
                },
                class: match class {
                    ClassArg::All => ExtremalClass::All,
                    ClassArg::Trees => ExtremalClass::Trees,
                    ClassArg::Unicyclic => ExtremalClass::Unicyclic,
                    ClassArg::Connected => ExtremalClass::Connected,
                },
                n,
            };
            let res = extremal_search(&q)?;
            println!("{}", serde_json::to_string_pretty(&res)?);
        }
        Command::Enumerate { n, connected, out } => {
            if n > ENUMERATION_CAP {
                bail!("internal enumeration supports at most {ENUMERATION_CAP} vertices");
            }
            let mut spec = EnumerationSpec::internal(n, n);
            spec.connected_only = connected;
            let mut text = String::new();
            for g in enumerate_graphs(&spec)? {
                text.push_str(&graph_key(&g));
                text.push('\n');
            }
            write(&out, text.as_bytes())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
