use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tough_chordal::hamilton::{construct_hamilton_cycle, run_pipeline_on};
use tough_chordal::io::{base_tree_to_dot, clique_tree_to_dot, graph_to_dot};
use tough_chordal::{
    build_tree_representation, construct_hamilton_path, find_sdr, generate_chordal,
    is_chordal, parse_graph, render_graph, toughness_report, Chordality, Decomposition, Error, Family,
    GeneratorSpec, Graph, PathOutcome, PipelineOptions, PipelineResult, DEFAULT_CAP,
};

/// Hamilton cycles in chordal graphs, or separators certifying toughness below 10.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Structured JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Emit graphs and trees in DOT instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    dot: bool,
    /// Largest overspan family searched for a violating subfamily.
    #[arg(long, global = true, env = "CHORDAL_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Print nothing; report through the exit code only.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Args)]
struct Input {
    /// Graph file; standard input when omitted or "-".
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Chordality test: elimination order or an induced cycle.
    Check(Input),
    /// Clique-tree representation.
    Cliquetree(Input),
    /// Independent I-paths and the red/black base tree.
    Basetree(Input),
    /// Overspan graph family of the base tree.
    Overspan(Input),
    /// System of disjoint representatives, if one exists.
    Sdr(Input),
    /// Hamilton cycle from a representative system.
    Hamilton(Input),
    /// Hamilton path between two vertices, or a witness.
    Path {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Exact toughness by exhaustive search.
    Toughness(Input),
    /// Separator certifying toughness below 10, if the cycle construction fails.
    Witness(Input),
    /// Hamilton cycle or witness separator.
    Pipeline(Input),
    /// Write a random connected chordal graph.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count (ktree, interval).
        #[arg(long, short)]
        n: Option<usize>,
        /// Clique order (ktree).
        #[arg(long, short, default_value_t = 2)]
        k: usize,
        /// Clique size (split).
        #[arg(long)]
        clique: Option<usize>,
        /// Independent-set size (split).
        #[arg(long)]
        independent: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ktree,
    Interval,
    Split,
}

enum Output {
    Json(serde_json::Value),
    Text(String),
}

struct Outcome {
    output: Output,
    code: u8,
}

impl Outcome {
    fn json<T: Serialize>(value: &T, code: u8) -> Self {
        Outcome { output: Output::Json(serde_json::to_value(value).expect("serializable")), code }
    }

    fn text(s: String, code: u8) -> Self {
        Outcome { output: Output::Text(s), code }
    }
}

fn read_graph(input: &Input) -> Result<Graph, Error> {
    let text = match &input.file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidArgument(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    parse_graph(&text)
}

fn chordal_connected(input: &Input) -> Result<Decomposition, Error> {
    let g = read_graph(input)?;
    if let Chordality::Hole(hole) = is_chordal(&g) {
        return Err(Error::NotChordal { hole });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Decomposition::new(&g)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let dot = cli.dot;
    let opts = PipelineOptions { cap: cli.cap };
    Ok(match &cli.command {
        Command::Check(input) => {
            let c = is_chordal(&read_graph(input)?);
            let code = u8::from(matches!(c, Chordality::Hole(_)));
            Outcome::json(&c, code)
        }
        Command::Cliquetree(input) => {
            let g = read_graph(input)?;
            let rep = build_tree_representation(&g)?;
            if dot {
                Outcome::text(clique_tree_to_dot(&rep), 0)
            } else {
                Outcome::json(&rep, 0)
            }
        }
        Command::Basetree(input) => {
            let d = chordal_connected(input)?;
            if dot {
                Outcome::text(base_tree_to_dot(&d.rep, &d.base), 0)
            } else {
                Outcome::json(&json!({ "independent_paths": d.ips, "base_tree": d.base }), 0)
            }
        }
        Command::Overspan(input) => {
            let d = chordal_connected(input)?;
            if dot {
                let all: String = d
                    .family
                    .items
                    .iter()
                    .map(|it| {
                        graph_to_dot(&it.graph)
                            .replacen("graph G", &format!("graph A_{}_{}", it.edge, it.copy), 1)
                    })
                    .collect();
                Outcome::text(all, 0)
            } else {
                Outcome::json(&d.family, 0)
            }
        }
        Command::Sdr(input) => {
            let d = chordal_connected(input)?;
            let sdr = find_sdr(&d.family, &[]);
            let code = u8::from(sdr.is_none());
            Outcome::json(&json!({ "sdr": sdr }), code)
        }
        Command::Hamilton(input) => {
            let d = chordal_connected(input)?;
            if d.graph.n() < 3 {
                return Err(Error::TooSmall { n: d.graph.n(), min: 3 });
            }
            match find_sdr(&d.family, &[]) {
                Some(sdr) => {
                    let cycle = construct_hamilton_cycle(&d.graph, &d.rep, &d.base, &d.family, &sdr)?;
                    Outcome::json(&json!({ "cycle": cycle }), 0)
                }
                None => Outcome::json(&json!({ "cycle": null }), 1),
            }
        }
        Command::Path { input, from, to } => {
            let g = read_graph(input)?;
            let r = construct_hamilton_path(&g, *from, *to, opts)?;
            let code = match r {
                PathOutcome::HamiltonPath { .. } => 0,
                PathOutcome::Witness(_) => 1,
                PathOutcome::Diagnostic { .. } => 3,
            };
            Outcome::json(&r, code)
        }
        Command::Toughness(input) => Outcome::json(&toughness_report(&read_graph(input)?)?, 0),
        Command::Witness(input) => {
            let d = chordal_connected(input)?;
            if d.graph.n() < 3 {
                return Err(Error::TooSmall { n: d.graph.n(), min: 3 });
            }
            match run_pipeline_on(&d, opts)? {
                PipelineResult::Witness(w) => Outcome::json(&w, 0),
                PipelineResult::HamiltonCycle { .. } => Outcome::json(&json!({ "witness": null }), 1),
            }
        }
        Command::Pipeline(input) => {
            let d = chordal_connected(input)?;
            if d.graph.n() < 3 {
                return Err(Error::TooSmall { n: d.graph.n(), min: 3 });
            }
            let r = run_pipeline_on(&d, opts)?;
            let code = u8::from(matches!(r, PipelineResult::Witness(_)));
            Outcome::json(&r, code)
        }
        Command::Gen { family, seed, n, k, clique, independent } => {
            let need = |x: Option<usize>, name: &str| {
                x.ok_or_else(|| Error::InvalidArgument(format!("--{name} is required for this family")))
            };
            let family = match family {
                FamilyArg::Ktree => Family::KTree { k: *k, n: need(*n, "n")? },
                FamilyArg::Interval => Family::Interval { n: need(*n, "n")? },
                FamilyArg::Split => Family::Split { clique: need(*clique, "clique")?, independent: need(*independent, "independent")? },
            };
            let g = generate_chordal(&GeneratorSpec::new(family, *seed))?;
            Outcome::text(render_graph(&g), 0)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { output, code }) => {
            if !cli.quiet {
                // a closed pipe downstream is not an error of ours
                let mut out = std::io::stdout().lock();
                let _ = match output {
                    Output::Json(v) => writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")),
                    Output::Text(s) => write!(out, "{s}"),
                };
            }
            ExitCode::from(code)
        }
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: {e}");
            }
            ExitCode::from(if e.is_input_error() { 2 } else { 3 })
        }
    }
}
