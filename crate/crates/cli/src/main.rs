use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use imc_core::catalog::named_graph;
use imc_core::dispatch::is_unsupported;
use imc_core::{dispatch, io, verify_model, Algorithm, Answer, Config, Graph, Model, Witness};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

/// Decide whether a pattern is an induced minor of a graph and print a
/// JSON answer with a checkable model.
#[derive(Debug, Parser)]
#[command(name = "imc", version)]
#[command(group(ArgGroup::new("which").required(true).args(["pattern", "pattern_file"])))]
struct Args {
    /// Catalog pattern: house, bull, gem, full_house, crown, k5_minus, k23,
    /// w4, prism, k33, k4, path_N, cycle_N or complete_N.
    #[arg(long)]
    pattern: Option<String>,
    /// Pattern graph read from a file.
    #[arg(long)]
    pattern_file: Option<PathBuf>,
    /// Host graph file.
    #[arg(long)]
    graph: PathBuf,
    /// Input format; guessed from the file extension when absent
    /// (`.g6`/`.graph6` is graph6, anything else an edge list).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// auto, oracle, snt, house-bull, split, ptfree, gem or fullhouse.
    #[arg(long, default_value = "auto")]
    algorithm: Algorithm,
    /// Largest host handed to the exhaustive search.
    #[arg(long, default_value_t = 12)]
    max_oracle_size: usize,
    /// Search for a model even when a structure theorem already decides.
    #[arg(long)]
    require_witness: bool,
    /// Re-verify the emitted model before printing.
    #[arg(long)]
    check_witness: bool,
    /// Worker threads for the exhaustive search (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    /// Bad input: missing file, parse error, unknown name.
    Input(String),
    Unsupported(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Unsupported(_) => 2,
            Failure::Input(_) | Failure::Internal(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "error: {m}"),
            Failure::Unsupported(m) => write!(f, "unsupported: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

#[derive(Serialize)]
struct Output {
    contains: bool,
    method: &'static str,
    witness: Option<Witness>,
    certified_without_witness: bool,
}

fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => Format::Graph6,
        _ => Format::Edgelist,
    });
    let parsed = match format {
        Format::Graph6 => io::from_graph6(&text),
        Format::Edgelist => io::from_edge_list(&text),
    };
    parsed.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn check(answer: &Answer<'_, '_>, h: &Graph, g: &Graph) -> Result<(), Failure> {
    let Some(m) = &answer.witness else {
        return Ok(());
    };
    // Round-trip through the emitted form so the check sees what is printed.
    let w = m.to_witness();
    let back = Model::from_witness(h, g, &w).map_err(|e| Failure::Internal(format!("emitted witness does not parse: {e}")))?;
    if verify_model(&back) {
        Ok(())
    } else {
        Err(Failure::Internal(format!("emitted witness fails verification: {:?}", back.check())))
    }
}

fn run(args: &Args) -> Result<String, Failure> {
    if let Some(t) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let h = match (&args.pattern, &args.pattern_file) {
        (Some(name), _) => named_graph(name).map_err(|e| Failure::Input(e.to_string()))?,
        (None, Some(path)) => read_graph(path, args.format)?,
        (None, None) => unreachable!("clap requires one pattern source"),
    };
    let g = read_graph(&args.graph, args.format)?;
    let cfg = Config {
        algorithm: args.algorithm,
        max_oracle_size: args.max_oracle_size,
        require_witness: args.require_witness,
        parallel: args.threads != Some(1),
        ..Config::default()
    };
    let answer = dispatch(&g, &h, &cfg).map_err(|e| {
        if is_unsupported(&e) {
            Failure::Unsupported(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    })?;
    if args.check_witness {
        check(&answer, &h, &g)?;
    }
    let out = Output {
        contains: answer.contains,
        method: answer.method.label(),
        witness: answer.witness.as_ref().map(Model::to_witness),
        certified_without_witness: answer.certified_without_witness,
    };
    serde_json::to_string(&out).map_err(|e| Failure::Internal(e.to_string()))
}

fn main() -> ExitCode {
    // Usage errors are malformed input (exit 1); 2 is reserved for
    // unsupported instances.
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&args) {
        Ok(json) => {
            println!("{json}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.code())
        }
    }
}
