//! Command-line front end. `run` is the whole program minus process exit.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{analyze, AnalysisOptions};
use crate::counting::{count_naive, count_sequence, CountSequence, DEFAULT_NAIVE_CAP};
use crate::error::{Error, Result};
use crate::generate::{generate_family, Family};
use crate::hypergraph::{incidence_matrix, parse_hypergraph, validate, Hypergraph};
use crate::polytope::{build_polytope, enumerate_vertices, vertex_denominators, DEFAULT_VERTEX_CAP};
use crate::report;
use crate::series::DEFAULT_MARGIN;
use crate::unimodular::{is_totally_unimodular, DEFAULT_TU_CAP};

pub const THREADS_ENV: &str = "EHRGRAPH_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ehrgraph", version, about = "Exact Ehrhart series of graph and hypergraph polytopes")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonFlags,
}

#[derive(Debug, Args, Clone)]
pub struct CommonFlags {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest dilation to count
    #[arg(long = "n-max", global = true)]
    pub n_max: Option<u64>,
    /// Extra series coefficients verified past the candidate degree
    #[arg(long, default_value_t = DEFAULT_MARGIN, global = true)]
    pub margin: usize,
    /// Add 0 <= x_i <= 1 rows, allowing isolated vertices in graph inputs
    #[arg(long = "graph-box", global = true)]
    pub graph_box: bool,
    /// Maximum number of square submatrices for the unimodularity scan
    #[arg(long = "tu-cap", default_value_t = DEFAULT_TU_CAP, global = true)]
    pub tu_cap: u64,
    /// Maximum number of row subsets for vertex enumeration
    #[arg(long = "vertex-cap", default_value_t = DEFAULT_VERTEX_CAP, global = true)]
    pub vertex_cap: u64,
    /// Count by exhaustive enumeration instead of the pruned search
    #[arg(long, global = true)]
    pub naive: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report structural properties, the incidence matrix and unimodularity
    Validate { input: PathBuf },
    /// Print the exact vertices of the polytope
    Vertices { input: PathBuf },
    /// Print lattice-point counts of dilations 0..=n-max
    Count { input: PathBuf },
    /// Compute the Ehrhart series
    Series { input: PathBuf },
    /// Compute the series and run every applicable check
    Verify { input: PathBuf },
    /// Emit a generated graph in the hypergraph text format
    Gen {
        family: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
    },
}

/// Failure, as opposed to a completed run with failing checks.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> std::result::Result<Hypergraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?
    };
    Ok(parse_hypergraph(&text)?)
}

fn options(flags: &CommonFlags) -> AnalysisOptions {
    AnalysisOptions {
        margin: flags.margin,
        n_max: flags.n_max,
        graph_box: flags.graph_box,
        tu_cap: flags.tu_cap,
        vertex_cap: flags.vertex_cap,
    }
}

fn emit(out: &mut dyn Write, format: Format, text: String, json: serde_json::Value) -> std::io::Result<()> {
    match format {
        Format::Text => out.write_all(text.as_bytes()),
        Format::Json => {
            let s = serde_json::to_string_pretty(&json).expect("json values serialize");
            writeln!(out, "{s}")
        }
    }
}

fn in_pool<R: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn dispatch(
    cfg: &RunConfig,
    pool: Option<&rayon::ThreadPool>,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let flags = &cfg.common;
    match &cfg.command {
        Command::Gen { family, params } => {
            let family: Family = family.parse()?;
            let h = generate_family(family, params)?;
            match flags.format {
                Format::Text => out.write_all(h.to_text().as_bytes())?,
                Format::Json => writeln!(out, "{}", h.to_json())?,
            }
            Ok(0)
        }
        Command::Validate { input } => {
            let h = read_input(input, stdin)?;
            let p = validate(&h);
            let bip = h.is_bipartite_graph();
            let a = incidence_matrix(&h);
            let tu = in_pool(pool, || is_totally_unimodular(&a, flags.tu_cap));
            emit(
                out,
                flags.format,
                report::validate_text(&h, &p, bip, &a, &tu),
                report::validate_json(&h, &p, bip, &a, &tu),
            )?;
            if !p.is_covering && !flags.graph_box {
                return Err(Error::Uncovered(h.uncovered()[0]).into());
            }
            Ok(0)
        }
        Command::Vertices { input } => {
            let h = read_input(input, stdin)?;
            let p = build_polytope(&h, flags.graph_box)?;
            let vs = in_pool(pool, || enumerate_vertices(&p, flags.vertex_cap))?;
            let dens = vertex_denominators(&vs);
            emit(out, flags.format, report::vertices_text(&vs, &dens), report::vertices_json(&vs))?;
            Ok(0)
        }
        Command::Count { input } => {
            let h = read_input(input, stdin)?;
            let n_max = flags
                .n_max
                .ok_or_else(|| Failure("count requires --n-max".into()))?;
            let counts = if flags.naive {
                if !h.uncovered().is_empty() && !flags.graph_box {
                    return Err(Error::Uncovered(h.uncovered()[0]).into());
                }
                let values = (0..=n_max)
                    .map(|n| count_naive(&h, n, DEFAULT_NAIVE_CAP))
                    .collect::<Result<Vec<_>>>()?;
                CountSequence::new(values)
            } else {
                let p = build_polytope(&h, flags.graph_box)?;
                in_pool(pool, || count_sequence(&p, n_max))?
            };
            emit(out, flags.format, report::counts_text(&counts), report::counts_json(&counts))?;
            Ok(0)
        }
        Command::Series { input } => {
            let h = read_input(input, stdin)?;
            let a = in_pool(pool, || analyze(&h, &options(flags)))?;
            emit(out, flags.format, report::analysis_text(&a), report::analysis_json(&a))?;
            Ok(0)
        }
        Command::Verify { input } => {
            let h = read_input(input, stdin)?;
            let a = in_pool(pool, || analyze(&h, &options(flags)))?;
            emit(out, flags.format, report::analysis_text(&a), report::analysis_json(&a))?;
            Ok(if a.all_pass() { 0 } else { 1 })
        }
    }
}

/// Worker count from `EHRGRAPH_THREADS`; `0` means sequential.
fn thread_pool() -> std::result::Result<Option<rayon::ThreadPool>, Failure> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(None);
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure(format!("{THREADS_ENV}: expected a nonnegative integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build()
        .map(Some)
        .map_err(|e| Failure(e.to_string()))
}

/// Parse `args` (including the program name) and run. Returns the exit code:
/// 0 success, 1 a failed applicable check in `verify`, 2 any error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let result = thread_pool().and_then(|pool| dispatch(&cfg, pool.as_ref(), stdin, out));
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
