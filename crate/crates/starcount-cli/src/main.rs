//! Command-line front end: generate instances, compute exact counts, run
//! the estimators, and sweep benchmarks — all reproducible from a seed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use starcount::bench::{run_sweep, write_csv, SweepSpec};
use starcount::directed::{
    estimate_path2, exactly_in_out_stars, LPrime, Path2Params, Path2Report, RatioBound,
};
use starcount::estimator::{count_stars, EstimateReport, EstimatorParams};
use starcount::exact::{sqrt_weight_total, ExactCounts};
use starcount::instances::{load_csv, load_edge_list, GeneratedInstance, GeneratorSpec};
use starcount::{rng_from_seed, DegreeSide, Error, Graph, TableColumn};

/// Exit codes: 0 success, 2 parse errors, 3 constraint violations and
/// invalid arguments, 4 degree-ratio violations, 1 everything else.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } => 2,
        Error::InvalidArgument(_) | Error::Constraint(_) | Error::UnknownVertex { .. } => 3,
        Error::RatioViolation { .. } => 4,
        _ => 1,
    }
}

#[derive(Parser)]
#[command(
    name = "starcount",
    about = "Estimate star counts and join sizes from magnitude-proportional samples",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Star counts over total degrees (graphs) or label counts (tables).
    Undirected,
    /// Directed stars with all arcs pointing into the center.
    InStar,
    /// Directed stars with all arcs pointing out of the center.
    OutStar,
    /// Directed length-two paths under a bounded degree ratio.
    Path2,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance from a JSON spec and write it out.
    Gen {
        /// Inline generator spec, e.g. '{"family":"circulant","n":10,"d":4}'.
        #[arg(long, conflicts_with = "spec_file")]
        spec: Option<String>,
        /// Read the generator spec from a JSON file.
        #[arg(long)]
        spec_file: Option<PathBuf>,
        /// Output path (edge list for graphs, CSV for tables); stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the spec JSON next to the output, for reproducibility.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Compute exact counts by brute force and print them as JSON.
    Exact {
        /// Edge-list input.
        #[arg(long, conflicts_with = "csv")]
        input: Option<PathBuf>,
        /// CSV input (requires --column).
        #[arg(long, requires = "column")]
        csv: Option<PathBuf>,
        /// Column to ingest from the CSV.
        #[arg(long)]
        column: Option<String>,
        /// Values of p, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        p: Vec<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an estimator and print its report.
    Estimate {
        #[arg(long, conflicts_with = "csv")]
        input: Option<PathBuf>,
        #[arg(long, requires = "column")]
        csv: Option<PathBuf>,
        #[arg(long)]
        column: Option<String>,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long)]
        epsilon: f64,
        /// Seed; falls back to STARCOUNT_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Mode::Undirected)]
        mode: Mode,
        /// Degree-ratio bound (required for --mode path2).
        #[arg(long)]
        r: Option<f64>,
        /// Normalizer L' for path2; computed exactly (with a warning) if absent.
        #[arg(long)]
        l_prime: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a benchmark sweep and emit one row per (instance, trial).
    Bench {
        /// Sweep spec JSON: {"instances":[{"id":...,"generator":...,"p":...,"epsilon":...}]}.
        #[arg(long)]
        sweep: PathBuf,
        #[arg(long, default_value_t = 1)]
        trials: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Measure wall time per row (off by default so bytes are reproducible).
        #[arg(long)]
        timing: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("STARCOUNT_SEED") {
        Ok(text) => text
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("STARCOUNT_SEED is not a u64: {text:?}"))),
        Err(_) => Ok(0),
    }
}

fn json_parse_error(err: &serde_json::Error) -> Error {
    Error::Parse {
        line: err.line(),
        message: err.to_string(),
    }
}

fn write_output(bytes: &[u8], out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn to_pretty_json<T: serde::Serialize>(value: &T) -> Result<Vec<u8>, Error> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text.into_bytes())
}

enum Input {
    Graph(Graph),
    Table(TableColumn),
}

fn load_input(
    input: Option<&Path>,
    csv: Option<&Path>,
    column: Option<&str>,
) -> Result<Input, Error> {
    match (input, csv) {
        (Some(path), None) => Ok(Input::Graph(load_edge_list(path)?)),
        (None, Some(path)) => {
            let column =
                column.ok_or_else(|| Error::InvalidArgument("--csv requires --column".into()))?;
            Ok(Input::Table(load_csv(path, column)?))
        }
        _ => Err(Error::InvalidArgument(
            "exactly one of --input or --csv is required".into(),
        )),
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Gen {
            spec,
            spec_file,
            out,
            manifest,
        } => {
            let text = match (spec, spec_file) {
                (Some(inline), None) => inline,
                (None, Some(path)) => fs::read_to_string(path)?,
                _ => {
                    return Err(Error::InvalidArgument(
                        "exactly one of --spec or --spec-file is required".into(),
                    ))
                }
            };
            let spec: GeneratorSpec =
                serde_json::from_str(&text).map_err(|e| json_parse_error(&e))?;
            let mut bytes = Vec::new();
            match spec.build()? {
                GeneratedInstance::Graph(g) => {
                    starcount::instances::write_edge_list(&g, &mut bytes)?;
                }
                GeneratedInstance::Table(t) => {
                    bytes.extend_from_slice(b"label\n");
                    for i in 0..t.label_count() {
                        for _ in 0..t.count(i) {
                            bytes.extend_from_slice(t.label(i).as_bytes());
                            bytes.push(b'\n');
                        }
                    }
                }
            }
            write_output(&bytes, out.as_deref())?;
            if let Some(path) = manifest {
                write_output(&to_pretty_json(&spec)?, Some(&path))?;
            }
            Ok(())
        }
        Command::Exact {
            input,
            csv,
            column,
            p,
            out,
        } => {
            let counts = match load_input(input.as_deref(), csv.as_deref(), column.as_deref())? {
                Input::Graph(g) => ExactCounts::for_graph(&g, &p)?,
                Input::Table(t) => ExactCounts::for_table(&t, &p),
            };
            write_output(&to_pretty_json(&counts)?, out.as_deref())
        }
        Command::Estimate {
            input,
            csv,
            column,
            p,
            epsilon,
            seed,
            mode,
            r,
            l_prime,
            out,
            format,
        } => {
            let seed = resolve_seed(seed)?;
            let loaded = load_input(input.as_deref(), csv.as_deref(), column.as_deref())?;
            let bytes = match (mode, loaded) {
                (Mode::Undirected, Input::Graph(g)) => {
                    let params = EstimatorParams::new(p, epsilon, seed)?;
                    let oracle = g.weighted_oracle()?;
                    let mut rng = rng_from_seed(seed);
                    let report = count_stars(&oracle, g.vertex_count(), &params, &mut rng)?;
                    render_estimate(&report, format)?
                }
                (Mode::Undirected, Input::Table(t)) => {
                    let params = EstimatorParams::new(p, epsilon, seed)?;
                    let oracle = t.weighted_oracle()?;
                    let mut rng = rng_from_seed(seed);
                    let report = count_stars(&oracle, t.label_count(), &params, &mut rng)?;
                    render_estimate(&report, format)?
                }
                (Mode::InStar | Mode::OutStar, Input::Graph(g)) => {
                    let side = if matches!(mode, Mode::InStar) {
                        DegreeSide::In
                    } else {
                        DegreeSide::Out
                    };
                    let params = EstimatorParams::new(p, epsilon, seed)?;
                    let mut rng = rng_from_seed(seed);
                    let report = exactly_in_out_stars(&g, side, &params, &mut rng)?;
                    render_estimate(&report, format)?
                }
                (Mode::Path2, Input::Graph(g)) => {
                    let r = r.ok_or_else(|| {
                        Error::InvalidArgument("--mode path2 requires --r".into())
                    })?;
                    let params = Path2Params::new(RatioBound::new(r)?, epsilon, seed)?;
                    let normalizer = match l_prime {
                        Some(value) => LPrime::provided(value),
                        None => {
                            eprintln!(
                                "warning: computing L' exactly with a full scan \
                                 (pass --l-prime to supply it)"
                            );
                            LPrime::exact(sqrt_weight_total(&g)?)
                        }
                    };
                    let mut rng = rng_from_seed(seed);
                    let report = estimate_path2(&g, &params, normalizer, &mut rng)?;
                    render_path2(&report, format)?
                }
                (_, Input::Table(_)) => {
                    return Err(Error::InvalidArgument(
                        "directed modes need an edge-list input".into(),
                    ))
                }
            };
            write_output(&bytes, out.as_deref())
        }
        Command::Bench {
            sweep,
            trials,
            seed,
            out,
            format,
            timing,
        } => {
            let seed = resolve_seed(seed)?;
            let text = fs::read_to_string(sweep)?;
            let spec: SweepSpec = serde_json::from_str(&text).map_err(|e| json_parse_error(&e))?;
            let rows = run_sweep(&spec, trials, seed, timing)?;
            let bytes = match format {
                Format::Csv => {
                    let mut bytes = Vec::new();
                    write_csv(&rows, &mut bytes)?;
                    bytes
                }
                Format::Json => to_pretty_json(&rows)?,
            };
            write_output(&bytes, out.as_deref())
        }
    }
}

fn render_estimate(report: &EstimateReport, format: Format) -> Result<Vec<u8>, Error> {
    match format {
        Format::Json => to_pretty_json(report),
        Format::Csv => {
            let q = &report.queries;
            Ok(format!(
                "estimate,p,epsilon,seed,iterations,final_guess,degree,neighbor,random_edge,magnitude,row_samples,epsilon_clamped\n\
                 {},{},{},{},{},{},{},{},{},{},{},{}\n",
                report.estimate,
                report.p,
                report.epsilon,
                report.seed,
                report.iterations,
                report.final_guess,
                q.degree_queries,
                q.neighbor_queries,
                q.random_edge_queries,
                q.magnitude_queries,
                q.row_samples,
                report.epsilon_clamped,
            )
            .into_bytes())
        }
    }
}

fn render_path2(report: &Path2Report, format: Format) -> Result<Vec<u8>, Error> {
    match format {
        Format::Json => to_pretty_json(report),
        Format::Csv => {
            let q = &report.queries;
            Ok(format!(
                "estimate,L_prime,r,epsilon,accepted,rejected,degree,neighbor,random_edge,magnitude,row_samples,seed\n\
                 {},{},{},{},{},{},{},{},{},{},{},{}\n",
                report.estimate,
                report.l_prime,
                report.r,
                report.epsilon,
                report.accepted,
                report.rejected,
                q.degree_queries,
                q.neighbor_queries,
                q.random_edge_queries,
                q.magnitude_queries,
                q.row_samples,
                report.seed,
            )
            .into_bytes())
        }
    }
}
