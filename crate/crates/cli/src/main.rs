//! `cubicbox` command line: build, verify, gen, bench, export.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use cubicbox::document::{to_obj, BoxDocument};
use cubicbox::graph::{parse_graph, random_cubic, remove_random_edges, serialize_graph};
use cubicbox::{build_representation, construct, verify, Format, Graph, PipelineError, Provenance};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "cubicbox", version, about = "Touching 3-box representations of graphs with maximum degree 3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify a box representation of a graph.
    Build {
        input: PathBuf,
        #[arg(long, default_value = "edgelist")]
        format: Format,
        /// Box document path (standard output if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the vertex partition of the cubic completion as JSON.
        #[arg(long)]
        partition_out: Option<PathBuf>,
        /// Also write the per-axis intervals of the cubic completion as JSON.
        #[arg(long)]
        intervals_out: Option<PathBuf>,
    },
    /// Check a box document against a graph. Exit status 1 if it fails.
    Verify {
        graph: PathBuf,
        boxes: PathBuf,
        #[arg(long, default_value = "edgelist")]
        format: Format,
    },
    /// Generate a random cubic graph, optionally with edges removed.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fraction of the cubic graph's edges to delete.
        #[arg(long, default_value_t = 0.0)]
        max_degree_3_fraction: f64,
        #[arg(long, default_value = "edgelist")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time construction (without verification) on random cubic graphs.
    Bench {
        /// Comma-separated even orders.
        #[arg(long, value_delimiter = ',', default_values_t = [10_000usize, 100_000, 1_000_000])]
        sizes: Vec<usize>,
        /// Number of seeds per size.
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        /// CSV path (standard output if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a box document as a Wavefront OBJ scene.
    Export {
        boxes: PathBuf,
        #[arg(long)]
        obj: PathBuf,
    },
}

/// Input, schema and usage problems; exit status 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

fn input<T>(r: Result<T>) -> Result<T, InputError> {
    r.map_err(InputError)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).context("writing to standard output"),
    }
}

fn load_graph(path: &Path, format: Format) -> Result<Graph> {
    let text = read(path)?;
    parse_graph(&text, format).with_context(|| format!("parsing {}", path.display()))
}

fn input_hash(g: &Graph) -> String {
    let digest = Sha256::digest(serialize_graph(g, Format::EdgeList).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn build(
    input_path: &Path,
    format: Format,
    out: Option<&Path>,
    partition_out: Option<&Path>,
    intervals_out: Option<&Path>,
) -> Result<ExitCode, InputError> {
    let g = input(load_graph(input_path, format))?;
    let rep = match build_representation(&g) {
        Ok(rep) => rep,
        Err(PipelineError::Graph(e)) => return Err(InputError(anyhow::Error::new(e).context("invalid input graph"))),
        Err(PipelineError::Verification(report)) => {
            eprintln!("error: constructed boxes failed verification");
            eprintln!("{}", serde_json::to_string_pretty(&report).expect("report serialises"));
            return Ok(ExitCode::from(1));
        }
        Err(e) => {
            eprintln!("error: construction failed: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let provenance =
        Provenance { input_hash: input_hash(&g), seed: None, tool_version: env!("CARGO_PKG_VERSION").to_string() };
    let doc = BoxDocument::new(&rep.boxes, provenance);
    if let Some(p) = partition_out {
        write_out(Some(p), &(serde_json::to_string_pretty(&rep.partition)? + "\n"))?;
    }
    if let Some(p) = intervals_out {
        write_out(Some(p), &(serde_json::to_string_pretty(&rep.intervals)? + "\n"))?;
    }
    write_out(out, &doc.to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(graph: &Path, boxes: &Path, format: Format) -> Result<ExitCode, InputError> {
    let g = input(load_graph(graph, format))?;
    let doc = input(BoxDocument::from_json(&read(boxes)?).with_context(|| format!("reading {}", boxes.display())))?;
    if doc.n != g.vertex_count() {
        return Err(InputError(anyhow::anyhow!(
            "graph has {} vertices but the box document has {}",
            g.vertex_count(),
            doc.n
        )));
    }
    let report = verify(&g, &doc.boxes());
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn gen(n: usize, seed: u64, fraction: f64, format: Format, out: Option<&Path>) -> Result<ExitCode, InputError> {
    if !(0.0..=1.0).contains(&fraction) {
        return Err(InputError(anyhow::anyhow!("--max-degree-3-fraction must lie in [0, 1], got {fraction}")));
    }
    let cubic = random_cubic(n, seed)?;
    let g = if fraction > 0.0 { remove_random_edges(&cubic, fraction, seed) } else { cubic };
    write_out(out, &serialize_graph(&g, format))?;
    Ok(ExitCode::SUCCESS)
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn bench(sizes: &[usize], seeds: u64, out: Option<&Path>) -> Result<ExitCode, InputError> {
    if seeds == 0 {
        return Err(InputError(anyhow::anyhow!("--seeds must be positive")));
    }
    let mut csv = String::from("n,runs,median_ms,min_ms,max_ms,stddev_ms,ns_per_vertex\n");
    for &n in sizes {
        let mut times = Vec::new();
        for seed in 0..seeds {
            let g = random_cubic(n, seed)?;
            let start = Instant::now();
            match construct(&g) {
                Ok(rep) => {
                    times.push(start.elapsed());
                    drop(rep);
                }
                Err(e) => {
                    eprintln!("error: construction failed for n = {n}, seed {seed}: {e}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        times.sort_unstable();
        let ms: Vec<f64> = times.iter().map(|&t| millis(t)).collect();
        let mean = ms.iter().sum::<f64>() / ms.len() as f64;
        let var = ms.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / ms.len() as f64;
        let median = ms[ms.len() / 2];
        csv.push_str(&format!(
            "{n},{},{median:.3},{:.3},{:.3},{:.3},{:.1}\n",
            ms.len(),
            ms[0],
            ms[ms.len() - 1],
            var.sqrt(),
            median * 1e6 / n as f64
        ));
    }
    write_out(out, &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn export(boxes: &Path, obj: &Path) -> Result<ExitCode, InputError> {
    let doc = input(BoxDocument::from_json(&read(boxes)?).with_context(|| format!("reading {}", boxes.display())))?;
    write_out(Some(obj), &to_obj(&doc))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Build { input, format, out, partition_out, intervals_out } => {
            build(&input, format, out.as_deref(), partition_out.as_deref(), intervals_out.as_deref())
        }
        Command::Verify { graph, boxes, format } => verify_cmd(&graph, &boxes, format),
        Command::Gen { n, seed, max_degree_3_fraction, format, out } => {
            gen(n, seed, max_degree_3_fraction, format, out.as_deref())
        }
        Command::Bench { sizes, seeds, out } => bench(&sizes, seeds, out.as_deref()),
        Command::Export { boxes, obj } => export(&boxes, &obj),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
