//! Batch front end: instance generation, detection and counting runs,
//! stability extraction, and constant certification, with machine-readable
//! reports.
//!
//! Exit codes: 0 = success / everything holds, 1 = a certificate or
//! violation was produced, 2 = usage or input error.

mod rational;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fanostab::census::{count_octahedra, oracle_count_octahedra};
use fanostab::constants::verify_inequalities;
use fanostab::detect::{contains_fano, link_structures};
use fanostab::hypergraph::Generator;
use fanostab::stability::{run_stability, Mode, StabilityConfig};
use fanostab::{Hypergraph3, VertexSet};

use rational::parse_rational;
use report::{emit, Format};

#[derive(Parser)]
#[command(name = "fanostab", version, about = "Fano-plane-free hypergraph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a canonical instance and print its file form.
    Gen {
        /// One of: fano, complete, bn, tetrahedron, octahedron.
        kind: String,
        /// Vertex count, required for complete and bn.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Detection runs.
    Detect {
        #[command(subcommand)]
        what: DetectCmd,
    },
    /// Counting runs.
    Count {
        #[command(subcommand)]
        what: CountCmd,
    },
    /// Link structures of a 4-apex set.
    Links {
        file: PathBuf,
        /// Comma-separated apexes, e.g. 0,1,4,5.
        #[arg(long)]
        apexes: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bipartition stability extraction.
    Stability {
        file: PathBuf,
        /// Exact rational, as p/q or a decimal literal.
        #[arg(long)]
        delta: String,
        #[arg(long, default_value = "relaxed")]
        mode: String,
        /// Omit additive lower-order terms from the peel thresholds.
        #[arg(long)]
        drop_lower_order: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Constant-chain operations.
    Constants {
        #[command(subcommand)]
        what: ConstantsCmd,
    },
}

#[derive(Subcommand)]
enum DetectCmd {
    /// Search for a Fano copy; exit 1 with the witness when found.
    Fano {
        file: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum CountCmd {
    /// Count octahedra; --oracle switches to the brute-force route.
    Octahedra {
        file: PathBuf,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum ConstantsCmd {
    /// Certify every inequality of the delta ledger on (0, delta-max].
    Verify {
        /// Exact rational; defaults to the theorem range (1/36)^8.
        #[arg(long)]
        delta_max: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn load_hypergraph(path: &PathBuf) -> Result<Hypergraph3> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    Hypergraph3::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn init_threads() {
    let avail = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let cap = std::env::var("FSK_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(avail);
    fanostab::parallel::set_max_threads(cap.min(avail));
}

fn run() -> Result<u8> {
    init_threads();
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { kind, n, output } => {
            let gen = match (kind.as_str(), n) {
                ("fano", _) => Generator::Fano,
                ("tetrahedron", _) => Generator::Tetrahedron,
                ("octahedron", _) => Generator::Octahedron,
                ("complete", Some(n)) => Generator::Complete(n),
                ("bn", Some(n)) => Generator::Bn(n),
                ("complete", None) | ("bn", None) => bail!("--n is required for {kind}"),
                (other, _) => bail!("unknown kind '{other}'"),
            };
            let h = Hypergraph3::generate(gen)?;
            // the file format itself, regardless of --format
            write_out(&output, h.serialize())?;
            Ok(0)
        }
        Command::Detect {
            what: DetectCmd::Fano { file, output },
        } => {
            let h = load_hypergraph(&file)?;
            match contains_fano(&h) {
                Some(w) => {
                    let v = serde_json::json!({ "found": true, "witness": w });
                    emit_out(&output, &v)?;
                    Ok(1)
                }
                None => {
                    let v = serde_json::json!({ "found": false, "witness": null });
                    emit_out(&output, &v)?;
                    Ok(0)
                }
            }
        }
        Command::Count {
            what: CountCmd::Octahedra {
                file,
                oracle,
                output,
            },
        } => {
            let h = load_hypergraph(&file)?;
            let count = if oracle {
                oracle_count_octahedra(&h)
            } else {
                count_octahedra(&h)
            };
            let v = serde_json::json!({
                "count": count,
                "method": if oracle { "oracle" } else { "link-c4" },
            });
            emit_out(&output, &v)?;
            Ok(0)
        }
        Command::Links {
            file,
            apexes,
            output,
        } => {
            let h = load_hypergraph(&file)?;
            let parsed: Result<Vec<usize>, _> =
                apexes.split(',').map(|s| s.trim().parse::<usize>()).collect();
            let apexes = parsed.context("apexes must be comma-separated integers")?;
            if apexes.len() != 4 {
                bail!("exactly four apexes are required");
            }
            let s = VertexSet::new(apexes).context("apexes must be distinct")?;
            let fam = link_structures(&h, &s)?;
            let gs_pairs: Vec<(usize, usize, u32)> = fam
                .reduced
                .positive_pairs()
                .into_iter()
                .map(|(u, v, m)| (fam.reduced_vertices[u], fam.reduced_vertices[v], m))
                .collect();
            let v = serde_json::json!({
                "apexes": s.as_slice(),
                "linkEdges": fam.combined.edge_count(),
                "reducedEdges": fam.reduced.edge_count(),
                "maxMultiplicity": fam.reduced.max_mult(),
                "gs": {
                    "vertices": fam.reduced_vertices,
                    "pairs": gs_pairs,
                },
            });
            emit_out(&output, &v)?;
            Ok(0)
        }
        Command::Stability {
            file,
            delta,
            mode,
            drop_lower_order,
            seed,
            output,
        } => {
            let h = load_hypergraph(&file)?;
            let delta = parse_rational(&delta)?;
            let mode: Mode = mode.parse().map_err(|e: String| anyhow::anyhow!(e))?;
            let cfg = StabilityConfig {
                delta,
                mode,
                drop_lower_order,
                seed,
            };
            let outcome = run_stability(&h, &cfg)?;
            let is_partition = outcome.partition().is_some();
            emit_out(&output, &outcome.to_report_json())?;
            Ok(if is_partition { 0 } else { 1 })
        }
        Command::Constants {
            what: ConstantsCmd::Verify { delta_max, output },
        } => {
            let delta_max = match delta_max {
                Some(s) => parse_rational(&s)?,
                None => fanostab::constants::theorem_delta_max(),
            };
            let report = verify_inequalities(&delta_max)?;
            let ok = report.all_hold();
            if output.format == OutFormat::Table || output.format == OutFormat::Json {
                let text = if output.format == OutFormat::Table {
                    report.table()
                } else {
                    report.to_json()
                };
                write_out(&output, text)?;
            } else {
                emit_out(&output, &serde_json::to_value(&report)?)?;
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn emit_out(output: &OutputArgs, value: &serde_json::Value) -> Result<()> {
    let format = match output.format {
        OutFormat::Json | OutFormat::Table => Format::Json,
        OutFormat::Csv => Format::Csv,
    };
    write_out(output, emit(value, format))
}

fn write_out(output: &OutputArgs, text: String) -> Result<()> {
    match &output.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
