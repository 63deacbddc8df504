//! `moseq`: analyses, certificates and sweeps for matroid h-vectors and pure
//! O-sequences.
//!
//! Exit status: 0 pass, 1 a verified failure inside a proven range, 2 usage
//! or input error, 3 truncated or undecided.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matroid_oseq::complexes::{enumerate_matroids_with, EnumerationConfig, EnumerationMode, FacetListing, DEFAULT_MAX_N};
use matroid_oseq::io::{complex_report, parse_complex, parse_input, parse_sequence, sequence_report, Input};
use matroid_oseq::osequences::{Purity, PurityOracle, DEFAULT_CAP_NODES};
use matroid_oseq::stanley::rank3_certificate;
use matroid_oseq::sweep::{assumption_probe, ccc_sweep, icp_sweep, matroid_sweep, SweepReport};
use matroid_oseq::{Error, Outcome};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "moseq", version, about = "Matroid h-vectors, pure O-sequences and rank-3 certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Node budget for each witness search.
    #[arg(long, default_value_t = DEFAULT_CAP_NODES, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    cap_nodes: u64,
    /// Worker threads; defaults to one per core.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    jobs: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
struct InputArg {
    /// JSON input file, or '-' for stdin.
    #[arg(short, long)]
    input: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report on a complex or a sequence.
    Analyze(InputArg),
    /// Decide purity of a sequence and print a witness.
    Witness(InputArg),
    /// Build and verify the rank-3 certificate of a matroid.
    #[command(name = "certify-rank3")]
    CertifyRank3(InputArg),
    /// List loopless matroids on n elements of a given rank.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// Largest n accepted; larger requests give a truncated report.
        #[arg(long, default_value_t = DEFAULT_MAX_N, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
        max_n: usize,
    },
    /// Shifted-sum theorem over all hypothesis pairs.
    #[command(name = "sweep-ccc")]
    SweepCcc {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
        max_r: i64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
        max_e: usize,
        /// Stop after this many pairs and flag the report truncated.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Interval property along coordinate lines of O-sequences.
    #[command(name = "sweep-icp")]
    SweepIcp {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
        max_r: i64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
        max_e: usize,
    },
    /// Rank-3 certificates and inequality suites over enumerated matroids.
    #[command(name = "sweep-matroids")]
    SweepMatroids {
        /// Labeled enumeration on every n up to this.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
        max_n: usize,
        /// Also sweep this n up to isomorphism.
        #[arg(long)]
        iso_n: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Probes of the two assumptions behind the higher-rank sketch.
    #[command(name = "probe-assumptions")]
    ProbeAssumptions {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
        max_n: usize,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        max_r: i64,
        /// Random socle-degree-4 pairs to draw.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn outcome_code(o: Outcome) -> u8 {
    match o {
        Outcome::Pass => 0,
        Outcome::Fail => EXIT_FAIL,
        Outcome::Undecided => EXIT_UNDECIDED,
    }
}

fn sweep_out(r: SweepReport) -> (Value, u8) {
    let code = outcome_code(r.outcome());
    let mut v = serde_json::to_value(&r).expect("reports serialize");
    v["outcome"] = json!(r.outcome());
    (v, code)
}

fn run(cli: &Cli, oracle: &PurityOracle) -> anyhow::Result<(Value, u8)> {
    Ok(match &cli.command {
        Command::Analyze(a) => match parse_input(&read_input(&a.input)?)? {
            Input::Complex(c) => {
                let r = complex_report(&c, oracle)?;
                let undecided = r["stanley"]["outcome"] == json!("undecided");
                (r, if undecided { EXIT_UNDECIDED } else { 0 })
            }
            Input::Sequence(h) => {
                let r = sequence_report(&h, oracle);
                let undecided = r["purity"]["pure"] == json!("undecided");
                (r, if undecided { EXIT_UNDECIDED } else { 0 })
            }
        },
        Command::Witness(a) => {
            let h = parse_sequence(&read_input(&a.input)?)?;
            let d = oracle.decide(&h);
            let code = if d.pure == Purity::Undecided { EXIT_UNDECIDED } else { 0 };
            (serde_json::to_value(d)?, code)
        }
        Command::CertifyRank3(a) => {
            let c = parse_complex(&read_input(&a.input)?)?;
            match rank3_certificate(&c, oracle) {
                Ok(cert) => (json!({"verified": cert.verify(), "certificate": cert}), 0),
                Err(e @ Error::CaseAnalysisViolated(_)) => {
                    (json!({"verified": false, "error": e.to_string(), "input": {"n": c.ground_size(), "facets": c.facets()}}), EXIT_FAIL)
                }
                Err(e @ Error::Undecided(_)) => (json!({"verified": false, "error": e.to_string()}), EXIT_UNDECIDED),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Enumerate { n, rank, iso, max_n } => {
            let mode = if *iso { EnumerationMode::UpToIsomorphism } else { EnumerationMode::Labeled };
            let params = json!({"n": n, "rank": rank, "mode": mode, "max_n": max_n});
            match enumerate_matroids_with(*n, *rank, mode, &EnumerationConfig { max_n: *max_n }) {
                Ok(list) => {
                    let listing: Vec<FacetListing> = list.iter().map(FacetListing::from).collect();
                    (json!({"parameters": params, "truncated": false, "count": listing.len(), "matroids": listing}), 0)
                }
                Err(e @ Error::CapExceeded { .. }) => (
                    json!({"parameters": params, "truncated": true, "reason": e.to_string(), "count": 0, "matroids": []}),
                    EXIT_UNDECIDED,
                ),
                Err(e) => return Err(e.into()),
            }
        }
        Command::SweepCcc { max_r, max_e, limit } => sweep_out(ccc_sweep(*max_r, *max_e, *limit, oracle)),
        Command::SweepIcp { max_r, max_e } => sweep_out(icp_sweep(*max_r, *max_e, oracle)),
        Command::SweepMatroids { max_n, iso_n, limit } => {
            let cap = (*max_n).max(iso_n.unwrap_or(0));
            sweep_out(matroid_sweep(*max_n, *iso_n, cap, *limit, oracle)?)
        }
        Command::ProbeAssumptions { max_n, max_r, samples, seed } => {
            if *max_n > DEFAULT_MAX_N {
                bail!("--max-n {max_n} exceeds {DEFAULT_MAX_N}");
            }
            sweep_out(assumption_probe(*max_n, *max_r, *samples, *seed, oracle)?)
        }
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Two-column rendering of the JSON report: one row per leaf, nested objects
/// flattened to dotted keys, arrays kept inline.
fn table(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) if !m.is_empty() => {
                for (k, x) in m {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, rows);
                }
            }
            other => rows.push((prefix.to_string(), scalar(other))),
        }
    }
    let mut rows = Vec::new();
    walk("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, x)| format!("{k:<width$}  {x}\n")).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j as usize).build_global() {
            eprintln!("moseq: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let oracle = PurityOracle::new(cli.common.cap_nodes);
    let (report, code) = match run(&cli, &oracle) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("moseq: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = match cli.common.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
        Format::Table => table(&report),
    };
    let written = match &cli.common.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    };
    if let Err(e) = written {
        eprintln!("moseq: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(code)
}
