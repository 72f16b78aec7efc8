//! Command-line surface over the dppasm library: enumeration with corpus
//! caching, exact counting, lattice-path encoding and rendering, the
//! permutation bijection, statistics, and equinumerosity verification.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 verification
//! mismatch.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dppasm::asm::enumerate_asms_jobs;
use dppasm::bijection::{dpp_from_perm, perm_from_dpp};
use dppasm::dpp::{enumerate_dpps_jobs, parse_dpp, serialize_dpp, Dpp, DppStats};
use dppasm::exact::{andrews_a, andrews_d, andrews_product, dpp_count_product, dpp_det, ExactScalar};
use dppasm::lattice::{decode, encode, PathFamily};
use dppasm::mrr::verify_mrr_jobs;
use dppasm::perm::Permutation;
use dppasm::render::{render_ascii, render_svg};

type CliError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(name = "dppasm", version, about = "Exact combinatorics of descending plane partitions and alternating sign matrices")]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,

    #[command(subcommand)]
    command: Command,
}

/// Global configuration shared by all subcommands.
#[derive(Args)]
struct ConfigArgs {
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Directory for cached enumeration corpora (created on demand)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Number of worker threads for enumerations
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Recompute even when a cached corpus exists
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate objects, one JSON document per line, in canonical order
    Enumerate {
        #[command(subcommand)]
        target: EnumerateTarget,
    },
    /// Count descending plane partitions of a dimension by one of three methods
    Count {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        method: CountMethod,
    },
    /// Encode a descending plane partition (JSON on stdin) as a path family
    Encode {
        #[arg(long)]
        dim: usize,
    },
    /// Decode a path family (JSON on stdin) back to its partition
    Decode,
    /// Render a path family (JSON on stdin)
    Render {
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
    /// Exact determinant evaluations
    Det {
        #[command(subcommand)]
        which: DetTarget,
    },
    /// Product form of Andrews' determinant
    Product {
        #[arg(long)]
        n: usize,
        /// Rational parameter, e.g. 2 or 1/2
        #[arg(long)]
        x: String,
    },
    /// The bijection with permutations (no special parts)
    Bijection {
        #[command(subcommand)]
        direction: BijectionDirection,
    },
    /// Exhaustive verifications
    Verify {
        #[command(subcommand)]
        what: VerifyTarget,
    },
    /// Statistics (k, n, p) of a single object read from stdin
    Stats {
        #[command(subcommand)]
        target: StatsTarget,
    },
}

#[derive(Subcommand)]
enum EnumerateTarget {
    /// Descending plane partitions of a dimension
    Dpp {
        #[arg(long)]
        dim: usize,
        /// Keep only partitions without special parts
        #[arg(long)]
        no_special: bool,
        /// Attach the (k, n, p) statistics to every line
        #[arg(long)]
        stats: bool,
    },
    /// Alternating sign matrices of an order
    Asm {
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethod {
    /// Exhaustive enumeration
    Enum,
    /// Determinant of the signed path-count matrix
    Det,
    /// Factorial product formula
    Product,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum DetTarget {
    /// Number of descending plane partitions of the dimension
    Dpp {
        #[arg(long)]
        dim: usize,
    },
    /// Andrews' determinant a_n(x)
    Andrews {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
    },
    /// The companion determinant d_n(x) = a_n(x+1)
    D {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
    },
}

#[derive(Subcommand)]
enum BijectionDirection {
    /// Permutation word to partition
    ToDpp {
        /// Space-separated one-line word, e.g. "6 3 1 4 2 5"
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
    /// Partition (JSON on stdin) to permutation word
    ToPerm {
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Bucket-by-bucket (k, n, p) equinumerosity for one dimension
    Mrr {
        #[arg(long)]
        dim: usize,
        /// Emit the report as JSON instead of a table
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum StatsTarget {
    /// Partition JSON on stdin
    Dpp {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
    /// Matrix JSON on stdin
    Asm {
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let usage_ok = matches!(e.kind(), DisplayHelp | DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if usage_ok { 0 } else { 1 });
        }
    };
    if cli.config.jobs < 1 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(1);
    }
    match run(&cli.config, cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(config: &ConfigArgs, command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Enumerate { target } => {
            let body = enumerate_with_cache(config, &target)?;
            emit(config, &body)?;
        }
        Command::Count { dim, method } => {
            if dim < 1 {
                return Err("--dim must be at least 1".into());
            }
            let value = match method {
                CountMethod::Enum => enumerate_dpps_jobs(dim, config.jobs).len().to_string(),
                CountMethod::Det => dpp_det(dim).to_string(),
                CountMethod::Product => dpp_count_product(dim).to_string(),
            };
            emit(config, &format!("{value}\n"))?;
        }
        Command::Encode { dim } => {
            let d = read_dpp_stdin()?;
            let family = encode(&d, dim)?;
            emit(config, &format!("{}\n", serde_json::to_string(&family)?))?;
        }
        Command::Decode => {
            let family = read_family_stdin()?;
            let d = decode(&family)?;
            emit(config, &format!("{}\n", serialize_dpp(&d)))?;
        }
        Command::Render { format } => {
            let family = read_family_stdin()?;
            let body = match format {
                RenderFormat::Ascii => render_ascii(&family),
                RenderFormat::Svg => render_svg(&family),
            };
            emit(config, &body)?;
        }
        Command::Det { which } => {
            let value = match which {
                DetTarget::Dpp { dim } => {
                    if dim < 1 {
                        return Err("--dim must be at least 1".into());
                    }
                    dpp_det(dim).to_string()
                }
                DetTarget::Andrews { n, x } => andrews_a(n, &parse_scalar(&x)?).to_string(),
                DetTarget::D { n, x } => andrews_d(n, &parse_scalar(&x)?).to_string(),
            };
            emit(config, &format!("{value}\n"))?;
        }
        Command::Product { n, x } => {
            let value = andrews_product(n, &parse_scalar(&x)?)?;
            emit(config, &format!("{value}\n"))?;
        }
        Command::Bijection { direction } => match direction {
            BijectionDirection::ToDpp { perm, format } => {
                let word: Vec<usize> = perm
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|_| format!("cannot parse permutation word {perm:?}"))?;
                let sigma = Permutation::from_word(word)?;
                let d = dpp_from_perm(&sigma);
                let body = match format {
                    TextFormat::Json => format!("{}\n", serialize_dpp(&d)),
                    TextFormat::Text => d.to_text(),
                };
                emit(config, &body)?;
            }
            BijectionDirection::ToPerm { dim } => {
                let d = read_dpp_stdin()?;
                let sigma = perm_from_dpp(&d, dim)?;
                let word: Vec<String> = sigma.word().iter().map(usize::to_string).collect();
                emit(config, &format!("{}\n", word.join(" ")))?;
            }
        },
        Command::Verify { what } => match what {
            VerifyTarget::Mrr { dim, json } => {
                if dim < 1 {
                    return Err("--dim must be at least 1".into());
                }
                let report = verify_mrr_jobs(dim, config.jobs);
                let body = if json {
                    format!("{}\n", serde_json::to_string(&report)?)
                } else {
                    report.to_table()
                };
                emit(config, &body)?;
                if !report.pass() {
                    return Ok(ExitCode::from(2));
                }
            }
        },
        Command::Stats { target } => match target {
            StatsTarget::Dpp { dim, format } => {
                let d = read_dpp_stdin()?;
                let stats = d.stats(dim)?;
                let body = match format {
                    TextFormat::Json => {
                        format!("{}\n", serde_json::to_string(&WithDim { m: dim, stats })?)
                    }
                    TextFormat::Text => format!("k={} n={} p={}\n", stats.k, stats.n, stats.p),
                };
                emit(config, &body)?;
            }
            StatsTarget::Asm { format } => {
                let text = read_stdin()?;
                let a: dppasm::Asm = serde_json::from_str(&text)?;
                let stats = a.stats();
                let body = match format {
                    TextFormat::Json => format!("{}\n", serde_json::to_string(&stats)?),
                    TextFormat::Text => format!("k={} n={} p={}\n", stats.k, stats.n, stats.p),
                };
                emit(config, &body)?;
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(serde::Serialize)]
struct WithDim {
    m: usize,
    #[serde(flatten)]
    stats: DppStats,
}

fn parse_scalar(text: &str) -> Result<ExactScalar, CliError> {
    Ok(text.parse::<ExactScalar>()?)
}

fn read_stdin() -> Result<String, CliError> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf)?;
    Ok(buf)
}

fn read_dpp_stdin() -> Result<Dpp, CliError> {
    Ok(parse_dpp(&read_stdin()?)?)
}

fn read_family_stdin() -> Result<PathFamily, CliError> {
    Ok(serde_json::from_str(&read_stdin()?)?)
}

fn emit(config: &ConfigArgs, body: &str) -> Result<(), CliError> {
    match &config.output {
        Some(path) => fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

/// Computes the JSON-lines corpus for an enumeration, reusing a cached copy
/// when the cache directory holds one for the same target, flags, and
/// library version.
fn enumerate_with_cache(config: &ConfigArgs, target: &EnumerateTarget) -> Result<String, CliError> {
    let key = match target {
        EnumerateTarget::Dpp { dim, no_special, stats } => {
            if *dim < 1 {
                return Err("--dim must be at least 1".into());
            }
            format!(
                "dpp-m{dim}{}{}-v{}.jsonl",
                if *no_special { "-nospecial" } else { "" },
                if *stats { "-stats" } else { "" },
                env!("CARGO_PKG_VERSION")
            )
        }
        EnumerateTarget::Asm { dim } => {
            if *dim < 1 {
                return Err("--dim must be at least 1".into());
            }
            format!("asm-m{dim}-v{}.jsonl", env!("CARGO_PKG_VERSION"))
        }
    };
    let cache_path = config.cache_dir.as_ref().map(|dir| dir.join(key));
    if !config.no_cache {
        if let Some(path) = &cache_path {
            if path.is_file() {
                return Ok(fs::read_to_string(path)?);
            }
        }
    }

    let mut body = String::new();
    match target {
        EnumerateTarget::Dpp { dim, no_special, stats } => {
            for d in enumerate_dpps_jobs(*dim, config.jobs) {
                let s = d.stats(*dim).expect("enumerated partition respects the bound");
                if *no_special && s.n > 0 {
                    continue;
                }
                if *stats {
                    #[derive(serde::Serialize)]
                    struct Line<'a> {
                        rows: &'a [Vec<u32>],
                        stats: DppStats,
                    }
                    body.push_str(&serde_json::to_string(&Line { rows: d.rows(), stats: s })?);
                } else {
                    body.push_str(&serialize_dpp(&d));
                }
                body.push('\n');
            }
        }
        EnumerateTarget::Asm { dim } => {
            for a in enumerate_asms_jobs(*dim, config.jobs) {
                body.push_str(&serde_json::to_string(&a)?);
                body.push('\n');
            }
        }
    }

    if !config.no_cache {
        if let Some(path) = &cache_path {
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir)?;
            }
            fs::write(path, &body)?;
        }
    }
    Ok(body)
}
