use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schurq::identity::{FamilyId, LemmaId};
use schurq::input::{corpus_from_json, polynomial_sequence_from_json, triangular_array_from_json};
use schurq::suite::{run, Command, ExpandTarget, OutputFormat, QlcSource, RunConfig};
use schurq::transforms::TriangularArray;
use schurq::{EProduct, Partition};

/// Exact verification runs for the Schur-positivity identity, its lemmas,
/// q-log-convexity of W_n(q) and the binomial-squared transform.
#[derive(Parser)]
#[command(name = "schurq", version)]
struct Cli {
    /// Worker threads. Reports are identical for any value.
    #[arg(long, global = true, env = "SCHURQ_WORKERS", default_value_t = 1)]
    workers: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// L(r) = R(r) for 1 <= r <= r_max.
    VerifyIdentity {
        #[arg(long, default_value_t = 12)]
        r_max: u32,
    },
    /// Lemma checks for 0 <= t <= t_max.
    VerifyLemmas {
        #[arg(long, default_value_t = 4)]
        t_max: u32,
        /// One of 3.2 .. 3.10, or `grouping`.
        #[arg(long)]
        lemma: Option<String>,
    },
    /// Coefficientwise nonnegativity of f_{n-1} f_{n+1} - f_n^2.
    VerifyQlc {
        #[arg(long, default_value_t = 30)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Source::W)]
        source: Source,
        /// JSON array of coefficient arrays; overrides --source.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Defect coefficients of W_n against 2 ps_{n-1}(L(r)), and the e-product
    /// shuffle relations.
    VerifyBridge {
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[arg(long, default_value_t = 8)]
        shuffle_r_max: u32,
    },
    /// Sign changes of alpha, the f(r/2) closed form, the alpha factorization
    /// and preservation of log-convexity.
    VerifyTransform {
        #[arg(long, default_value_t = 40)]
        n_max: u32,
        #[arg(long, default_value_t = 20)]
        factor_n_max: u32,
        #[arg(long, default_value_t = 25)]
        corpus_n_max: u32,
        #[arg(long, value_enum, default_value_t = Array::BinomialSquared)]
        array: Array,
        /// JSON triangular array; overrides --array.
        #[arg(long)]
        array_file: Option<PathBuf>,
        /// JSON corpus of log-convex sequences.
        #[arg(long)]
        corpus_file: Option<PathBuf>,
    },
    /// First negative defect coefficient of sum_k C(n,k)^m q^k.
    Counterexample {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 20)]
        n_max: u32,
    },
    /// Print a Schur expansion.
    Expand(ExpandArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    W,
    Narayana,
}

#[derive(Clone, Copy, ValueEnum)]
enum Array {
    BinomialSquared,
    Identity,
}

#[derive(Args)]
#[group(skip)]
#[command(group(
    clap::ArgGroup::new("target")
        .required(true)
        .args(["eproduct", "family", "jt", "lhs"])
))]
struct ExpandArgs {
    /// e-product such as `e2*e2`.
    #[arg(long)]
    eproduct: Option<String>,
    /// Family name such as `T21`; use with --t.
    #[arg(long)]
    family: Option<String>,
    /// Shape whose Jacobi-Trudi determinant to print, e.g. `[2,1]`.
    #[arg(long)]
    jt: Option<String>,
    /// r for the e-product side L(r).
    #[arg(long)]
    lhs: Option<u32>,
    /// Family parameter (default 0).
    #[arg(long)]
    t: Option<u32>,
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn command(cmd: Cmd) -> Result<Command, String> {
    let err = |e: schurq::Error| e.to_string();
    Ok(match cmd {
        Cmd::VerifyIdentity { r_max } => Command::VerifyIdentity { r_max },
        Cmd::VerifyLemmas { t_max, lemma } => Command::VerifyLemmas {
            t_max,
            lemma: lemma.map(|l| l.parse::<LemmaId>()).transpose().map_err(err)?,
        },
        Cmd::VerifyQlc { n_max, source, input } => {
            let source = match (input, source) {
                (Some(path), _) => QlcSource::Table(polynomial_sequence_from_json(&read(&path)?).map_err(err)?),
                (None, Source::W) => QlcSource::W,
                (None, Source::Narayana) => QlcSource::Narayana,
            };
            Command::VerifyQlc { n_max, source }
        }
        Cmd::VerifyBridge { n_max, shuffle_r_max } => Command::VerifyBridge { n_max, shuffle_r_max },
        Cmd::VerifyTransform {
            n_max,
            factor_n_max,
            corpus_n_max,
            array,
            array_file,
            corpus_file,
        } => {
            let array = match (array_file, array) {
                (Some(path), _) => triangular_array_from_json(&read(&path)?).map_err(err)?,
                (None, Array::BinomialSquared) => TriangularArray::BinomialSquared,
                (None, Array::Identity) => TriangularArray::Identity,
            };
            let corpus = corpus_file
                .map(|path| corpus_from_json(&read(&path)?).map_err(err))
                .transpose()?;
            Command::VerifyTransform {
                n_max,
                factor_n_max,
                corpus_n_max,
                array,
                corpus,
            }
        }
        Cmd::Counterexample { m, n_max } => Command::Counterexample { m, n_max },
        Cmd::Expand(a) if a.t.is_some() && a.family.is_none() => {
            return Err("--t only applies to --family".into())
        }
        Cmd::Expand(a) => Command::Expand(if let Some(p) = a.eproduct {
            ExpandTarget::EProduct(p.parse::<EProduct>().map_err(err)?)
        } else if let Some(f) = a.family {
            ExpandTarget::Family(FamilyId::new(f.parse().map_err(err)?, a.t.unwrap_or(0)))
        } else if let Some(shape) = a.jt {
            ExpandTarget::JacobiTrudi(shape.parse::<Partition>().map_err(err)?)
        } else {
            ExpandTarget::Lhs(a.lhs.expect("clap enforces one target"))
        }),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match cli.output {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    let config = match command(cli.command) {
        Ok(command) => RunConfig::new(command).workers(cli.workers).output(output),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let outcome = match run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &outcome.report).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{}", outcome.report);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    eprintln!(
        "{}: {} checks, {} failed, {:.2?} on {} worker(s)",
        config.command.name(),
        outcome.records.len(),
        outcome.failed(),
        start.elapsed(),
        config.workers
    );
    ExitCode::from(outcome.exit_code() as u8)
}
