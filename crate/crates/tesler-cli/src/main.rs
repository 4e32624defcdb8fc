//! `tesler` — exact computations on Tesler polytopes from the command line.
//!
//! Results go to stdout, diagnostics (including `elapsed_ms=`) to stderr.
//! Exit codes: 0 success, 1 usage error, 2 internal invariant failure.

use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde_json::{json, Value};

use tesler::{verify::Suite, Error, HookSums, QTPoly};

#[derive(Parser)]
#[command(
    name = "tesler",
    version,
    about = "Exact enumeration, volumes, faces and q,t-sums for Tesler polytopes",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Weights {
    Haglund,
    Gn,
}

#[derive(Subcommand)]
enum Command {
    /// Number of Tesler matrices with the given hook sums
    Count {
        /// Comma-separated nonnegative hook sums, e.g. 1,1,1
        #[arg(long)]
        hooks: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream every Tesler matrix with the given hook sums
    Enumerate {
        #[arg(long)]
        hooks: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Emit at most this many matrices
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Normalized volume of the polytope
    Volume {
        /// Hook sums for the Lidskii volume expansion
        #[arg(long)]
        hooks: Option<String>,
        /// Closed form for all-ones hook sums of this size
        #[arg(long)]
        ones: Option<usize>,
        /// Chan-Robbins-Yuen volume (Catalan product) of this size
        #[arg(long)]
        cry: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Face data: f-vector, h-vector, vertices, or simplicity
    Faces {
        #[arg(long)]
        hooks: String,
        #[arg(long)]
        fvector: bool,
        #[arg(long)]
        hvector: bool,
        #[arg(long)]
        vertices: bool,
        #[arg(long)]
        simple: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// q,t-weighted sum over all-ones Tesler matrices
    Hilbert {
        #[arg(long)]
        n: usize,
        /// haglund: diagonal-harmonics Hilbert series; gn: its alternant
        #[arg(long, value_enum)]
        weights: Weights,
        /// Evaluate the polynomial at integers "q,t"
        #[arg(long)]
        eval: Option<String>,
        /// Also compare against the independent combinatorial oracle
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the self-verification suites
    Verify {
        /// all, counts, volumes, faces, or harmonics
        #[arg(long, default_value = "all")]
        suite: String,
        /// Size bound for the checks
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => CliError::Internal(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit() // exits 0
        }
        Err(e) => {
            let _ = e.print();
            std::process::exit(1);
        }
    };
    let start = Instant::now();
    let outcome = run(cli.command);
    eprintln!("elapsed_ms={}", start.elapsed().as_millis());
    match outcome {
        Ok(()) => {}
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            std::process::exit(2);
        }
    }
}

fn parse_hooks(text: &str) -> Result<HookSums, CliError> {
    let mut values = Vec::new();
    for part in text.split(',') {
        let value: BigInt = part
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad hook sum {part:?}")))?;
        values.push(value);
    }
    HookSums::new(values).map_err(CliError::from)
}

fn emit(format: Format, command: &str, inputs: Value, value: Value, text: String) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => {
            let envelope = json!({
                "command": command,
                "inputs": inputs,
                "value": value,
            });
            println!("{envelope}");
        }
    }
}

fn decimal_strings(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

fn comma_joined(values: &[BigInt]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Count { hooks, format } => {
            let a = parse_hooks(&hooks)?;
            let count = tesler::count_tesler(&a);
            emit(
                format,
                "count",
                json!({ "hooks": hooks }),
                Value::String(count.to_string()),
                count.to_string(),
            );
            Ok(())
        }
        Command::Enumerate {
            hooks,
            format,
            limit,
        } => {
            let a = parse_hooks(&hooks)?;
            let limit = limit.unwrap_or(u64::MAX);
            if limit == 0 {
                return Ok(());
            }
            let mut emitted = 0u64;
            tesler::for_each_tesler_while(&a, |m| {
                match format {
                    Format::Text => println!("{m}"),
                    Format::Json => println!("{}", m.to_json()),
                }
                emitted += 1;
                emitted < limit
            });
            Ok(())
        }
        Command::Volume {
            hooks,
            ones,
            cry,
            format,
        } => {
            let picked = [hooks.is_some(), ones.is_some(), cry.is_some()]
                .iter()
                .filter(|&&p| p)
                .count();
            if picked != 1 {
                return Err(CliError::Usage(
                    "pass exactly one of --hooks, --ones, --cry".into(),
                ));
            }
            let (inputs, value) = if let Some(text) = hooks {
                let a = parse_hooks(&text)?;
                (json!({ "hooks": text }), tesler::lidskii_volume(&a))
            } else if let Some(n) = ones {
                (json!({ "ones": n }), tesler::vol_ones_closed(n)?)
            } else {
                let n = cry.unwrap();
                (json!({ "cry": n }), tesler::cry_volume(n)?)
            };
            emit(
                format,
                "volume",
                inputs,
                Value::String(value.to_string()),
                value.to_string(),
            );
            Ok(())
        }
        Command::Faces {
            hooks,
            fvector,
            hvector,
            vertices,
            simple,
            format,
        } => {
            let picked = [fvector, hvector, vertices, simple]
                .iter()
                .filter(|&&p| p)
                .count();
            if picked != 1 {
                return Err(CliError::Usage(
                    "pass exactly one of --fvector, --hvector, --vertices, --simple".into(),
                ));
            }
            let a = parse_hooks(&hooks)?;
            let reduced = tesler::reduce_hooks(&a);
            let inputs = json!({ "hooks": hooks });
            if fvector {
                let f = tesler::f_vector(&reduced)?;
                emit(format, "faces", inputs, decimal_strings(&f), comma_joined(&f));
            } else if hvector {
                let h = tesler::h_vector(&reduced)?;
                emit(format, "faces", inputs, decimal_strings(&h), comma_joined(&h));
            } else if simple {
                let s = tesler::is_simple(&a);
                emit(format, "faces", inputs, Value::Bool(s), s.to_string());
            } else {
                let vs = tesler::vertices(&reduced)?;
                match format {
                    Format::Text => {
                        for m in &vs {
                            println!("{m}");
                        }
                    }
                    Format::Json => {
                        let records: Vec<Value> = vs.iter().map(|m| m.to_json()).collect();
                        emit(
                            Format::Json,
                            "faces",
                            inputs,
                            Value::Array(records),
                            String::new(),
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Hilbert {
            n,
            weights,
            eval,
            oracle,
            format,
        } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let (series, oracle_poly, weight_name): (QTPoly, QTPoly, &str) = match weights {
                Weights::Haglund => (
                    tesler::hilbert_dh(n)?,
                    tesler::parking_gf(n)?,
                    "haglund",
                ),
                Weights::Gn => (
                    tesler::hilbert_alternant(n)?,
                    tesler::qt_catalan(n)?,
                    "gn",
                ),
            };
            let inputs = json!({ "n": n, "weights": weight_name });
            if oracle {
                let matches = series == oracle_poly;
                let text = if matches { "MATCH" } else { "MISMATCH" };
                emit(
                    format,
                    "hilbert",
                    inputs,
                    Value::String(text.to_string()),
                    text.to_string(),
                );
                if !matches {
                    return Err(CliError::Internal(
                        "weighted sum disagrees with its combinatorial oracle".into(),
                    ));
                }
            } else if let Some(point) = eval {
                let parts: Vec<&str> = point.split(',').collect();
                if parts.len() != 2 {
                    return Err(CliError::Usage("--eval expects two integers \"q,t\"".into()));
                }
                let q: BigInt = parts[0]
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad q value {:?}", parts[0])))?;
                let t: BigInt = parts[1]
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad t value {:?}", parts[1])))?;
                let value = series.eval(&q, &t);
                emit(
                    format,
                    "hilbert",
                    json!({ "n": n, "weights": weight_name, "eval": point }),
                    Value::String(value.to_string()),
                    value.to_string(),
                );
            } else {
                emit(
                    format,
                    "hilbert",
                    inputs,
                    series.to_json(),
                    series.to_string(),
                );
            }
            Ok(())
        }
        Command::Verify {
            suite,
            nmax,
            format,
        } => {
            let suite = Suite::parse(&suite)
                .ok_or_else(|| CliError::Usage(format!("unknown suite {suite:?}")))?;
            let results = tesler::verify::run_suite(suite, nmax);
            let failed = results.iter().filter(|r| !r.passed).count();
            match format {
                Format::Text => {
                    for r in &results {
                        let status = if r.passed { "PASS" } else { "FAIL" };
                        println!("{status} {} — {}", r.name, r.detail);
                    }
                    println!("{} checks, {} failed", results.len(), failed);
                }
                Format::Json => {
                    let checks: Vec<Value> = results
                        .iter()
                        .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
                        .collect();
                    let envelope = json!({
                        "command": "verify",
                        "inputs": { "nmax": nmax },
                        "value": checks,
                    });
                    println!("{envelope}");
                }
            }
            if failed > 0 {
                return Err(CliError::Internal(format!("{failed} checks failed")));
            }
            Ok(())
        }
    }
}
