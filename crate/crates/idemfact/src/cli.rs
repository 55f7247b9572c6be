//! The `idemfact` command line: `factor`, `verify`, `ge2`, `gen` and `bench`.
//!
//! Exit codes: 0 success, 1 invalid certificate, 2 domain error, 64 usage
//! error, 65 malformed input, 74 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand};
use idemfact_core::certify::{verify_certificate, Verdict};
use idemfact_core::ge::{ge2_decompose, Ge2Strategy};
use idemfact_core::ipn::factor_singular;
use idemfact_core::rings::RingDescriptor;
use serde_json::Value;

use crate::codec::{
    decode_certificate, decode_matrix, encode_certificate, encode_ge_list, encode_matrix,
    parse_json, parse_ring_flag, peek_descriptor, to_canonical_string, JsonRing, ParseError,
};
use crate::gen::{singular_matrix, GenSpec, Sample};
use crate::with_ring;

pub const MAX_SIZE_VAR: &str = "IDEMFACT_MAX_SIZE";
pub const DEFAULT_MAX_SIZE: usize = 64;

pub const EXIT_INVALID: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] idemfact_core::Error),
    #[error("SizeTooLarge: {n}x{n} exceeds the limit of {max} set by {MAX_SIZE_VAR}")]
    TooLarge { n: usize, max: usize },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Domain(_) | CliError::TooLarge { .. } => EXIT_DOMAIN,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "idemfact",
    version,
    about = "Factor singular matrices into products of idempotents"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor a singular square matrix and write a certificate.
    Factor {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Check a certificate by re-multiplication.
    Verify {
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Decompose an invertible 2x2 matrix into elementary, diagonal and swap factors.
    Ge2 {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        out: String,
        /// `euclid` or `unit-shift:<x>` with `x` an element of the matrix's ring.
        #[arg(long, default_value = "euclid")]
        strategy: String,
    },
    /// Emit a seeded random singular matrix.
    Gen {
        #[arg(long, value_parser = parse_ring_flag, default_value = "integer")]
        ring: RingDescriptor,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        bound: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Time factor and verify over generated batches.
    Bench {
        #[arg(long, value_parser = parse_ring_flag, default_value = "integer")]
        ring: RingDescriptor,
        /// Repeat to benchmark several sizes.
        #[arg(long = "size", default_values_t = [2usize, 3, 4, 5])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        bound: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> CliResult<String> {
        let io_err = |source| CliError::Io {
            path: path.to_string(),
            source,
        };
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(io_err)?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(io_err)
        }
    }

    fn write(&mut self, path: &str, text: &str) -> CliResult<()> {
        let io_err = |source| CliError::Io {
            path: path.to_string(),
            source,
        };
        if path == "-" {
            self.stdout.write_all(text.as_bytes()).map_err(io_err)
        } else {
            fs::write(path, text).map_err(io_err)
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn max_size() -> CliResult<usize> {
    match std::env::var(MAX_SIZE_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{MAX_SIZE_VAR} must be a positive integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_SIZE),
    }
}

fn check_size(n: usize, max: usize) -> CliResult<()> {
    if n > max {
        return Err(CliError::TooLarge { n, max });
    }
    Ok(())
}

fn check_size_flag(n: usize, max: usize) -> CliResult<()> {
    if n == 0 || n > max {
        return Err(CliError::Usage(format!(
            "--size must be between 1 and {max}, got {n}"
        )));
    }
    Ok(())
}

fn dispatch(command: Command, io: &mut Io<'_>) -> CliResult<i32> {
    let max = max_size()?;
    match command {
        Command::Factor { input, out } => {
            let v = parse_json(&io.read(&input)?)?;
            let text = with_ring!(peek_descriptor(&v)?, |ring| factor_json(&ring, &v, max))?;
            io.write(&out, &text)?;
            Ok(0)
        }
        Command::Verify { input } => {
            let v = parse_json(&io.read(&input)?)?;
            let verdict = with_ring!(peek_descriptor(&v)?, |ring| verify_json(&ring, &v, max))?;
            match verdict {
                Verdict::Valid => {
                    io.write("-", "valid\n")?;
                    Ok(0)
                }
                Verdict::Invalid(reason) => {
                    io.write("-", &format!("invalid: {reason}\n"))?;
                    Ok(EXIT_INVALID)
                }
            }
        }
        Command::Ge2 {
            input,
            out,
            strategy,
        } => {
            let v = parse_json(&io.read(&input)?)?;
            let text = with_ring!(peek_descriptor(&v)?, |ring| ge2_json(&ring, &v, &strategy))?;
            io.write(&out, &text)?;
            Ok(0)
        }
        Command::Gen {
            ring,
            size,
            seed,
            bound,
            out,
        } => {
            check_size_flag(size, max)?;
            let spec = GenSpec {
                ring,
                size,
                seed,
                bound,
            };
            if bound == 0 {
                return Err(CliError::Usage("--bound must be at least 1".into()));
            }
            let text = with_ring!(ring, |r| gen_json(&r, &spec))?;
            io.write(&out, &text)?;
            Ok(0)
        }
        Command::Bench {
            ring,
            sizes,
            seed,
            bound,
            count,
        } => {
            for &n in &sizes {
                check_size_flag(n, max)?;
            }
            if bound == 0 || count == 0 {
                return Err(CliError::Usage(
                    "--bound and --count must be at least 1".into(),
                ));
            }
            let mut table = format!(
                "{:>4} {:>7} {:>14} {:>12}\n",
                "n", "count", "mean_factors", "mean_ms"
            );
            for n in sizes {
                let row = with_ring!(ring, |r| bench_row(&r, ring, n, seed, bound, count))?;
                table.push_str(&row);
            }
            io.write("-", &table)?;
            Ok(0)
        }
    }
}

fn factor_json<R: JsonRing>(ring: &R, v: &Value, max: usize) -> CliResult<String> {
    let m = decode_matrix(ring, v, "$")?;
    check_size(m.rows().max(m.cols()), max)?;
    let cert = factor_singular(&m)?;
    Ok(to_canonical_string(&encode_certificate(&cert)))
}

fn verify_json<R: JsonRing>(ring: &R, v: &Value, max: usize) -> CliResult<Verdict> {
    let decoded = decode_certificate(ring, v)?;
    let cert = &decoded.certificate;
    check_size(cert.target.rows().max(cert.target.cols()), max)?;
    if decoded.claimed_count != cert.count() {
        return Ok(Verdict::Invalid(format!(
            "meta.count is {} but there are {} factors",
            decoded.claimed_count,
            cert.count()
        )));
    }
    Ok(verify_certificate(cert))
}

fn parse_strategy<R: JsonRing>(ring: &R, s: &str) -> CliResult<Ge2Strategy<R::Elem>> {
    if s == "euclid" {
        return Ok(Ge2Strategy::Euclid);
    }
    let x = s.strip_prefix("unit-shift:").ok_or_else(|| {
        CliError::Usage(format!(
            "unknown strategy {s:?}; expected euclid or unit-shift:<x>"
        ))
    })?;
    let value = serde_json::from_str(x).unwrap_or_else(|_| Value::String(x.to_string()));
    let x = ring
        .decode(&value, "--strategy")
        .map_err(|e| CliError::Usage(format!("bad unit-shift element: {}", e.message)))?;
    Ok(Ge2Strategy::UnitShift(x))
}

fn ge2_json<R: JsonRing>(ring: &R, v: &Value, strategy: &str) -> CliResult<String> {
    let strategy = parse_strategy(ring, strategy)?;
    let m = decode_matrix(ring, v, "$")?;
    let factors = ge2_decompose(&m, &strategy)?;
    Ok(to_canonical_string(&encode_ge_list(ring, &factors)))
}

fn gen_json<R: JsonRing + Sample>(ring: &R, spec: &GenSpec) -> CliResult<String> {
    Ok(to_canonical_string(&encode_matrix(&singular_matrix(
        ring, spec,
    )?)))
}

fn bench_row<R: JsonRing + Sample>(
    ring: &R,
    desc: RingDescriptor,
    n: usize,
    seed: u64,
    bound: u64,
    count: usize,
) -> CliResult<String> {
    let mut factors = 0usize;
    let mut elapsed = 0f64;
    for i in 0..count {
        let spec = GenSpec {
            ring: desc,
            size: n,
            seed: seed.wrapping_add(i as u64),
            bound,
        };
        let m = singular_matrix(ring, &spec)?;
        let start = Instant::now();
        let cert = factor_singular(&m)?;
        let verdict = verify_certificate(&cert);
        elapsed += start.elapsed().as_secs_f64();
        if let Verdict::Invalid(reason) = verdict {
            return Err(CliError::Domain(idemfact_core::Error::Internal(format!(
                "certificate for seed {} failed verification: {reason}",
                spec.seed
            ))));
        }
        factors += cert.count();
    }
    let c = count as f64;
    Ok(format!(
        "{n:>4} {count:>7} {:>14.2} {:>12.3}\n",
        factors as f64 / c,
        1e3 * elapsed / c
    ))
}
