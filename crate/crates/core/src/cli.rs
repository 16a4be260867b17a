//! Command-line front end: argument definitions, dispatch and output records.
//!
//! Each command produces one or more [`Record`]s, printed one per line either
//! as `command key=value ...` or, under `--json`, as a flat JSON object.
//! Arbitrary-precision integers are JSON strings; counts are JSON numbers;
//! real values are printed with four decimals.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use thiserror::Error;

use crate::index::{
    decode_index, encode_residue, index_space_size, parse_factorization, FactoredModulus, QrError,
    QrIndex,
};
use crate::oracle::{certify_range, OracleError};
use crate::sampler::{
    compare_bit_budgets, sample_residue_by_index, sample_residue_classical, BitSource, OsBits,
    RandomBitLedger, SampleMethod, SampleReport, SamplerError, SeededBits,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VALIDATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "qrindex",
    version,
    about = "Index, encode and sample quadratic residues modulo a factored N"
)]
pub struct Cli {
    /// Emit one JSON object per line instead of key=value records.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Map an index in 1..=|QR(N)| to its residue.
    Decode {
        #[arg(long)]
        modulus: String,
        #[arg(long, value_parser = parse_decimal)]
        index: BigUint,
    },
    /// Map a quadratic residue to its index.
    Encode {
        #[arg(long)]
        modulus: String,
        #[arg(long, value_parser = parse_decimal)]
        residue: BigUint,
    },
    /// Print |QR(N)|.
    Size {
        #[arg(long)]
        modulus: String,
    },
    /// Draw uniform residues and report the random bits used.
    Sample {
        #[arg(long)]
        modulus: String,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Seed for the ChaCha8 bit source; OS entropy when omitted.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = MethodArg::Index)]
        method: MethodArg,
    },
    /// Certify the indexing against brute force for every N in 2..=max-n.
    Selftest {
        #[arg(long, default_value_t = 3000)]
        max_n: u64,
    },
    /// Compare random-bit usage of the index and classical samplers.
    Bench {
        #[arg(long)]
        modulus: String,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Index,
    Classical,
}

impl From<MethodArg> for SampleMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Index => SampleMethod::Index,
            MethodArg::Classical => SampleMethod::Classical,
        }
    }
}

fn parse_decimal(s: &str) -> Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected a decimal integer, found {s:?}"));
    }
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Qr(#[from] QrError),
    #[error(transparent)]
    Sampler(#[from] SamplerError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{failed} of {moduli} moduli failed certification")]
    SelftestFailed { failed: usize, moduli: u64 },
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Qr(e) => e.name(),
            CliError::Sampler(e) => e.name(),
            CliError::Oracle(e) => e.name(),
            CliError::SelftestFailed { .. } => "selftest-failed",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Qr(e)
            | CliError::Sampler(SamplerError::Qr(e))
            | CliError::Oracle(OracleError::Qr(e))
                if e.is_validation() =>
            {
                EXIT_VALIDATION
            }
            CliError::Oracle(OracleError::CapExceeded { .. }) => EXIT_USAGE,
            CliError::SelftestFailed { .. } => EXIT_FAILED,
            _ => EXIT_DOMAIN,
        }
    }
}

/// A field value in an output record.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Text(String),
    Big(BigUint),
    Count(u64),
    Real(f64),
}

impl Value {
    fn human(&self) -> String {
        match self {
            Value::Text(s) if s.chars().any(char::is_whitespace) => format!("{s:?}"),
            Value::Text(s) => s.clone(),
            Value::Big(n) => n.to_string(),
            Value::Count(n) => n.to_string(),
            Value::Real(x) => format!("{x:.4}"),
        }
    }

    fn json(&self) -> String {
        match self {
            Value::Text(s) => serde_json::to_string(s).expect("strings serialize"),
            Value::Big(n) => format!("\"{n}\""),
            Value::Count(n) => n.to_string(),
            Value::Real(x) => format!("{x:.4}"),
        }
    }
}

/// One line of output.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub command: &'static str,
    pub fields: Vec<(&'static str, Value)>,
}

impl Record {
    fn new(command: &'static str) -> Self {
        Record {
            command,
            fields: Vec::new(),
        }
    }

    fn with(mut self, key: &'static str, value: Value) -> Self {
        self.fields.push((key, value));
        self
    }

    fn text(self, key: &'static str, value: impl Into<String>) -> Self {
        self.with(key, Value::Text(value.into()))
    }

    fn big(self, key: &'static str, value: &BigUint) -> Self {
        self.with(key, Value::Big(value.clone()))
    }

    fn count(self, key: &'static str, value: u64) -> Self {
        self.with(key, Value::Count(value))
    }

    fn real(self, key: &'static str, value: f64) -> Self {
        self.with(key, Value::Real(value))
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let body: Vec<String> = std::iter::once(format!("\"command\":\"{}\"", self.command))
                .chain(
                    self.fields
                        .iter()
                        .map(|(k, v)| format!("\"{k}\":{}", v.json())),
                )
                .collect();
            format!("{{{}}}", body.join(","))
        } else {
            let mut line = self.command.to_string();
            for (k, v) in &self.fields {
                line.push(' ');
                line.push_str(k);
                line.push('=');
                line.push_str(&v.human());
            }
            line
        }
    }
}

fn modulus_record(command: &'static str, m: &FactoredModulus) -> Record {
    Record::new(command)
        .text("modulus", m.to_string())
        .big("n", m.n())
}

fn ledger_fields(record: Record, ledger: &RandomBitLedger) -> Record {
    record
        .count("bits", ledger.bits_consumed)
        .count("attempts", ledger.attempts)
        .count("candidates", ledger.candidates)
}

fn report_record(m: &FactoredModulus, seed: u64, report: &SampleReport) -> Record {
    modulus_record("bench", m)
        .text("method", report.method.to_string())
        .count("seed", seed)
        .count("samples", report.samples)
        .count("total_bits", report.total_bits)
        .count("total_attempts", report.total_attempts)
        .count("total_candidates", report.total_candidates)
        .real("mean_bits", report.mean_bits_per_sample())
        .real("mean_candidates", report.mean_candidates_per_sample())
        .real("floor", report.theoretical_floor)
}

/// Executes a parsed command and returns its output records.
pub fn run(command: &Command) -> Result<Vec<Record>, CliError> {
    match command {
        Command::Decode { modulus, index } => {
            let m = parse_factorization(modulus)?;
            let residue = decode_index(&m, &QrIndex::new(index.clone()))?;
            Ok(vec![modulus_record("decode", &m)
                .big("index", index)
                .big("residue", &residue.z)])
        }
        Command::Encode { modulus, residue } => {
            let m = parse_factorization(modulus)?;
            let index = encode_residue(&m, residue)?;
            Ok(vec![modulus_record("encode", &m)
                .big("residue", residue)
                .big("index", index.value())])
        }
        Command::Size { modulus } => {
            let m = parse_factorization(modulus)?;
            Ok(vec![modulus_record("size", &m)
                .big("phi", m.phi())
                .count("r", m.r() as u64)
                .big("size", &index_space_size(&m))])
        }
        Command::Sample {
            modulus,
            count,
            seed,
            method,
        } => {
            let m = parse_factorization(modulus)?;
            let mut src: Box<dyn BitSource> = match seed {
                Some(seed) => Box::new(SeededBits::new(*seed)),
                None => Box::new(OsBits::default()),
            };
            let method = SampleMethod::from(*method);
            let mut records = Vec::with_capacity(*count as usize + 1);
            let mut total = RandomBitLedger::default();
            for seq in 1..=*count {
                let (residue, ledger) = match method {
                    SampleMethod::Index => sample_residue_by_index(&m, &mut *src)?,
                    SampleMethod::Classical => sample_residue_classical(&m, &mut *src)?,
                };
                total.absorb(&ledger);
                let record = Record::new("sample")
                    .text("method", method.to_string())
                    .count("seq", seq)
                    .big("residue", &residue.z);
                records.push(ledger_fields(record, &ledger));
            }
            let summary = modulus_record("sample-total", &m)
                .text("method", method.to_string())
                .count("samples", *count);
            records.push(ledger_fields(summary, &total));
            Ok(records)
        }
        Command::Selftest { max_n } => {
            let summary = certify_range(*max_n)?;
            let mut records: Vec<Record> = summary
                .failures
                .iter()
                .flat_map(|cert| {
                    cert.violations.iter().map(move |v| {
                        Record::new("selftest-violation")
                            .count("n", cert.n)
                            .text("detail", v.to_string())
                    })
                })
                .collect();
            let status = if summary.passed() {
                "all N passed"
            } else {
                "FAILED"
            };
            records.push(
                Record::new("selftest")
                    .count("max_n", *max_n)
                    .count("moduli", summary.moduli)
                    .count("indices", summary.indices_checked)
                    .count("failures", summary.failures.len() as u64)
                    .text("status", status),
            );
            if summary.passed() {
                Ok(records)
            } else {
                for r in &records {
                    eprintln!("{}", r.render(false));
                }
                Err(CliError::SelftestFailed {
                    failed: summary.failures.len(),
                    moduli: summary.moduli,
                })
            }
        }
        Command::Bench {
            modulus,
            count,
            seed,
        } => {
            let m = parse_factorization(modulus)?;
            let seed = seed.unwrap_or_else(|| {
                let mut bits = OsBits::default();
                (0..64).fold(0u64, |acc, _| {
                    (acc << 1) | bits.next_bit().map_or(0, u64::from)
                })
            });
            let (index, classical) = compare_bit_budgets(&m, (*count).max(1), seed)?;
            Ok(vec![
                report_record(&m, seed, &index),
                report_record(&m, seed, &classical),
            ])
        }
    }
}

/// Parses `args`, runs the command and writes output; returns the exit code.
pub fn main_with_args<I, T>(
    args: I,
    out: &mut impl std::io::Write,
    err: &mut impl std::io::Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match run(&cli.command) {
        Ok(records) => {
            for record in records {
                if writeln!(out, "{}", record.render(cli.json)).is_err() {
                    return EXIT_FAILED;
                }
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(
            std::iter::once("qrindex").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn decode_record() {
        let (code, out, _) = run_args(&["decode", "--modulus", "3*5", "--index", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "decode modulus=3*5 n=15 index=2 residue=4\n");
        let (_, out, _) = run_args(&["--json", "decode", "--modulus", "3*5", "--index", "2"]);
        assert_eq!(
            out,
            "{\"command\":\"decode\",\"modulus\":\"3*5\",\"n\":\"15\",\"index\":\"2\",\"residue\":\"4\"}\n"
        );
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = run_args(&["decode", "--modulus", "3*5", "--index", "3"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.starts_with("error: index-out-of-range:"), "{err}");
        let (code, _, err) = run_args(&["size", "--modulus", "4*3"]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(err.starts_with("error: composite-claimed-prime:"), "{err}");
        let (code, _, _) = run_args(&["decode", "--modulus", "3*5", "--index", "0x2"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = run_args(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, err) = run_args(&["encode", "--modulus", "3*5", "--residue", "2"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.starts_with("error: not-a-residue:"), "{err}");
        let (code, _, _) = run_args(&["selftest", "--max-n", "1"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn text_values_with_spaces_are_quoted() {
        let record = Record::new("x").text("status", "all N passed");
        assert_eq!(record.render(false), "x status=\"all N passed\"");
        assert_eq!(
            record.render(true),
            "{\"command\":\"x\",\"status\":\"all N passed\"}"
        );
    }
}
