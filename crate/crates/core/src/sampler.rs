//! Uniform sampling from `QR(N)` with exact accounting of random bits.
//!
//! [`sample_residue_by_index`] draws an index uniformly from `1..=I_N` and
//! decodes it, so each sample costs about `log2 I_N` bits.
//! [`sample_residue_classical`] squares a uniformly drawn unit and pays for
//! `log2 N` bits per candidate plus the coprimality retries.
//!
//! Seeded sources use ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`),
//! handing out each 64-bit output least significant bit first. Reports from
//! [`compare_bit_budgets`] run the index sampler on stream 0 and the
//! classical sampler on stream 1 of the same seed.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::OsRng;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::index::{decode_index, index_space_size, FactoredModulus, QrError, QrIndex, Residue};

/// Rejection rounds allowed before a draw fails closed.
pub const MAX_ROUNDS: u64 = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamplerError {
    #[error("cannot draw from an empty range")]
    EmptyRange,
    #[error("bit source exhausted")]
    SourceExhausted,
    #[error("no acceptable draw after {rounds} rounds")]
    RejectionLimit { rounds: u64 },
    #[error("entropy source failed: {0}")]
    Entropy(String),
    #[error(transparent)]
    Qr(#[from] QrError),
}

impl SamplerError {
    pub fn name(&self) -> &'static str {
        match self {
            SamplerError::EmptyRange => "empty-range",
            SamplerError::SourceExhausted => "source-exhausted",
            SamplerError::RejectionLimit { .. } => "rejection-limit",
            SamplerError::Entropy(_) => "entropy",
            SamplerError::Qr(e) => e.name(),
        }
    }
}

/// A stream of fair coin flips.
pub trait BitSource {
    fn next_bit(&mut self) -> Result<bool, SamplerError>;
}

impl<S: BitSource + ?Sized> BitSource for &mut S {
    fn next_bit(&mut self) -> Result<bool, SamplerError> {
        (**self).next_bit()
    }
}

/// Deterministic bits from a seeded ChaCha8 generator.
#[derive(Debug, Clone)]
pub struct SeededBits {
    rng: ChaCha8Rng,
    word: u64,
    left: u32,
}

impl SeededBits {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        SeededBits {
            rng,
            word: 0,
            left: 0,
        }
    }
}

impl BitSource for SeededBits {
    fn next_bit(&mut self) -> Result<bool, SamplerError> {
        if self.left == 0 {
            self.word = self.rng.next_u64();
            self.left = 64;
        }
        let bit = self.word & 1 == 1;
        self.word >>= 1;
        self.left -= 1;
        Ok(bit)
    }
}

/// Bits from the operating system's entropy source.
#[derive(Debug, Default)]
pub struct OsBits {
    word: u64,
    left: u32,
}

impl BitSource for OsBits {
    fn next_bit(&mut self) -> Result<bool, SamplerError> {
        if self.left == 0 {
            let mut buf = [0u8; 8];
            OsRng
                .try_fill_bytes(&mut buf)
                .map_err(|e| SamplerError::Entropy(e.to_string()))?;
            self.word = u64::from_le_bytes(buf);
            self.left = 64;
        }
        let bit = self.word & 1 == 1;
        self.word >>= 1;
        self.left -= 1;
        Ok(bit)
    }
}

/// A fixed bit sequence; fails with [`SamplerError::SourceExhausted`] once used up.
#[derive(Debug, Clone)]
pub struct ScriptedBits {
    bits: Vec<bool>,
    pos: usize,
}

impl ScriptedBits {
    pub fn new(bits: Vec<bool>) -> Self {
        ScriptedBits { bits, pos: 0 }
    }

    /// Parses a string of `0`/`1`; whitespace is ignored.
    pub fn parse(script: &str) -> Option<Self> {
        script
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// The `width` low bits of `value`, most significant first.
    pub fn from_value(value: u64, width: u32) -> Self {
        Self::new((0..width).rev().map(|i| (value >> i) & 1 == 1).collect())
    }

    pub fn consumed(&self) -> usize {
        self.pos
    }

    pub fn remaining(&self) -> usize {
        self.bits.len() - self.pos
    }

    pub fn extend(&mut self, other: ScriptedBits) {
        self.bits.extend(other.bits);
    }
}

impl BitSource for ScriptedBits {
    fn next_bit(&mut self) -> Result<bool, SamplerError> {
        let bit = *self
            .bits
            .get(self.pos)
            .ok_or(SamplerError::SourceExhausted)?;
        self.pos += 1;
        Ok(bit)
    }
}

/// Counts every bit requested from a source.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RandomBitLedger {
    /// Bits requested from the source.
    pub bits_consumed: u64,
    /// Rejection rounds run by [`draw_uniform`].
    pub attempts: u64,
    /// Candidate roots drawn by the classical sampler.
    pub candidates: u64,
}

impl RandomBitLedger {
    pub fn absorb(&mut self, other: &RandomBitLedger) {
        self.bits_consumed += other.bits_consumed;
        self.attempts += other.attempts;
        self.candidates += other.candidates;
    }
}

/// Uniform value in `0..range` by rejection on `ceil(log2 range)` bits,
/// read most significant bit first.
pub fn draw_uniform<S: BitSource + ?Sized>(
    range: &BigUint,
    src: &mut S,
    ledger: &mut RandomBitLedger,
) -> Result<BigUint, SamplerError> {
    if range.is_zero() {
        return Err(SamplerError::EmptyRange);
    }
    if range.is_one() {
        return Ok(BigUint::zero());
    }
    let width = (range - 1u8).bits();
    for _ in 0..MAX_ROUNDS {
        ledger.attempts += 1;
        let mut value = BigUint::zero();
        for _ in 0..width {
            let bit = src.next_bit()?;
            ledger.bits_consumed += 1;
            value <<= 1u8;
            if bit {
                value |= BigUint::one();
            }
        }
        if value < *range {
            return Ok(value);
        }
    }
    Err(SamplerError::RejectionLimit { rounds: MAX_ROUNDS })
}

/// Draws a uniform index in `1..=I_N` and decodes it.
pub fn sample_residue_by_index<S: BitSource + ?Sized>(
    m: &FactoredModulus,
    src: &mut S,
) -> Result<(Residue, RandomBitLedger), SamplerError> {
    let mut ledger = RandomBitLedger::default();
    let offset = draw_uniform(&index_space_size(m), src, &mut ledger)?;
    let residue = decode_index(m, &QrIndex::new(offset + 1u8))?;
    Ok((residue, ledger))
}

/// Draws `x` uniformly from `1..N`, retries until `gcd(x, N) = 1`, and
/// returns `x^2 mod N`.
pub fn sample_residue_classical<S: BitSource + ?Sized>(
    m: &FactoredModulus,
    src: &mut S,
) -> Result<(Residue, RandomBitLedger), SamplerError> {
    let n = m.n();
    let range = n - 1u8;
    let mut ledger = RandomBitLedger::default();
    for _ in 0..MAX_ROUNDS {
        ledger.candidates += 1;
        let x = draw_uniform(&range, src, &mut ledger)? + 1u8;
        if x.gcd(n).is_one() {
            let z = (&x * &x) % n;
            return Ok((
                Residue {
                    z,
                    modulus: n.clone(),
                },
                ledger,
            ));
        }
    }
    Err(SamplerError::RejectionLimit { rounds: MAX_ROUNDS })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleMethod {
    Index,
    Classical,
}

impl fmt::Display for SampleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SampleMethod::Index => "index",
            SampleMethod::Classical => "classical",
        })
    }
}

/// Aggregate randomness usage over a batch of samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub method: SampleMethod,
    pub samples: u64,
    pub total_bits: u64,
    pub total_attempts: u64,
    pub total_candidates: u64,
    /// `log2 I_N`.
    pub theoretical_floor: f64,
}

impl SampleReport {
    pub fn mean_bits_per_sample(&self) -> f64 {
        self.total_bits as f64 / self.samples as f64
    }

    /// Mean candidate roots per sample (classical method; 0 for the index method).
    pub fn mean_candidates_per_sample(&self) -> f64 {
        self.total_candidates as f64 / self.samples as f64
    }
}

/// Runs a sampler `n_samples` times and totals its ledgers.
pub fn run_sampler<S: BitSource + ?Sized>(
    m: &FactoredModulus,
    method: SampleMethod,
    n_samples: u64,
    src: &mut S,
) -> Result<(Vec<Residue>, SampleReport), SamplerError> {
    let mut total = RandomBitLedger::default();
    let mut residues = Vec::with_capacity(n_samples as usize);
    for _ in 0..n_samples {
        let (residue, ledger) = match method {
            SampleMethod::Index => sample_residue_by_index(m, src)?,
            SampleMethod::Classical => sample_residue_classical(m, src)?,
        };
        total.absorb(&ledger);
        residues.push(residue);
    }
    let report = SampleReport {
        method,
        samples: n_samples,
        total_bits: total.bits_consumed,
        total_attempts: total.attempts,
        total_candidates: total.candidates,
        theoretical_floor: log2(&index_space_size(m)),
    };
    Ok((residues, report))
}

/// Index-method and classical reports over `n_samples` draws each.
pub fn compare_bit_budgets(
    m: &FactoredModulus,
    n_samples: u64,
    seed: u64,
) -> Result<(SampleReport, SampleReport), SamplerError> {
    let mut index_src = SeededBits::with_stream(seed, 0);
    let mut classical_src = SeededBits::with_stream(seed, 1);
    let (_, index) = run_sampler(m, SampleMethod::Index, n_samples, &mut index_src)?;
    let (_, classical) = run_sampler(m, SampleMethod::Classical, n_samples, &mut classical_src)?;
    Ok((index, classical))
}

/// Base-2 logarithm of a positive big integer.
pub fn log2(value: &BigUint) -> f64 {
    let bits = value.bits();
    if bits <= 64 {
        return (value.to_u64().expect("fits in 64 bits") as f64).log2();
    }
    let shift = bits - 64;
    let top = (value >> shift).to_u64().expect("fits in 64 bits") as f64;
    top.log2() + shift as f64
}
