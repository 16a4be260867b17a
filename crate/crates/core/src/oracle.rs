//! Brute-force ground truth for the indexing.
//!
//! Everything in here works on plain `u64` by exhaustive scan and never calls
//! the root-finding or CRT code in [`crate::numeric`]. The only library entry
//! points it touches are the ones it certifies.

use std::collections::HashMap;
use std::fmt;
use std::thread;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::index::{
    decode_index, encode_residue, index_space_size, FactoredModulus, QrError, QrIndex,
};

/// Largest modulus the oracle will scan by default.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modulus {n} is outside the oracle range 2..={cap}")]
    CapExceeded { n: BigUint, cap: u64 },
    #[error(transparent)]
    Qr(#[from] QrError),
}

impl OracleError {
    pub fn name(&self) -> &'static str {
        match self {
            OracleError::CapExceeded { .. } => "cap-exceeded",
            OracleError::Qr(e) => e.name(),
        }
    }
}

/// `QR(n)` as an ascending list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QrTable {
    pub n: u64,
    pub residues: Vec<u64>,
}

impl QrTable {
    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, z: u64) -> bool {
        self.residues.binary_search(&z).is_ok()
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient by counting units.
pub fn count_units(n: u64) -> u64 {
    (1..n).filter(|&x| gcd(x, n) == 1).count() as u64
}

/// Squares every unit modulo `n` and collects the distinct results.
pub fn enumerate_qr(n: u64) -> Result<QrTable, OracleError> {
    enumerate_qr_with_cap(n, DEFAULT_CAP)
}

pub fn enumerate_qr_with_cap(n: u64, cap: u64) -> Result<QrTable, OracleError> {
    if n < 2 || n > cap {
        return Err(OracleError::CapExceeded {
            n: BigUint::from(n),
            cap,
        });
    }
    let mut seen = vec![false; n as usize];
    for x in 1..n {
        if gcd(x, n) == 1 {
            seen[((x as u128 * x as u128) % n as u128) as usize] = true;
        }
    }
    let residues = seen
        .iter()
        .enumerate()
        .filter_map(|(z, &hit)| hit.then_some(z as u64))
        .collect();
    Ok(QrTable { n, residues })
}

/// Prime factorization by trial division, ascending.
pub fn factor_trial_division(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            factors.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// Factors `n` by trial division and builds the validated modulus.
pub fn factored(n: u64) -> Result<FactoredModulus, QrError> {
    FactoredModulus::from_prime_powers(
        factor_trial_division(n)
            .into_iter()
            .map(|(p, k)| (BigUint::from(p), k)),
    )
}

/// One way the indexing disagreed with the brute-force table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SizeMismatch { index_space: BigUint, table: usize },
    DecodeFailed { index: u64, error: QrError },
    OutsideTable { index: u64, z: BigUint },
    Repeated { index: u64, first: u64, z: u64 },
    Missed { z: u64 },
    EncodeFailed { z: u64, error: QrError },
    EncodeMismatch { z: u64, expected: u64, got: BigUint },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { index_space, table } => {
                write!(f, "index space {index_space} but |QR| = {table}")
            }
            Violation::DecodeFailed { index, error } => {
                write!(f, "decode({index}) failed: {error}")
            }
            Violation::OutsideTable { index, z } => write!(f, "decode({index}) = {z} is not in QR"),
            Violation::Repeated { index, first, z } => {
                write!(f, "decode({index}) = decode({first}) = {z}")
            }
            Violation::Missed { z } => write!(f, "{z} is never decoded"),
            Violation::EncodeFailed { z, error } => write!(f, "encode({z}) failed: {error}"),
            Violation::EncodeMismatch { z, expected, got } => {
                write!(f, "encode({z}) = {got}, expected {expected}")
            }
        }
    }
}

/// Outcome of checking one modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certification {
    pub n: u64,
    pub indices_checked: u64,
    pub violations: Vec<Violation>,
}

impl Certification {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Decodes every index of `m`, compares the image with [`enumerate_qr`],
/// and checks that encoding inverts each decode.
pub fn certify_bijection(m: &FactoredModulus) -> Result<Certification, OracleError> {
    let n = m
        .n()
        .to_u64()
        .filter(|&n| n <= DEFAULT_CAP)
        .ok_or_else(|| OracleError::CapExceeded {
            n: m.n().clone(),
            cap: DEFAULT_CAP,
        })?;
    let table = enumerate_qr(n)?;
    let mut violations = Vec::new();

    let size = index_space_size(m);
    if size != BigUint::from(table.len()) {
        violations.push(Violation::SizeMismatch {
            index_space: size.clone(),
            table: table.len(),
        });
    }
    let size = size.to_u64().unwrap_or(u64::MAX).min(n);

    let mut first_index: HashMap<u64, u64> = HashMap::new();
    for index in 1..=size {
        let z = match decode_index(m, &QrIndex::from(index)) {
            Ok(residue) => residue.z,
            Err(error) => {
                violations.push(Violation::DecodeFailed { index, error });
                continue;
            }
        };
        let Some(z) = z.to_u64().filter(|&z| table.contains(z)) else {
            violations.push(Violation::OutsideTable { index, z });
            continue;
        };
        if let Some(&first) = first_index.get(&z) {
            violations.push(Violation::Repeated { index, first, z });
            continue;
        }
        first_index.insert(z, index);
        match encode_residue(m, &BigUint::from(z)) {
            Ok(got) if *got.value() == BigUint::from(index) => {}
            Ok(got) => violations.push(Violation::EncodeMismatch {
                z,
                expected: index,
                got: got.into_inner(),
            }),
            Err(error) => violations.push(Violation::EncodeFailed { z, error }),
        }
    }
    for &z in &table.residues {
        if !first_index.contains_key(&z) {
            violations.push(Violation::Missed { z });
        }
    }
    Ok(Certification {
        n,
        indices_checked: size,
        violations,
    })
}

/// Summary of certifying every modulus in a range.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RangeCertification {
    pub moduli: u64,
    pub indices_checked: u64,
    pub failures: Vec<Certification>,
}

impl RangeCertification {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Certifies every `N` in `2..=max_n`, factoring each by trial division.
/// Work is spread over the available cores.
pub fn certify_range(max_n: u64) -> Result<RangeCertification, OracleError> {
    if !(2..=DEFAULT_CAP).contains(&max_n) {
        return Err(OracleError::CapExceeded {
            n: BigUint::from(max_n),
            cap: DEFAULT_CAP,
        });
    }
    let workers = thread::available_parallelism().map_or(1, |n| n.get()) as u64;
    let results: Vec<Result<Vec<Certification>, OracleError>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (2 + w..=max_n)
                        .step_by(workers as usize)
                        .map(|n| certify_bijection(&factored(n)?))
                        .collect::<Result<Vec<_>, _>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut summary = RangeCertification::default();
    for chunk in results {
        for cert in chunk? {
            summary.moduli += 1;
            summary.indices_checked += cert.indices_checked;
            if !cert.passed() {
                summary.failures.push(cert);
            }
        }
    }
    summary.failures.sort_by_key(|c| c.n);
    Ok(summary)
}
