use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::QrError;
use crate::numeric::is_prime;

/// An odd prime power `p^k` with `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    p: BigUint,
    k: u32,
    value: BigUint,
}

impl PrimePower {
    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `p^k`.
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// `(p - 1) / 2`, the number of canonical roots modulo `p`.
    pub fn half_units(&self) -> BigUint {
        (&self.p - 1u8) >> 1u8
    }

    /// `p^(k-1)`, the number of lifts of a root modulo `p` to `p^k`.
    pub fn lift_count(&self) -> BigUint {
        self.p.pow(self.k - 1)
    }
}

/// A modulus `N = 2^k · p_1^k_1 ··· p_r^k_r` carried together with its
/// validated factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredModulus {
    two_exponent: u32,
    odd_parts: Vec<PrimePower>,
    n: BigUint,
    phi: BigUint,
}

impl FactoredModulus {
    /// Builds a modulus from `(prime, exponent)` pairs in any order.
    ///
    /// The prime 2 is split out into the two-part, odd primes are sorted
    /// ascending, and each base is checked with [`is_prime`].
    pub fn from_prime_powers<I>(powers: I) -> Result<Self, QrError>
    where
        I: IntoIterator<Item = (BigUint, u32)>,
    {
        let mut powers: Vec<(BigUint, u32)> = powers.into_iter().collect();
        if let Some((base, _)) = powers.iter().find(|(_, k)| *k == 0) {
            return Err(QrError::ZeroExponent { base: base.clone() });
        }
        let product = powers
            .iter()
            .fold(BigUint::one(), |acc, (p, k)| acc * p.pow(*k));
        if product < BigUint::from(2u8) {
            return Err(QrError::ProductTooSmall);
        }
        powers.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = powers.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(QrError::RepeatedPrime {
                base: w[0].0.clone(),
            });
        }
        if let Some((base, _)) = powers.iter().find(|(p, _)| !is_prime(p)) {
            return Err(QrError::NotPrime { base: base.clone() });
        }

        let two = BigUint::from(2u8);
        let mut two_exponent = 0;
        let mut odd_parts = Vec::with_capacity(powers.len());
        for (p, k) in powers {
            if p == two {
                two_exponent = k;
            } else {
                let value = p.pow(k);
                odd_parts.push(PrimePower { p, k, value });
            }
        }

        let mut phi = if two_exponent == 0 {
            BigUint::one()
        } else {
            BigUint::one() << (two_exponent - 1)
        };
        for part in &odd_parts {
            phi *= (&part.p - 1u8) * part.lift_count();
        }
        Ok(FactoredModulus {
            two_exponent,
            odd_parts,
            n: product,
            phi,
        })
    }

    /// The exponent `k` of the factor `2^k`.
    pub fn two_exponent(&self) -> u32 {
        self.two_exponent
    }

    /// `2^k`, or `None` when `N` is odd.
    pub fn two_part(&self) -> Option<BigUint> {
        (self.two_exponent > 0).then(|| BigUint::one() << self.two_exponent)
    }

    /// Odd prime powers, ascending by prime.
    pub fn odd_parts(&self) -> &[PrimePower] {
        &self.odd_parts
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    /// Number of distinct odd primes.
    pub fn r(&self) -> usize {
        self.odd_parts.len()
    }

    /// Euler's totient of `N`.
    pub fn phi(&self) -> &BigUint {
        &self.phi
    }
}

/// Parses `TERM ('*' TERM)*` where `TERM := DIGITS ('^' DIGITS)?`.
pub fn parse_factorization(text: &str) -> Result<FactoredModulus, QrError> {
    let mut powers = Vec::new();
    for term in text.split('*') {
        let term = term.trim();
        if term.is_empty() {
            return Err(QrError::Syntax(format!("empty factor in {text:?}")));
        }
        let (base, exponent) = match term.split_once('^') {
            Some((b, e)) => (b.trim(), Some(e.trim())),
            None => (term, None),
        };
        let base = parse_digits(base)?;
        let exponent = match exponent {
            Some(e) => {
                parse_digits(e)?;
                e.parse::<u32>()
                    .map_err(|_| QrError::Syntax(format!("exponent {e} is too large")))?
            }
            None => 1,
        };
        powers.push((base, exponent));
    }
    FactoredModulus::from_prime_powers(powers)
}

fn parse_digits(s: &str) -> Result<BigUint, QrError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(QrError::Syntax(format!(
            "expected decimal digits, found {s:?}"
        )));
    }
    Ok(s.parse().expect("validated digits"))
}

impl FromStr for FactoredModulus {
    type Err = QrError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_factorization(s)
    }
}

impl fmt::Display for FactoredModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.two_exponent {
            0 => {}
            1 => terms.push("2".to_string()),
            k => terms.push(format!("2^{k}")),
        }
        for part in &self.odd_parts {
            if part.k == 1 {
                terms.push(part.p.to_string());
            } else {
                terms.push(format!("{}^{}", part.p, part.k));
            }
        }
        f.write_str(&terms.join("*"))
    }
}
