//! The residue indexing itself: index-space size, radix schedule, decoder
//! and encoder.
//!
//! A residue `z ∈ QR(N)` is identified by one canonical square root per
//! prime-power factor of `N`:
//!
//! * modulo an odd `p^k`, the root `y = x + c·p` whose reduction `x` lies in
//!   `1..=(p-1)/2`, so the pair `(x, c)` has `(p-1)/2 · p^(k-1)` values;
//! * modulo `2^k` with `k > 3`, the odd root `y = 1 + 2c` below `2^(k-2)`;
//!   for `k ≤ 3` the only residue is 1 and `y = 1` is fixed.
//!
//! The digits `x_i - 1`, `c_i` (ascending prime order) and finally `c` are
//! packed little-endian with [`mr_encode`]; the 1-based index is that value
//! plus one.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{FactoredModulus, QrError};
use crate::numeric::{
    crt_combine, hensel_lift_unchecked, mr_decode, mr_encode, pow_mod, sqrt_mod_2k,
    sqrt_mod_prime_unchecked, NumericError, RadixSchedule,
};

/// A 1-based position in `1..=I_N`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QrIndex(BigUint);

impl QrIndex {
    pub fn new(value: BigUint) -> Self {
        QrIndex(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<BigUint> for QrIndex {
    fn from(value: BigUint) -> Self {
        QrIndex(value)
    }
}

impl From<u64> for QrIndex {
    fn from(value: u64) -> Self {
        QrIndex(BigUint::from(value))
    }
}

/// A quadratic residue together with the modulus it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    pub z: BigUint,
    pub modulus: BigUint,
}

/// Canonical per-factor root data of one residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootProfile {
    /// `(x_i, c_i)` for each odd prime power, aligned with
    /// [`FactoredModulus::odd_parts`].
    pub odd_roots: Vec<(BigUint, BigUint)>,
    /// `c` with `y = 1 + 2c`; present iff the two-exponent exceeds 3.
    pub two_part_digit: Option<BigUint>,
}

impl RootProfile {
    /// Splits a 0-based offset into its profile via [`mr_decode`].
    pub fn from_offset(m: &FactoredModulus, offset: &BigUint) -> Result<Self, QrError> {
        let digits = mr_decode(offset, &radix_schedule(m))?;
        let mut digits = digits.into_iter();
        let odd_roots = m
            .odd_parts()
            .iter()
            .map(|_| {
                let x = digits.next().expect("schedule has two digits per prime") + 1u8;
                let c = digits.next().expect("schedule has two digits per prime");
                (x, c)
            })
            .collect();
        let two_part_digit = digits.next();
        Ok(RootProfile {
            odd_roots,
            two_part_digit,
        })
    }

    /// Packs the profile back into its 0-based offset.
    pub fn to_offset(&self, m: &FactoredModulus) -> Result<BigUint, QrError> {
        let mut digits = Vec::with_capacity(2 * self.odd_roots.len() + 1);
        for (x, c) in &self.odd_roots {
            if x.is_zero() {
                return Err(NumericError::DigitOutOfRange {
                    position: digits.len(),
                }
                .into());
            }
            digits.push(x - 1u8);
            digits.push(c.clone());
        }
        digits.extend(self.two_part_digit.iter().cloned());
        Ok(mr_encode(&digits, &radix_schedule(m))?)
    }

    /// Whether every field sits in its canonical range for `m`.
    pub fn is_canonical(&self, m: &FactoredModulus) -> bool {
        let odd_ok = self.odd_roots.len() == m.r()
            && self
                .odd_roots
                .iter()
                .zip(m.odd_parts())
                .all(|((x, c), part)| {
                    !x.is_zero() && *x <= part.half_units() && *c < part.lift_count()
                });
        let two_ok = match (&self.two_part_digit, m.two_exponent()) {
            (None, k) => k <= 3,
            (Some(c), k) => k > 3 && *c < BigUint::one() << (k - 3),
        };
        odd_ok && two_ok
    }

    /// Recombines the per-factor roots into a square root `x ∈ Z*_N`.
    pub fn root(&self, m: &FactoredModulus) -> Result<BigUint, QrError> {
        let mut parts = Vec::with_capacity(self.odd_roots.len() + 1);
        for ((x, c), part) in self.odd_roots.iter().zip(m.odd_parts()) {
            parts.push((x + c * part.p(), part.value().clone()));
        }
        if let Some(two_part) = m.two_part() {
            let y = match &self.two_part_digit {
                Some(c) => (c << 1u8) + 1u8,
                None => BigUint::one(),
            };
            parts.push((y % &two_part, two_part));
        }
        Ok(crt_combine(&parts)?)
    }
}

/// `I_N = |QR(N)| = 2^max(k-3, 0) · ∏ ((p_i - 1)/2) · p_i^(k_i - 1)`.
pub fn index_space_size(m: &FactoredModulus) -> BigUint {
    let two = BigUint::one() << m.two_exponent().saturating_sub(3);
    m.odd_parts()
        .iter()
        .fold(two, |acc, part| acc * part.half_units() * part.lift_count())
}

/// Radices `[(p_1-1)/2, p_1^(k_1-1), …, (p_r-1)/2, p_r^(k_r-1)]`, then
/// `2^(k-3)` when `k > 3`.
pub fn radix_schedule(m: &FactoredModulus) -> RadixSchedule {
    let mut radices = Vec::with_capacity(2 * m.r() + 1);
    for part in m.odd_parts() {
        radices.push(part.half_units());
        radices.push(part.lift_count());
    }
    if m.two_exponent() > 3 {
        radices.push(BigUint::one() << (m.two_exponent() - 3));
    }
    RadixSchedule::new(radices).expect("all radices are positive")
}

/// Maps an index in `1..=I_N` to its quadratic residue.
pub fn decode_index(m: &FactoredModulus, idx: &QrIndex) -> Result<Residue, QrError> {
    let size = index_space_size(m);
    if idx.value().is_zero() || *idx.value() > size {
        return Err(QrError::IndexOutOfRange {
            index: idx.value().clone(),
            size,
        });
    }
    let profile = RootProfile::from_offset(m, &(idx.value() - 1u8))?;
    let x = profile.root(m)?;
    let z = (&x * &x) % m.n();
    Ok(Residue {
        z,
        modulus: m.n().clone(),
    })
}

/// Computes the canonical root profile of `z`.
pub fn root_profile(m: &FactoredModulus, z: &BigUint) -> Result<RootProfile, QrError> {
    if z >= m.n() {
        return Err(QrError::ResidueOutOfRange { z: z.clone() });
    }
    if !z.gcd(m.n()).is_one() {
        return Err(QrError::NotCoprime { z: z.clone() });
    }
    let not_residue = || QrError::NotAResidue { z: z.clone() };

    let mut odd_roots = Vec::with_capacity(m.r());
    for part in m.odd_parts() {
        let p = part.p();
        let x = sqrt_mod_prime_unchecked(&(z % p), p).map_err(|e| match e {
            NumericError::NotAResidue => not_residue(),
            other => other.into(),
        })?;
        let mut y = hensel_lift_unchecked(&x, &(z % part.value()), p, part.k())?;
        if &y % p > part.half_units() {
            y = part.value() - y;
        }
        let (c, x) = y.div_rem(p);
        odd_roots.push((x, c));
    }

    let k = m.two_exponent();
    let two_part_digit = match k {
        0 | 1 => None,
        2 | 3 => {
            let mask = (1u8 << k) - 1;
            if (z & BigUint::from(mask)) != BigUint::one() {
                return Err(not_residue());
            }
            None
        }
        _ => {
            let low = z & ((BigUint::one() << k) - 1u8);
            let y = sqrt_mod_2k(&low, k).map_err(|e| match e {
                NumericError::NotAResidue => not_residue(),
                other => other.into(),
            })?;
            Some(y >> 1u8)
        }
    };
    Ok(RootProfile {
        odd_roots,
        two_part_digit,
    })
}

/// Inverse of [`decode_index`].
pub fn encode_residue(m: &FactoredModulus, z: &BigUint) -> Result<QrIndex, QrError> {
    let profile = root_profile(m, z)?;
    debug_assert!(profile.is_canonical(m));
    Ok(QrIndex(profile.to_offset(m)? + 1u8))
}

/// Local test: `gcd(z, N) = 1`, Euler's criterion at each odd prime, and
/// `z ≡ 1` modulo 4 (k = 2) or 8 (k ≥ 3).
pub fn is_quadratic_residue(m: &FactoredModulus, z: &BigUint) -> bool {
    if z >= m.n() || !z.gcd(m.n()).is_one() {
        return false;
    }
    let odd_ok = m.odd_parts().iter().all(|part| {
        let p = part.p();
        pow_mod(z, &part.half_units(), p).is_one()
    });
    let two_ok = match m.two_exponent() {
        0 | 1 => true,
        2 => (z % 4u8).is_one(),
        _ => (z % 8u8).is_one(),
    };
    odd_ok && two_ok
}
