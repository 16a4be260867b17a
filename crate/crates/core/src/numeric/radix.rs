use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::NumericError;

/// Ordered radices of a little-endian mixed-radix numeral system.
///
/// Radix-1 positions are legal and always carry the digit 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadixSchedule {
    radices: Vec<BigUint>,
    product: BigUint,
}

impl RadixSchedule {
    pub fn new(radices: Vec<BigUint>) -> Result<Self, NumericError> {
        if radices.iter().any(Zero::is_zero) {
            return Err(NumericError::Precondition(
                "radices must be at least 1".into(),
            ));
        }
        let product = radices.iter().fold(BigUint::one(), |acc, r| acc * r);
        Ok(RadixSchedule { radices, product })
    }

    pub fn radices(&self) -> &[BigUint] {
        &self.radices
    }

    pub fn len(&self) -> usize {
        self.radices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radices.is_empty()
    }

    /// Number of representable values, `∏ radix_i`.
    pub fn product(&self) -> &BigUint {
        &self.product
    }
}

fn to_u64(n: &BigUint) -> u64 {
    n.to_u64().expect("bounded by a u64 product")
}

/// Packs `digits` into `d_0 + ρ_0·(d_1 + ρ_1·(d_2 + …))`.
pub fn mr_encode(digits: &[BigUint], schedule: &RadixSchedule) -> Result<BigUint, NumericError> {
    if digits.len() != schedule.len() {
        return Err(NumericError::Precondition(format!(
            "{} digits for {} radices",
            digits.len(),
            schedule.len()
        )));
    }
    if let Some(position) = digits
        .iter()
        .zip(schedule.radices())
        .position(|(d, r)| d >= r)
    {
        return Err(NumericError::DigitOutOfRange { position });
    }
    if schedule.product().to_u64().is_some() {
        let value = digits
            .iter()
            .zip(schedule.radices())
            .rev()
            .fold(0u64, |acc, (d, r)| acc * to_u64(r) + to_u64(d));
        return Ok(value.into());
    }
    let value = digits
        .iter()
        .zip(schedule.radices())
        .rev()
        .fold(BigUint::zero(), |acc, (d, r)| acc * r + d);
    Ok(value)
}

/// Inverse of [`mr_encode`]: successive divmod by `ρ_0, ρ_1, …`.
pub fn mr_decode(value: &BigUint, schedule: &RadixSchedule) -> Result<Vec<BigUint>, NumericError> {
    if value >= schedule.product() {
        return Err(NumericError::ValueOutOfRange);
    }
    if schedule.product().to_u64().is_some() {
        let mut rest = to_u64(value);
        return Ok(schedule
            .radices()
            .iter()
            .map(|r| {
                let r = to_u64(r);
                let d = rest % r;
                rest /= r;
                BigUint::from(d)
            })
            .collect());
    }
    let mut rest = value.clone();
    let digits = schedule
        .radices()
        .iter()
        .map(|r| {
            let (q, d) = rest.div_rem(r);
            rest = q;
            d
        })
        .collect();
    debug_assert!(rest.is_zero());
    Ok(digits)
}
