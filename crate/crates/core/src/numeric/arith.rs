use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::NumericError;

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(a, b)` and `s*a + t*b = g`.
pub fn ext_gcd(a: &BigUint, b: &BigUint) -> Result<(BigUint, BigInt, BigInt), NumericError> {
    if a.is_zero() && b.is_zero() {
        return Err(NumericError::UndefinedGcd);
    }
    let (mut old_r, mut r) = (BigInt::from(a.clone()), BigInt::from(b.clone()));
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let (q, rem) = old_r.div_rem(&r);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    // both inputs are non-negative, so the remainder sequence never goes negative
    debug_assert!(!old_r.is_negative());
    Ok((old_r.magnitude().clone(), old_s, old_t))
}

/// `base^exp mod m` by square-and-multiply.
pub fn mod_pow(base: &BigUint, exp: &BigUint, m: &BigUint) -> Result<BigUint, NumericError> {
    if m.is_zero() {
        return Err(NumericError::InvalidModulus);
    }
    Ok(pow_mod(base, exp, m))
}

/// Modular power without the zero check. Word-sized moduli run on `u128`
/// arithmetic; larger ones use num-bigint's Montgomery ladder.
pub(crate) fn pow_mod(base: &BigUint, exp: &BigUint, m: &BigUint) -> BigUint {
    match (m.to_u64(), exp.to_u64()) {
        (Some(m64), Some(e64)) => {
            let b64 = (base % m64).to_u64().expect("reduced below a u64 modulus");
            BigUint::from(pow_mod_u64(b64, e64, m64))
        }
        _ => base.modpow(exp, m),
    }
}

pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    if m <= u32::MAX as u64 {
        return (a % m) * (b % m) % m;
    }
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The inverse of `a` modulo `m`, in `1..m`.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Result<BigUint, NumericError> {
    if *m < BigUint::from(2u8) {
        return Err(NumericError::InvalidModulus);
    }
    let reduced = a % m;
    if reduced.is_zero() {
        return Err(NumericError::NoInverse { gcd: m.clone() });
    }
    let (g, s, _) = ext_gcd(&reduced, m)?;
    if !g.is_one() {
        return Err(NumericError::NoInverse { gcd: g });
    }
    let m_signed = BigInt::from(m.clone());
    let u = s.mod_floor(&m_signed);
    Ok(u.magnitude().clone())
}

/// Chinese remainder recombination over pairwise coprime moduli.
///
/// Returns the unique `x < ∏ modulus_i` with `x ≡ residue_i (mod modulus_i)`.
/// Parts are folded in one at a time (Garner style), so the work is one
/// extended-gcd per part.
pub fn crt_combine(parts: &[(BigUint, BigUint)]) -> Result<BigUint, NumericError> {
    if parts.is_empty() {
        return Err(NumericError::Precondition(
            "crt_combine needs at least one part".into(),
        ));
    }
    for (i, (residue, modulus)) in parts.iter().enumerate() {
        if modulus.is_zero() {
            return Err(NumericError::InvalidModulus);
        }
        if residue >= modulus {
            return Err(NumericError::Precondition(format!(
                "residue of part {i} is not reduced"
            )));
        }
    }

    let mut x = parts[0].0.clone();
    let mut acc_modulus = parts[0].1.clone();
    for (i, (residue, modulus)) in parts.iter().enumerate().skip(1) {
        if modulus.is_one() {
            continue;
        }
        let inv = match mod_inverse(&(&acc_modulus % modulus), modulus) {
            Ok(inv) => inv,
            Err(NumericError::NoInverse { .. }) => {
                let first = (0..i)
                    .find(|&j| !parts[j].1.gcd(modulus).is_one())
                    .expect("a shared factor must come from an earlier part");
                return Err(NumericError::NotCoprime { first, second: i });
            }
            Err(e) => return Err(e),
        };
        let x_mod = &x % modulus;
        let diff = if *residue >= x_mod {
            residue - &x_mod
        } else {
            residue + modulus - &x_mod
        };
        let h = (diff * inv) % modulus;
        x += &acc_modulus * h;
        acc_modulus *= modulus;
    }
    Ok(x)
}
