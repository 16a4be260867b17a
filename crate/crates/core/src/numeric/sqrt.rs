//! Square roots modulo odd primes, odd prime powers and powers of two.
//!
//! Each routine returns one canonical root.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::arith::pow_mod;
use super::{is_prime, mod_inverse, NumericError};

/// Canonical square root of `a` modulo the odd prime `p`, in `1..=(p-1)/2`.
pub fn sqrt_mod_prime(a: &BigUint, p: &BigUint) -> Result<BigUint, NumericError> {
    if p.is_even() || !is_prime(p) {
        return Err(NumericError::Precondition(
            "modulus must be an odd prime".into(),
        ));
    }
    if a.is_zero() || a >= p {
        return Err(NumericError::Precondition(
            "residue must lie in 1..p".into(),
        ));
    }
    sqrt_mod_prime_unchecked(a, p)
}

/// [`sqrt_mod_prime`] for callers that already validated `p`.
pub(crate) fn sqrt_mod_prime_unchecked(a: &BigUint, p: &BigUint) -> Result<BigUint, NumericError> {
    let one = BigUint::one();
    let p_minus_one = p - 1u8;
    let half = &p_minus_one >> 1u8;
    if pow_mod(a, &half, p) != one {
        return Err(NumericError::NotAResidue);
    }

    let root = if (p % 4u8) == BigUint::from(3u8) {
        pow_mod(a, &((p + 1u8) >> 2u8), p)
    } else {
        tonelli_shanks(a, p)
    };
    let mirrored = p - &root;
    Ok(if root <= half { root } else { mirrored })
}

fn tonelli_shanks(a: &BigUint, p: &BigUint) -> BigUint {
    let one = BigUint::one();
    let p_minus_one = p - 1u8;
    let s = p_minus_one.trailing_zeros().expect("p > 1");
    let q = &p_minus_one >> s;
    let half = &p_minus_one >> 1u8;

    // the least non-residue is prime, so an ascending scan meets 2, 3, 5, 7, ...
    let mut z = BigUint::from(2u8);
    while pow_mod(&z, &half, p) != p_minus_one {
        z += 1u8;
    }

    let mut m = s;
    let mut c = pow_mod(&z, &q, p);
    let mut t = pow_mod(a, &q, p);
    let mut r = pow_mod(a, &((&q + 1u8) >> 1u8), p);
    while t != one {
        let mut i = 0u64;
        let mut t2 = t.clone();
        while t2 != one {
            t2 = (&t2 * &t2) % p;
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = (&b * &b) % p;
        }
        m = i;
        c = (&b * &b) % p;
        t = (t * &c) % p;
        r = (r * b) % p;
    }
    r
}

/// Lifts a root `x` of `z` modulo the odd prime `p` to the root modulo `p^k`
/// that reduces to `x` modulo `p`.
pub fn hensel_lift_sqrt(
    x: &BigUint,
    z: &BigUint,
    p: &BigUint,
    k: u32,
) -> Result<BigUint, NumericError> {
    if p.is_even() || !is_prime(p) {
        return Err(NumericError::Precondition(
            "modulus must be an odd prime".into(),
        ));
    }
    hensel_lift_unchecked(x, z, p, k)
}

pub(crate) fn hensel_lift_unchecked(
    x: &BigUint,
    z: &BigUint,
    p: &BigUint,
    k: u32,
) -> Result<BigUint, NumericError> {
    if k == 0 {
        return Err(NumericError::Precondition(
            "exponent must be positive".into(),
        ));
    }
    let z_mod_p = z % p;
    if z_mod_p.is_zero() {
        return Err(NumericError::Precondition("z must be coprime to p".into()));
    }
    let mut y = x % p;
    if (&y * &y) % p != z_mod_p {
        return Err(NumericError::Precondition(
            "x is not a root of z modulo p".into(),
        ));
    }

    // Newton iteration y <- y - (y^2 - z) / (2y), doubling precision each step
    let mut precision = 1u32;
    while precision < k {
        precision = (precision * 2).min(k);
        let m = p.pow(precision);
        let z_m = z % &m;
        let y_sq = (&y * &y) % &m;
        let excess = if y_sq >= z_m {
            y_sq - &z_m
        } else {
            y_sq + &m - &z_m
        };
        let inv = mod_inverse(&((&y << 1u8) % &m), &m)?;
        let step = (excess * inv) % &m;
        y = if y >= step { y - step } else { y + &m - step };
    }
    Ok(y)
}

/// Canonical square root of `z ≡ 1 (mod 8)` modulo `2^k`: the unique odd
/// root below `2^(k-2)`.
pub fn sqrt_mod_2k(z: &BigUint, k: u32) -> Result<BigUint, NumericError> {
    if k < 4 {
        return Err(NumericError::Precondition(
            "exponent must be at least 4".into(),
        ));
    }
    let one = BigUint::one();
    let modulus = &one << k;
    if *z >= modulus {
        return Err(NumericError::Precondition("z must be below 2^k".into()));
    }
    if (z % 8u8) != one {
        return Err(NumericError::NotAResidue);
    }

    // 1 is a root mod 8; each further bit either keeps y or adds 2^(j-1)
    let mut y = BigUint::one();
    for j in 3..k {
        let next = &one << (j + 1);
        let mask = &next - 1u8;
        if ((&y * &y) & &mask) != (z & &mask) {
            y += &one << (j - 1);
        }
    }

    // the four roots are ±y and ±y + 2^(k-1); exactly one sits below 2^(k-2)
    let half = &one << (k - 1);
    let quarter = &one << (k - 2);
    let y = y % &modulus;
    let candidates = [
        y.clone(),
        &modulus - &y,
        (&y + &half) % &modulus,
        (&half + &modulus - &y) % &modulus,
    ];
    let root = candidates
        .into_iter()
        .find(|c| *c < quarter)
        .expect("one root of every residue lies in the lowest quarter");
    Ok(root)
}
