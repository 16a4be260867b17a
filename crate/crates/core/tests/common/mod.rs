#![allow(dead_code)]

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use qr_index::numeric::is_prime;
use rand::Rng;

const SIEVE_PRIMES: usize = 300;

fn small_odd_primes() -> Vec<u32> {
    let mut primes = Vec::with_capacity(SIEVE_PRIMES);
    let mut candidate = 3u32;
    while primes.len() < SIEVE_PRIMES {
        if primes
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| !candidate.is_multiple_of(p))
        {
            primes.push(candidate);
        }
        candidate += 2;
    }
    primes
}

/// Uniformly random prime with exactly `bits` bits.
pub fn random_prime<R: Rng>(bits: u64, rng: &mut R) -> BigUint {
    assert!(bits >= 16);
    let sieve = small_odd_primes();
    loop {
        let mut candidate = rng.gen_biguint(bits);
        candidate |= BigUint::one() << (bits - 1);
        candidate |= BigUint::one();
        if sieve.iter().any(|&p| (&candidate % p).is_zero()) {
            continue;
        }
        if is_prime(&candidate) {
            return candidate;
        }
    }
}

/// Random `z` coprime to `n` and below it.
pub fn random_unit<R: Rng>(n: &BigUint, rng: &mut R) -> BigUint {
    use num_integer::Integer;
    loop {
        let x = rng.gen_biguint_below(n);
        if x.gcd(n).is_one() {
            return x;
        }
    }
}

/// Smallest odd primes in ascending order, by trial division.
pub fn odd_primes_below(limit: u64) -> Vec<u64> {
    (3..limit)
        .step_by(2)
        .filter(|&p| {
            (3..)
                .step_by(2)
                .take_while(|d| d * d <= p)
                .all(|d| p % d != 0)
        })
        .collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
