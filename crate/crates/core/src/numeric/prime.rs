use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::arith::{mul_mod_u64, pow_mod_u64};

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// The first twelve primes are a complete witness set below 2^64.
const U64_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
/// Complete witness set below 4 759 123 141 (Jaeschke).
const U32_BASES: [u64; 3] = [2, 7, 61];
const U32_BASES_LIMIT: u64 = 4_759_123_141;

/// Bases 2..=41 are a complete witness set below this bound (Sorenson & Webster).
const BIG_DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";
const BIG_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

const PROBABILISTIC_ROUNDS: usize = 64;
const BASE_SEED: u64 = 0x7172_5f69_6e64_6578;

/// Miller–Rabin primality test.
///
/// Deterministic below 3.3·10^24; above that, 64 rounds with bases drawn
/// from a fixed-seed ChaCha8 stream, so the verdict is reproducible.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in SMALL_PRIMES.iter() {
        if (n % p).is_zero() {
            return false;
        }
    }
    let limit: BigUint = BIG_DETERMINISTIC_LIMIT.parse().expect("constant parses");
    if *n < limit {
        return BIG_BASES
            .iter()
            .all(|&a| strong_probable_prime(n, &BigUint::from(a)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(BASE_SEED);
    let two = BigUint::from(2u8);
    let upper = n - 1u8;
    (0..PROBABILISTIC_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &upper);
        strong_probable_prime(n, &a)
    })
}

fn strong_probable_prime(n: &BigUint, a: &BigUint) -> bool {
    let n_minus_one = n - 1u8;
    let s = n_minus_one.trailing_zeros().expect("n > 1");
    let d = &n_minus_one >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = p as u64;
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 97 * 97 {
        return true;
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    let bases: &[u64] = if n < U32_BASES_LIMIT {
        &U32_BASES
    } else {
        &U64_BASES
    };
    bases.iter().all(|&a| {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}
