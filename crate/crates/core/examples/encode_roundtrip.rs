//! Squares a few random units modulo a 256-bit RSA-style modulus, encodes
//! each square to its index and decodes it back.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::One;
use qr_index::numeric::is_prime;
use qr_index::{decode_index, encode_residue, index_space_size, FactoredModulus};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn prime(bits: u64, rng: &mut ChaCha8Rng) -> BigUint {
    loop {
        let candidate = rng.gen_biguint(bits) | (BigUint::one() << (bits - 1)) | BigUint::one();
        if is_prime(&candidate) {
            return candidate;
        }
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let p = prime(128, &mut rng);
    let q = prime(128, &mut rng);
    let m = FactoredModulus::from_prime_powers([(p, 1), (q, 1)])?;
    println!("N = {}", m.n());
    println!("index space: {} values", index_space_size(&m));

    for _ in 0..5 {
        let x = loop {
            let x = rng.gen_biguint_below(m.n());
            if x.gcd(m.n()).is_one() {
                break x;
            }
        };
        let z = (&x * &x) % m.n();
        let index = encode_residue(&m, &z)?;
        let back = decode_index(&m, &index)?;
        assert_eq!(back.z, z);
        println!("z = {z}\n  index {}", index.value());
    }
    Ok(())
}
