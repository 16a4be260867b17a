mod common;

use num_bigint::{BigUint, RandBigInt};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qr_index::index::{
    decode_index, encode_residue, index_space_size, is_quadratic_residue, root_profile,
    FactoredModulus, QrError, QrIndex,
};
use qr_index::oracle::{certify_bijection, enumerate_qr, factored};
use qr_index::parse_factorization;

use common::{gcd, random_prime, random_unit};

#[test]
fn bijection_on_every_small_modulus() {
    for n in 2..=600u64 {
        let cert = certify_bijection(&factored(n).unwrap()).unwrap();
        assert!(cert.passed(), "N = {n}: {:?}", cert.violations);
    }
}

#[test]
fn high_two_exponents() {
    for text in ["2^10", "2^12*3", "2^9*5^2", "2^14", "2^11*3*7"] {
        let m = parse_factorization(text).unwrap();
        let cert = certify_bijection(&m).unwrap();
        assert!(cert.passed(), "{text}: {:?}", cert.violations);
    }
}

#[test]
fn membership_matches_brute_force() {
    for n in 2..=300u64 {
        let m = factored(n).unwrap();
        let table = enumerate_qr(n).unwrap();
        for z in 0..n + 3 {
            assert_eq!(
                is_quadratic_residue(&m, &BigUint::from(z)),
                table.contains(z),
                "N = {n}, z = {z}"
            );
        }
    }
}

#[test]
fn encode_errors_match_brute_force() {
    for n in 2..=300u64 {
        let m = factored(n).unwrap();
        let table = enumerate_qr(n).unwrap();
        for z in 0..n {
            let result = encode_residue(&m, &BigUint::from(z));
            match result {
                Ok(_) => assert!(table.contains(z)),
                Err(QrError::NotCoprime { .. }) => assert_ne!(gcd(z, n), 1, "N = {n}, z = {z}"),
                Err(QrError::NotAResidue { .. }) => {
                    assert_eq!(gcd(z, n), 1);
                    assert!(!table.contains(z));
                }
                Err(e) => panic!("N = {n}, z = {z}: {e}"),
            }
        }
        assert!(matches!(
            encode_residue(&m, &BigUint::from(n)),
            Err(QrError::ResidueOutOfRange { .. })
        ));
    }
}

#[test]
fn index_bounds() {
    let m = parse_factorization("3^2*5*7").unwrap();
    let size = index_space_size(&m);
    assert!(decode_index(&m, &QrIndex::new(size.clone())).is_ok());
    assert!(matches!(
        decode_index(&m, &QrIndex::from(0)),
        Err(QrError::IndexOutOfRange { .. })
    ));
    assert!(matches!(
        decode_index(&m, &QrIndex::new(size + 1u8)),
        Err(QrError::IndexOutOfRange { .. })
    ));
}

#[test]
fn profiles_are_canonical_roots() {
    let m = parse_factorization("2^6*3^3*5*11").unwrap();
    let n = m.n().to_u64().unwrap();
    for z in enumerate_qr(n).unwrap().residues {
        let profile = root_profile(&m, &BigUint::from(z)).unwrap();
        assert!(profile.is_canonical(&m));
        let y = profile.root(&m).unwrap();
        assert_eq!((&y * &y) % m.n(), BigUint::from(z));
    }
}

#[test]
fn random_multi_prime_roundtrips() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..40 {
        let primes: Vec<BigUint> = (0..1 + round % 4)
            .map(|_| random_prime(64 + round as u64 * 4, &mut rng))
            .collect();
        let mut powers: Vec<(BigUint, u32)> = primes
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, 1 + (i as u32 + round) % 3))
            .collect();
        powers.sort();
        powers.dedup_by(|a, b| a.0 == b.0);
        powers.push((BigUint::from(2u8), round % 9));
        let powers: Vec<_> = powers.into_iter().filter(|(_, k)| *k > 0).collect();
        let m = FactoredModulus::from_prime_powers(powers).unwrap();
        let size = index_space_size(&m);
        for _ in 0..10 {
            let x = random_unit(m.n(), &mut rng);
            let z = (&x * &x) % m.n();
            let idx = encode_residue(&m, &z).unwrap();
            assert_eq!(decode_index(&m, &idx).unwrap().z, z, "{m}");

            let idx = QrIndex::new(rng.gen_biguint_below(&size) + 1u8);
            let z = decode_index(&m, &idx).unwrap().z;
            assert_eq!(encode_residue(&m, &z).unwrap(), idx, "{m}");
        }
    }
}

fn small_modulus() -> impl Strategy<Value = FactoredModulus> {
    let odd = prop::sample::subsequence(vec![3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41], 0..5);
    (odd, 0u32..20, prop::collection::vec(1u32..5, 5)).prop_filter_map(
        "product at least 2",
        |(primes, two, exponents)| {
            let mut powers: Vec<(BigUint, u32)> = primes
                .into_iter()
                .zip(exponents)
                .map(|(p, k)| (BigUint::from(p), k))
                .collect();
            if two > 0 {
                powers.push((BigUint::from(2u8), two));
            }
            FactoredModulus::from_prime_powers(powers).ok()
        },
    )
}

proptest! {
    #[test]
    fn decode_then_encode(m in small_modulus(), seed in any::<u128>()) {
        let size = index_space_size(&m);
        let idx = QrIndex::new(BigUint::from(seed) % &size + 1u8);
        let residue = decode_index(&m, &idx).unwrap();
        prop_assert!(is_quadratic_residue(&m, &residue.z));
        prop_assert_eq!(encode_residue(&m, &residue.z).unwrap(), idx);
    }

    #[test]
    fn encode_then_decode(m in small_modulus(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_unit(m.n(), &mut rng);
        let z = (&x * &x) % m.n();
        let idx = encode_residue(&m, &z).unwrap();
        prop_assert!(*idx.value() >= BigUint::from(1u8) && *idx.value() <= index_space_size(&m));
        prop_assert_eq!(decode_index(&m, &idx).unwrap().z, z);
    }
}
