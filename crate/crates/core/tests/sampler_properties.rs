use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use qr_index::index::index_space_size;
use qr_index::oracle::{enumerate_qr, factored};
use qr_index::parse_factorization;
use qr_index::sampler::{
    compare_bit_budgets, run_sampler, sample_residue_by_index, sample_residue_classical,
    SampleMethod, SamplerError, ScriptedBits, SeededBits,
};

fn width(range: u64) -> u32 {
    64 - (range - 1).leading_zeros()
}

/// Runs one rejection round on every bit string of the attempt width.
#[test]
fn index_sampler_is_exactly_uniform_per_round() {
    for n in 2..=300u64 {
        let m = factored(n).unwrap();
        let table = enumerate_qr(n).unwrap();
        let size = index_space_size(&m).to_u64().unwrap();
        let w = if size == 1 { 0 } else { width(size) };
        let mut hits: HashMap<u64, u64> = HashMap::new();
        let mut rejected = 0;
        for value in 0..1u64 << w {
            let mut src = ScriptedBits::from_value(value, w);
            match sample_residue_by_index(&m, &mut src) {
                Ok((residue, ledger)) => {
                    assert_eq!(ledger.bits_consumed, w as u64);
                    *hits.entry(residue.z.to_u64().unwrap()).or_default() += 1;
                }
                Err(SamplerError::SourceExhausted) => rejected += 1,
                Err(e) => panic!("N = {n}: {e}"),
            }
        }
        assert_eq!(rejected, (1 << w) - size, "N = {n}");
        assert_eq!(hits.len(), table.len(), "N = {n}");
        assert!(hits.keys().all(|&z| table.contains(z)));
        assert!(hits.values().all(|&c| c == 1), "N = {n}");
    }
}

#[test]
fn classical_sampler_is_exactly_uniform_per_round() {
    for n in 3..=300u64 {
        let m = factored(n).unwrap();
        let table = enumerate_qr(n).unwrap();
        let w = width(n - 1);
        let mut hits: HashMap<u64, u64> = HashMap::new();
        for value in 0..1u64 << w {
            let mut src = ScriptedBits::from_value(value, w);
            if let Ok((residue, _)) = sample_residue_classical(&m, &mut src) {
                *hits.entry(residue.z.to_u64().unwrap()).or_default() += 1;
            }
        }
        assert_eq!(hits.len(), table.len(), "N = {n}");
        assert!(hits.keys().all(|&z| table.contains(z)));
        let first = hits[&1];
        assert!(hits.values().all(|&c| c == first), "N = {n}: {hits:?}");
    }
}

#[test]
fn seeded_supports_stay_inside_qr() {
    for n in [15u64, 48, 105, 128, 255, 286, 300] {
        let m = factored(n).unwrap();
        let table = enumerate_qr(n).unwrap();
        for method in [SampleMethod::Index, SampleMethod::Classical] {
            let (residues, report) = run_sampler(&m, method, 500, &mut SeededBits::new(n)).unwrap();
            assert_eq!(report.samples, 500);
            for r in residues {
                assert_eq!(r.modulus, BigUint::from(n));
                assert!(table.contains(r.z.to_u64().unwrap()), "{method} N = {n}");
            }
        }
    }
}

#[test]
fn seeded_runs_are_reproducible() {
    let m = parse_factorization("2^5*3^2*7").unwrap();
    for method in [SampleMethod::Index, SampleMethod::Classical] {
        let a = run_sampler(&m, method, 200, &mut SeededBits::new(99)).unwrap();
        let b = run_sampler(&m, method, 200, &mut SeededBits::new(99)).unwrap();
        let c = run_sampler(&m, method, 200, &mut SeededBits::new(100)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.0, c.0);
    }
    let streams = (
        run_sampler(
            &m,
            SampleMethod::Index,
            50,
            &mut SeededBits::with_stream(5, 0),
        )
        .unwrap(),
        run_sampler(
            &m,
            SampleMethod::Index,
            50,
            &mut SeededBits::with_stream(5, 1),
        )
        .unwrap(),
    );
    assert_ne!(streams.0 .0, streams.1 .0);
}

#[test]
fn ledger_counts_every_bit() {
    struct Counting<'a> {
        inner: SeededBits,
        calls: &'a mut u64,
    }
    impl qr_index::sampler::BitSource for Counting<'_> {
        fn next_bit(&mut self) -> Result<bool, SamplerError> {
            *self.calls += 1;
            self.inner.next_bit()
        }
    }
    let m = parse_factorization("3*5*7*11*13").unwrap();
    for method in [SampleMethod::Index, SampleMethod::Classical] {
        let mut calls = 0;
        let mut src = Counting {
            inner: SeededBits::new(1),
            calls: &mut calls,
        };
        let (_, report) = run_sampler(&m, method, 300, &mut src).unwrap();
        assert_eq!(report.total_bits, calls, "{method}");
    }
}

#[test]
fn index_sampler_uses_fewer_bits() {
    for text in [
        "3*5*7",
        "3*5*7*11*13",
        "2^6*3^3*5*7",
        "5*7*11*13*17*19",
        "3^4*5^3*7",
    ] {
        let m = parse_factorization(text).unwrap();
        let (index, classical) = compare_bit_budgets(&m, 1000, 17).unwrap();
        assert!(
            index.mean_bits_per_sample() < classical.mean_bits_per_sample(),
            "{text}: {} vs {}",
            index.mean_bits_per_sample(),
            classical.mean_bits_per_sample()
        );
        // at most twice the attempt width on average, with a margin for the seed
        let w = index.theoretical_floor.ceil();
        assert!(index.mean_bits_per_sample() <= 2.5 * w, "{text}");
        assert_eq!(index.total_candidates, 0);
        assert!(classical.total_candidates >= 1000);
    }
}
