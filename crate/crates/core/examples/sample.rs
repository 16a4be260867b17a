//! Draws seeded samples from `QR(N)` with both samplers and prints the
//! bits each one spent.
//!
//!     cargo run --example sample -- "3*5*7" 10 42

use qr_index::parse_factorization;
use qr_index::sampler::{sample_residue_by_index, sample_residue_classical, SeededBits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m = parse_factorization(&args.next().unwrap_or_else(|| "3*5*7".into()))?;
    let count: u32 = args.next().map_or(Ok(10), |s| s.parse())?;
    let seed: u64 = args.next().map_or(Ok(42), |s| s.parse())?;

    let mut index_bits = SeededBits::with_stream(seed, 0);
    let mut classical_bits = SeededBits::with_stream(seed, 1);
    println!(
        "{:>10} {:>5}   {:>10} {:>5} {:>10}",
        "index", "bits", "classical", "bits", "candidates"
    );
    for _ in 0..count {
        let (a, la) = sample_residue_by_index(&m, &mut index_bits)?;
        let (b, lb) = sample_residue_classical(&m, &mut classical_bits)?;
        println!(
            "{:>10} {:>5}   {:>10} {:>5} {:>10}",
            a.z, la.bits_consumed, b.z, lb.bits_consumed, lb.candidates
        );
    }
    Ok(())
}
