//! Mean random bits per sample for the index sampler against squaring a
//! random unit, next to the `log2 |QR(N)|` floor.

use qr_index::parse_factorization;
use qr_index::sampler::compare_bit_budgets;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>24} {:>8} {:>8} {:>10}",
        "modulus", "floor", "index", "classical"
    );
    for text in [
        "3*5",
        "3*5*7",
        "3*5*7*11*13",
        "2^10*3^2*5*7",
        "5*7*11*13*17*19*23",
    ] {
        let m = parse_factorization(text)?;
        let (index, classical) = compare_bit_budgets(&m, 2000, 7)?;
        println!(
            "{text:>24} {:>8.3} {:>8.3} {:>10.3}",
            index.theoretical_floor,
            index.mean_bits_per_sample(),
            classical.mean_bits_per_sample()
        );
    }
    Ok(())
}
