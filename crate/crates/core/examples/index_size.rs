//! Index-space size, totient and radix schedule for a handful of moduli.

use qr_index::index::radix_schedule;
use qr_index::{index_space_size, parse_factorization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "2",
        "2^3",
        "2^4*3",
        "3*5",
        "3^2",
        "2^6*3^3*5",
        "3*5*7*11*13",
    ] {
        let m = parse_factorization(text)?;
        let radices: Vec<String> = radix_schedule(&m)
            .radices()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!(
            "{text:>14}  N = {:>6}  phi = {:>5}  r = {}  |QR| = {:>4}  radices [{}]",
            m.n(),
            m.phi(),
            m.r(),
            index_space_size(&m),
            radices.join(", ")
        );
    }
    Ok(())
}
