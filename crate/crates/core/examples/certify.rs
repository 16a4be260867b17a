//! Checks decode and encode against brute-force enumeration for every
//! `N` up to a bound.
//!
//!     cargo run --release --example certify -- 1000

use qr_index::oracle::certify_range;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n: u64 = std::env::args().nth(1).map_or(Ok(500), |s| s.parse())?;
    let summary = certify_range(max_n)?;
    println!(
        "{} moduli, {} indices checked, {} failures",
        summary.moduli,
        summary.indices_checked,
        summary.failures.len()
    );
    for cert in summary.failures.iter().take(5) {
        println!("N = {}: {}", cert.n, cert.violations[0]);
    }
    if !summary.passed() {
        std::process::exit(1);
    }
    Ok(())
}
