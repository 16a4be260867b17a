//! Lists `QR(N)` in index order.
//!
//!     cargo run --example decode -- "2^4*3*5"

use qr_index::{decode_index, index_space_size, parse_factorization, QrIndex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3*5*7".into());
    let m = parse_factorization(&text)?;
    let size = index_space_size(&m);
    println!("N = {} ({m}), |QR(N)| = {size}", m.n());

    let shown: u64 = 20;
    let mut index = QrIndex::from(1);
    while *index.value() <= size && *index.value() <= shown.into() {
        let residue = decode_index(&m, &index)?;
        println!("{:>4} -> {}", index.value(), residue.z);
        index = QrIndex::new(index.into_inner() + 1u8);
    }
    if size > shown.into() {
        println!("... ({size} in total)");
    }
    Ok(())
}
