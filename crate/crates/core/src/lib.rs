//! Indexing of the quadratic residues modulo a factored `N`.
//!
//! [`index::decode_index`] is a bijection from `1..=|QR(N)|` onto `QR(N)`
//! that runs in time cubic in the bit length of `N` given its factorization;
//! [`index::encode_residue`] is its inverse. On top of that,
//! [`sampler`] draws uniform residues using only as many random bits as the
//! index space requires, alongside the classical square-a-random-unit
//! baseline, and [`oracle`] certifies the bijection by exhaustive search.

pub mod cli;
pub mod index;
pub mod numeric;
pub mod oracle;
pub mod sampler;

pub use index::{
    decode_index, encode_residue, index_space_size, is_quadratic_residue, parse_factorization,
    FactoredModulus, QrError, QrIndex, Residue,
};
pub use numeric::Nat;
