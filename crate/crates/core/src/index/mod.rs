//! Indexing of `QR(N)` for a modulus given with its factorization.

mod codec;
mod error;
mod modulus;

pub use codec::{
    decode_index, encode_residue, index_space_size, is_quadratic_residue, radix_schedule,
    root_profile, QrIndex, Residue, RootProfile,
};
pub use error::QrError;
pub use modulus::{parse_factorization, FactoredModulus, PrimePower};
