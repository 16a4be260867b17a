//! Arbitrary-precision modular arithmetic and the mixed-radix codec.
//!
//! Everything here is a pure function over [`Nat`] values. Higher layers
//! ([`crate::index`], [`crate::sampler`]) build on these primitives; the
//! brute-force [`crate::oracle`] deliberately does not.

mod arith;
mod error;
mod prime;
mod radix;
mod sqrt;

pub use arith::{crt_combine, ext_gcd, mod_inverse, mod_pow};
pub use error::NumericError;
pub use prime::is_prime;
pub use radix::{mr_decode, mr_encode, RadixSchedule};
pub use sqrt::{hensel_lift_sqrt, sqrt_mod_2k, sqrt_mod_prime};

pub(crate) use arith::pow_mod;
pub(crate) use sqrt::{hensel_lift_unchecked, sqrt_mod_prime_unchecked};

/// Arbitrary-precision natural number used for moduli, residues and indices.
pub type Nat = num_bigint::BigUint;
