use num_bigint::BigUint;
use thiserror::Error;

use crate::numeric::NumericError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QrError {
    #[error("malformed factorization: {0}")]
    Syntax(String),
    #[error("{base} is not prime")]
    NotPrime { base: BigUint },
    #[error("prime {base} appears more than once")]
    RepeatedPrime { base: BigUint },
    #[error("modulus must be at least 2")]
    ProductTooSmall,
    #[error("exponent of {base} is zero")]
    ZeroExponent { base: BigUint },
    #[error("index {index} is outside 1..={size}")]
    IndexOutOfRange { index: BigUint, size: BigUint },
    #[error("residue {z} is not below the modulus")]
    ResidueOutOfRange { z: BigUint },
    #[error("{z} shares a factor with the modulus")]
    NotCoprime { z: BigUint },
    #[error("{z} is not a quadratic residue")]
    NotAResidue { z: BigUint },
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

impl QrError {
    /// Stable kebab-case name used on diagnostic output.
    pub fn name(&self) -> &'static str {
        match self {
            QrError::Syntax(_) => "syntax",
            QrError::NotPrime { .. } => "composite-claimed-prime",
            QrError::RepeatedPrime { .. } => "repeated-prime",
            QrError::ProductTooSmall => "product-too-small",
            QrError::ZeroExponent { .. } => "zero-exponent",
            QrError::IndexOutOfRange { .. } => "index-out-of-range",
            QrError::ResidueOutOfRange { .. } => "residue-out-of-range",
            QrError::NotCoprime { .. } => "non-coprime",
            QrError::NotAResidue { .. } => "not-a-residue",
            QrError::Numeric(e) => e.name(),
        }
    }

    /// True for errors caused by a malformed or invalid factorization.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            QrError::Syntax(_)
                | QrError::NotPrime { .. }
                | QrError::RepeatedPrime { .. }
                | QrError::ProductTooSmall
                | QrError::ZeroExponent { .. }
        )
    }
}
