use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
    #[error("modulus must be positive")]
    InvalidModulus,
    #[error("no inverse exists: gcd is {gcd}")]
    NoInverse { gcd: BigUint },
    #[error("moduli of parts {first} and {second} are not coprime")]
    NotCoprime { first: usize, second: usize },
    #[error("value is not a quadratic residue")]
    NotAResidue,
    #[error("digit at position {position} is out of range for its radix")]
    DigitOutOfRange { position: usize },
    #[error("value is not below the product of the radices")]
    ValueOutOfRange,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl NumericError {
    /// Stable kebab-case name used on diagnostic output.
    pub fn name(&self) -> &'static str {
        match self {
            NumericError::UndefinedGcd => "undefined-gcd",
            NumericError::InvalidModulus => "invalid-modulus",
            NumericError::NoInverse { .. } => "no-inverse",
            NumericError::NotCoprime { .. } => "not-coprime",
            NumericError::NotAResidue => "not-a-residue",
            NumericError::DigitOutOfRange { .. } | NumericError::ValueOutOfRange => {
                "index-out-of-range"
            }
            NumericError::Precondition(_) => "precondition",
        }
    }
}
