use alloc::string::String;
use core::fmt;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    BothZero,
    RingMismatch,
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    NotSingular,
    NotUnimodular,
    NotIdempotent,
    NotAUnit,
    NotCoprime,
    NotInvertible,
    NotNormalized,
    BadChain(String),
    BadLength(usize),
    SizeTooSmall(usize),
    InvalidParameter(String),
    NotPrime(u64),
    /// A state the constructions rule out was reached; always a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("DivisionByZero: divisor is zero"),
            Error::BothZero => f.write_str("BothZero: gcd of two zeros is undefined"),
            Error::RingMismatch => f.write_str("RingMismatch: operands live in different rings"),
            Error::ShapeMismatch { left, right } => write!(
                f,
                "ShapeMismatch: {}x{} and {}x{} are incompatible",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => write!(f, "NotSquare: matrix is {rows}x{cols}"),
            Error::NotSingular => f.write_str("NotSingular: determinant is nonzero"),
            Error::NotUnimodular => f.write_str("NotUnimodular: row content is not a unit"),
            Error::NotIdempotent => f.write_str("NotIdempotent: F*F != F"),
            Error::NotAUnit => f.write_str("NotAUnit: required pivot is not invertible"),
            Error::NotCoprime => f.write_str("NotCoprime: entries do not generate the unit ideal"),
            Error::NotInvertible => f.write_str("NotInvertible: determinant is not a unit"),
            Error::NotNormalized => {
                f.write_str("NotNormalized: chain must start with (1, 0, 1, d)")
            }
            Error::BadChain(why) => write!(f, "BadChain: {why}"),
            Error::BadLength(n) => write!(f, "BadLength: coefficient list has even length {n}"),
            Error::SizeTooSmall(n) => write!(f, "SizeTooSmall: embedding needs n >= 3, got {n}"),
            Error::InvalidParameter(why) => write!(f, "InvalidParameter: {why}"),
            Error::NotPrime(p) => write!(f, "NotPrime: modulus {p} is not prime"),
            Error::Internal(why) => write!(f, "InternalError: {why}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
