//! Factorization certificates and their verifier.
//!
//! The verifier only multiplies and compares matrices. It shares no code with
//! the constructions it checks beyond [`Matrix::mul`] and equality.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactmat::Matrix;
use crate::rings::EuclideanDomain;

/// A target matrix and an ordered list of idempotent factors claimed to multiply to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<R: EuclideanDomain> {
    pub target: Matrix<R>,
    pub factors: Vec<Matrix<R>>,
    pub algorithm: String,
}

impl<R: EuclideanDomain> Certificate<R> {
    pub fn new(target: Matrix<R>, factors: Vec<Matrix<R>>, algorithm: impl Into<String>) -> Self {
        Certificate {
            target,
            factors,
            algorithm: algorithm.into(),
        }
    }

    pub fn ring(&self) -> &R {
        self.target.ring()
    }

    pub fn count(&self) -> usize {
        self.factors.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

pub fn verify_certificate<R: EuclideanDomain>(cert: &Certificate<R>) -> Verdict {
    let target = &cert.target;
    if !target.is_square() {
        return Verdict::Invalid(format!(
            "target is {}x{}, not square",
            target.rows(),
            target.cols()
        ));
    }
    let n = target.rows();
    for (k, f) in cert.factors.iter().enumerate() {
        if f.ring() != target.ring() {
            return Verdict::Invalid(format!("factor {k} lives in a different ring"));
        }
        if f.rows() != n || f.cols() != n {
            return Verdict::Invalid(format!(
                "factor {k} is {}x{}, expected {n}x{n}",
                f.rows(),
                f.cols()
            ));
        }
        match f.mul(f) {
            Ok(sq) if sq == *f => {}
            _ => return Verdict::Invalid(format!("factor {k} is not idempotent")),
        }
    }
    let Some((first, rest)) = cert.factors.split_first() else {
        return if target.is_identity() {
            Verdict::Valid
        } else {
            Verdict::Invalid("empty factor list but target is not the identity".into())
        };
    };
    let mut acc = first.clone();
    for f in rest {
        acc = match acc.mul(f) {
            Ok(m) => m,
            Err(e) => return Verdict::Invalid(format!("product failed: {e}")),
        };
    }
    if acc == *target {
        Verdict::Valid
    } else {
        Verdict::Invalid("product of factors does not equal the target".into())
    }
}
