//! Invertible matrices as products of elementary, diagonal and swap factors,
//! and idempotent factorizations of those factors once padded with a zero
//! last row and column.
//!
//! Indices are 0-based throughout.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::rings::EuclideanDomain;

mod decompose;
mod embed;

pub use decompose::{five_factor, ge2_decompose, triangularize, Ge2Strategy, Triangularization};
pub use embed::{embed_ge_as_idempotents, embedded_target, Embeddable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GEFactor<E> {
    /// `I + c * e_ij` with `i != j`.
    Elementary { i: usize, j: usize, c: E },
    /// `diag(u_0, ..., u_{n-1})` with every `u_k` a unit.
    DiagUnits(Vec<E>),
    /// The permutation matrix exchanging `i` and `j`.
    Swap { i: usize, j: usize },
}

impl<E: Clone> GEFactor<E> {
    pub fn validate<R: EuclideanDomain<Elem = E>>(&self, ring: &R, n: usize) -> Result<()> {
        match self {
            GEFactor::Elementary { i, j, .. } | GEFactor::Swap { i, j } => {
                if i == j || *i >= n || *j >= n {
                    return Err(Error::InvalidParameter(format!(
                        "indices ({i}, {j}) invalid for size {n}"
                    )));
                }
            }
            GEFactor::DiagUnits(u) => {
                if u.len() != n {
                    return Err(Error::InvalidParameter(format!(
                        "{} diagonal entries for size {n}",
                        u.len()
                    )));
                }
                if !u.iter().all(|x| ring.is_unit(x)) {
                    return Err(Error::NotAUnit);
                }
            }
        }
        Ok(())
    }

    pub fn to_matrix<R: EuclideanDomain<Elem = E>>(&self, ring: &R, n: usize) -> Result<Matrix<R>> {
        self.validate(ring, n)?;
        let mut m = Matrix::identity(ring.clone(), n);
        match self {
            GEFactor::Elementary { i, j, c } => m.set(*i, *j, c.clone()),
            GEFactor::DiagUnits(u) => m = Matrix::diagonal(ring.clone(), u.clone()),
            GEFactor::Swap { i, j } => m.swap_rows(*i, *j),
        }
        Ok(m)
    }

    pub fn inverse<R: EuclideanDomain<Elem = E>>(&self, ring: &R) -> Result<Self> {
        Ok(match self {
            GEFactor::Elementary { i, j, c } => GEFactor::Elementary {
                i: *i,
                j: *j,
                c: ring.neg(c),
            },
            GEFactor::DiagUnits(u) => GEFactor::DiagUnits(
                u.iter()
                    .map(|x| ring.unit_inverse(x).ok_or(Error::NotAUnit))
                    .collect::<Result<_>>()?,
            ),
            GEFactor::Swap { i, j } => GEFactor::Swap { i: *i, j: *j },
        })
    }

    /// Applies the factor on the left of `m` in place.
    pub(crate) fn apply_left<R: EuclideanDomain<Elem = E>>(&self, m: &mut Matrix<R>) {
        match self {
            GEFactor::Elementary { i, j, c } => m.add_row_multiple(*i, *j, c),
            GEFactor::DiagUnits(u) => {
                for (k, x) in u.iter().enumerate() {
                    m.scale_row(k, x);
                }
            }
            GEFactor::Swap { i, j } => m.swap_rows(*i, *j),
        }
    }
}

/// The ordered product of the factors as an `n x n` matrix.
pub fn realize<R: EuclideanDomain>(
    ring: &R,
    factors: &[GEFactor<R::Elem>],
    n: usize,
) -> Result<Matrix<R>> {
    let mut acc = Matrix::identity(ring.clone(), n);
    for f in factors.iter().rev() {
        f.validate(ring, n)?;
        f.apply_left(&mut acc);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Integers;
    use num_bigint::BigInt;

    #[test]
    fn matrices_and_inverses() {
        let r = Integers;
        let fs = [
            GEFactor::Elementary {
                i: 0,
                j: 2,
                c: BigInt::from(5),
            },
            GEFactor::DiagUnits(vec![BigInt::from(-1), BigInt::from(1), BigInt::from(-1)]),
            GEFactor::Swap { i: 1, j: 2 },
        ];
        for f in &fs {
            let m = f.to_matrix(&r, 3).unwrap();
            let mi = f.inverse(&r).unwrap().to_matrix(&r, 3).unwrap();
            assert!(m.mul(&mi).unwrap().is_identity());
        }
        let prod = Matrix::product(
            fs.iter()
                .map(|f| f.to_matrix(&r, 3).unwrap())
                .collect::<Vec<_>>()
                .iter(),
        )
        .unwrap();
        assert_eq!(realize(&r, &fs, 3).unwrap(), prod);
        assert!(GEFactor::Elementary {
            i: 1,
            j: 1,
            c: BigInt::from(1)
        }
        .validate(&r, 3)
        .is_err());
        assert!(GEFactor::Swap::<BigInt> { i: 0, j: 3 }
            .validate(&r, 3)
            .is_err());
        assert_eq!(
            GEFactor::DiagUnits(vec![BigInt::from(2)]).validate(&r, 1),
            Err(Error::NotAUnit)
        );
    }
}
