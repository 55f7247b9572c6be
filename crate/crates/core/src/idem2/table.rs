use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::rings::EuclideanDomain;

/// The 2x2 shapes with a fixed idempotent factorization.
///
/// Row variants describe `[[a, b], [0, 0]]`-style matrices and column variants
/// their transposed counterparts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableCase<E> {
    /// `[[a, 0], [0, 0]]`
    A { a: E },
    /// `[[0, 0], [a, 0]]`
    APrime { a: E },
    /// `[[a, ac], [0, 0]]`
    B { a: E, c: E },
    /// `[[a, 0], [ca, 0]]`
    BPrime { a: E, c: E },
    /// `[[ac, a], [0, 0]]`
    C { a: E, c: E },
    /// `[[ca, 0], [a, 0]]`
    CPrime { a: E, c: E },
    /// `[[a, b], [0, 0]]` with `b` a unit.
    DRow { a: E, b: E },
    /// `[[a, 0], [b, 0]]` with `b` a unit.
    DColumn { a: E, b: E },
    /// `[[a, b], [0, 0]]` with `a` a unit.
    ERow { a: E, b: E },
    /// `[[a, 0], [b, 0]]` with `a` a unit.
    EColumn { a: E, b: E },
}

impl<E: Clone> TableCase<E> {
    /// The matrix the case factors.
    pub fn target<R: EuclideanDomain<Elem = E>>(&self, ring: &R) -> Matrix<R> {
        let z = ring.zero();
        let rows = match self {
            TableCase::A { a } => [[a.clone(), z.clone()], [z.clone(), z]],
            TableCase::APrime { a } => [[z.clone(), z.clone()], [a.clone(), z]],
            TableCase::B { a, c } => [[a.clone(), ring.mul(a, c)], [z.clone(), z]],
            TableCase::BPrime { a, c } => [[a.clone(), z.clone()], [ring.mul(c, a), z]],
            TableCase::C { a, c } => [[ring.mul(a, c), a.clone()], [z.clone(), z]],
            TableCase::CPrime { a, c } => [[ring.mul(c, a), z.clone()], [a.clone(), z]],
            TableCase::DRow { a, b } | TableCase::ERow { a, b } => {
                [[a.clone(), b.clone()], [z.clone(), z]]
            }
            TableCase::DColumn { a, b } | TableCase::EColumn { a, b } => {
                [[a.clone(), z.clone()], [b.clone(), z]]
            }
        };
        m2(ring, rows)
    }
}

pub(crate) fn m2<R: EuclideanDomain>(ring: &R, rows: [[R::Elem; 2]; 2]) -> Matrix<R> {
    let [[a, b], [c, d]] = rows;
    Matrix::new(ring.clone(), 2, 2, vec![a, b, c, d]).expect("2x2 shape")
}

fn unit<R: EuclideanDomain>(ring: &R, u: &R::Elem) -> Result<R::Elem> {
    ring.unit_inverse(u).ok_or(Error::NotAUnit)
}

/// Idempotent factors whose ordered product is `case.target(ring)`.
pub fn table_factor_2x2<R: EuclideanDomain>(
    ring: &R,
    case: &TableCase<R::Elem>,
) -> Result<Vec<Matrix<R>>> {
    let o = || ring.one();
    let z = || ring.zero();
    let mk = |rows| m2(ring, rows);
    Ok(match case {
        TableCase::A { a } => vec![
            mk([[o(), a.clone()], [z(), z()]]),
            mk([[z(), z()], [z(), o()]]),
            mk([[o(), z()], [o(), z()]]),
        ],
        TableCase::APrime { a } => vec![
            mk([[z(), z()], [a.clone(), o()]]),
            mk([[o(), z()], [z(), z()]]),
            mk([[o(), z()], [o(), z()]]),
        ],
        TableCase::B { a, c } => {
            let mut f = table_factor_2x2(ring, &TableCase::A { a: a.clone() })?;
            f.push(mk([[o(), c.clone()], [z(), z()]]));
            f
        }
        TableCase::BPrime { a, c } => vec![
            mk([[o(), z()], [c.clone(), z()]]),
            mk([[o(), o()], [z(), z()]]),
            mk([[z(), z()], [z(), o()]]),
            mk([[o(), z()], [a.clone(), z()]]),
        ],
        TableCase::C { a, c } => vec![
            mk([[o(), a.clone()], [z(), z()]]),
            mk([[z(), z()], [c.clone(), o()]]),
        ],
        TableCase::CPrime { a, c } => vec![
            mk([[z(), c.clone()], [z(), o()]]),
            mk([[o(), z()], [a.clone(), z()]]),
        ],
        TableCase::DRow { a, b } => {
            let c = ring.mul(&unit(ring, b)?, a);
            table_factor_2x2(ring, &TableCase::C { a: b.clone(), c })?
        }
        TableCase::DColumn { a, b } => {
            let c = ring.mul(a, &unit(ring, b)?);
            table_factor_2x2(ring, &TableCase::CPrime { a: b.clone(), c })?
        }
        TableCase::ERow { a, b } => {
            let c = ring.mul(&unit(ring, a)?, b);
            table_factor_2x2(ring, &TableCase::B { a: a.clone(), c })?
        }
        TableCase::EColumn { a, b } => {
            let c = ring.mul(b, &unit(ring, a)?);
            table_factor_2x2(ring, &TableCase::BPrime { a: a.clone(), c })?
        }
    })
}
