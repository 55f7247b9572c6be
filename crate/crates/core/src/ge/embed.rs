use alloc::vec;
use alloc::vec::Vec;

use super::GEFactor;
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::rings::EuclideanDomain;

/// An `(n-1) x (n-1)` matrix `M` whose padding `diag(M, 0)` gets factored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Embeddable<E> {
    Factor(GEFactor<E>),
    /// `[[a, b], [0, 0]]` in the leading 2x2 block.
    TopRow {
        a: E,
        b: E,
    },
    /// `[[a, 0], [b, 0]]` in the leading 2x2 block.
    LeftColumn {
        a: E,
        b: E,
    },
}

/// `diag(M, 0)` as an `n x n` matrix.
pub fn embedded_target<R: EuclideanDomain>(
    ring: &R,
    item: &Embeddable<R::Elem>,
    n: usize,
) -> Result<Matrix<R>> {
    if n < 3 {
        return Err(Error::SizeTooSmall(n));
    }
    let mut out = Matrix::zero(ring.clone(), n, n);
    match item {
        Embeddable::Factor(f) => out.paste(0, 0, &f.to_matrix(ring, n - 1)?),
        Embeddable::TopRow { a, b } => {
            out.set(0, 0, a.clone());
            out.set(0, 1, b.clone());
        }
        Embeddable::LeftColumn { a, b } => {
            out.set(0, 0, a.clone());
            out.set(1, 0, b.clone());
        }
    }
    Ok(out)
}

/// Idempotent `n x n` factors of `diag(M, 0)`.
pub fn embed_ge_as_idempotents<R: EuclideanDomain>(
    ring: &R,
    item: &Embeddable<R::Elem>,
    n: usize,
) -> Result<Vec<Matrix<R>>> {
    if n < 3 {
        return Err(Error::SizeTooSmall(n));
    }
    let last = n - 1;
    let one = ring.one();
    // I - e_nn
    let proj = || {
        let mut p = Matrix::identity(ring.clone(), n);
        p.set(last, last, ring.zero());
        p
    };
    Ok(match item {
        Embeddable::Factor(f) => {
            f.validate(ring, n - 1)?;
            match f {
                GEFactor::Elementary { i, j, c } => {
                    let mut m = proj();
                    m.set(*i, *j, c.clone());
                    m.set(*i, last, one.clone());
                    m.set(last, *j, ring.neg(c));
                    vec![proj(), m, proj()]
                }
                GEFactor::Swap { i, j } => {
                    let mut m = Matrix::identity(ring.clone(), n);
                    let idx = [*i, *j, last];
                    let block = [[0, 1, 1], [1, 0, -1], [-1, 1, 2]];
                    for (r, row) in block.iter().enumerate() {
                        for (c, &v) in row.iter().enumerate() {
                            m.set(idx[r], idx[c], ring.from_i64(v));
                        }
                    }
                    vec![proj(), m, proj()]
                }
                GEFactor::DiagUnits(u) => {
                    let mut out = Vec::new();
                    for (k, x) in u.iter().enumerate() {
                        if ring.is_one(x) {
                            continue;
                        }
                        let mut left = proj();
                        left.set(k, last, ring.neg(&one));
                        let mut right = proj();
                        right.set(last, k, ring.sub(&one, x));
                        out.push(left);
                        out.push(right);
                    }
                    if out.is_empty() {
                        out.push(proj());
                    }
                    out
                }
            }
        }
        Embeddable::LeftColumn { a, b } => left_column(ring, a, b, n),
        Embeddable::TopRow { a, b } => left_column(ring, a, b, n)
            .iter()
            .rev()
            .map(Matrix::transpose)
            .collect(),
    })
}

fn left_column<R: EuclideanDomain>(ring: &R, a: &R::Elem, b: &R::Elem, n: usize) -> Vec<Matrix<R>> {
    let last = n - 1;
    let mut f1 = Matrix::zero(ring.clone(), n, n);
    f1.set(0, 0, ring.one());
    f1.set(1, 1, ring.one());
    f1.set(0, last, a.clone());
    f1.set(1, last, b.clone());
    let mut f2 = Matrix::zero(ring.clone(), n, n);
    f2.set(last, last, ring.one());
    let mut f3 = Matrix::zero(ring.clone(), n, n);
    for r in 0..n {
        f3.set(r, 0, ring.one());
    }
    vec![f1, f2, f3]
}
