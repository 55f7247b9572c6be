use alloc::vec::Vec;

use super::Matrix;
use crate::error::{Error, Result};
use crate::rings::{EuclideanDomain, Fraction, FractionField};

type Frac<R> = Fraction<<R as EuclideanDomain>::Elem>;

fn lift<R: EuclideanDomain>(a: &Matrix<R>) -> Matrix<FractionField<R>> {
    let k = FractionField::new(a.ring().clone());
    let entries = a.entries().iter().map(|e| k.embed(e.clone())).collect();
    Matrix::new(k, a.rows(), a.cols(), entries).expect("shape preserved")
}

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
fn rref<R: EuclideanDomain>(m: &mut Matrix<FractionField<R>>) -> Vec<usize> {
    let k = m.ring().clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let Some(p) = (row..m.rows()).find(|&i| !k.is_zero(m.get(i, col))) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = k.inverse(m.get(row, col)).expect("pivot is nonzero");
        m.scale_row(row, &inv);
        for i in 0..m.rows() {
            if i != row && !k.is_zero(m.get(i, col)) {
                let c = k.neg(m.get(i, col));
                m.add_row_multiple(i, row, &c);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// A primitive row `u != 0` with `u * A = 0`.
///
/// Solved over the fraction field, then denominators are cleared and the
/// content divided out. The first nonzero entry is made canonical so the
/// answer is deterministic. For the zero matrix this is the first basis row.
pub fn left_null_row<R: EuclideanDomain>(a: &Matrix<R>) -> Result<Vec<R::Elem>> {
    let n = a.require_square()?;
    if !a.is_singular()? {
        return Err(Error::NotSingular);
    }
    let ring = a.ring();
    let mut t = lift(&a.transpose());
    let pivots = rref(&mut t);
    let free = (0..n)
        .find(|c| !pivots.contains(c))
        .ok_or_else(|| Error::Internal("singular matrix with full pivot set".into()))?;

    let k = t.ring().clone();
    let mut v: Vec<Frac<R>> = (0..n).map(|_| k.zero()).collect();
    v[free] = k.one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = k.neg(t.get(r, free));
    }

    let lcm = v.iter().fold(ring.one(), |acc, f| {
        let g = ring.gcd(&acc, &f.den);
        ring.mul(&acc, &ring.exact_div(&f.den, &g).expect("gcd divides"))
    });
    let mut u: Vec<R::Elem> = v
        .iter()
        .map(|f| {
            ring.mul(
                &f.num,
                &ring.exact_div(&lcm, &f.den).expect("den divides lcm"),
            )
        })
        .collect();
    let content = u.iter().fold(ring.zero(), |acc, x| ring.gcd(&acc, x));
    for x in u.iter_mut() {
        *x = ring
            .exact_div(x, &content)
            .expect("content divides every entry");
    }
    if let Some(first) = u.iter().find(|x| !ring.is_zero(x)) {
        let (unit, _) = ring.canonical_associate(first);
        let inv = ring.unit_inverse(&unit).expect("unit part invertible");
        for x in u.iter_mut() {
            *x = ring.mul(x, &inv);
        }
    }
    Ok(u)
}

pub(super) fn inverse<R: EuclideanDomain>(a: &Matrix<R>) -> Result<Matrix<R>> {
    let n = a.require_square()?;
    let det = a.det_bareiss()?;
    if !a.ring().is_unit(&det) {
        return Err(Error::NotInvertible);
    }
    let k = FractionField::new(a.ring().clone());
    let mut aug = Matrix::zero(k.clone(), n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, k.embed(a.get(i, j).clone()));
        }
        aug.set(i, n + i, k.one());
    }
    rref(&mut aug);
    let entries = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            k.to_base(aug.get(i, n + j)).ok_or_else(|| {
                Error::Internal("inverse of a unimodular matrix left the ring".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(a.ring().clone(), n, n, entries)
}
