use alloc::vec;
use alloc::vec::Vec;

use super::chain::{chain_to_idempotents, euclid_rseq, rseq_to_chain};
use super::table::{m2, table_factor_2x2, TableCase};
use crate::certify::Certificate;
use crate::error::{Error, Result};
use crate::exactmat::{left_null_row, unimodular_complete, Matrix};
use crate::rings::EuclideanDomain;

pub const ALGORITHM_2X2: &str = "euclid-2x2";

/// Idempotent factors of `[[a, b], [0, 0]]` together with a completion matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitShift<R: EuclideanDomain> {
    pub factors: Vec<Matrix<R>>,
    /// `P` with `[[a, b], [-x, 1]] * P = [[a + bx, 0], [0, 1]]`.
    pub completion: Matrix<R>,
}

/// Drops factors equal to their predecessor; `E * E = E` makes them redundant.
pub(crate) fn drop_repeats<R: EuclideanDomain>(factors: Vec<Matrix<R>>) -> Vec<Matrix<R>> {
    let mut out: Vec<Matrix<R>> = Vec::with_capacity(factors.len());
    for f in factors {
        if out.last() != Some(&f) {
            out.push(f);
        }
    }
    out
}

/// `E -> P^-1 E P` for every factor.
pub(crate) fn conjugate_all<R: EuclideanDomain>(
    factors: Vec<Matrix<R>>,
    p: &Matrix<R>,
    p_inv: &Matrix<R>,
) -> Result<Vec<Matrix<R>>> {
    if p.is_identity() {
        return Ok(factors);
    }
    factors.iter().map(|e| e.conjugate(p, p_inv)).collect()
}

/// Factors `[[a, b], [0, 0]]` when `u = a + bx` is a unit.
///
/// Splits off `[[u, 0], [0, 0]]` and writes the rest as `[[AB + 1, A], [0, 0]]`
/// with `A = b/u`, `B = -x`, which is `[[1, 0], [0, 0]]` times the idempotent
/// `(1; -B)(AB + 1, A)`.
pub fn factor_unit_shift<R: EuclideanDomain>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    x: &R::Elem,
) -> Result<UnitShift<R>> {
    let u = ring.add(a, &ring.mul(b, x));
    let v = ring.unit_inverse(&u).ok_or(Error::NotAUnit)?;
    let (o, z) = (ring.one(), ring.zero());
    let e11 = m2(ring, [[o.clone(), z.clone()], [z.clone(), z.clone()]]);

    let mut factors = if ring.is_one(&u) {
        vec![e11.clone()]
    } else {
        table_factor_2x2(ring, &TableCase::A { a: u })?
    };
    let big_a = ring.mul(&v, b);
    let big_b = ring.neg(x);
    let ab1 = ring.add(&ring.mul(&big_a, &big_b), &o);
    factors.push(e11);
    factors.push(m2(
        ring,
        [
            [ab1.clone(), big_a.clone()],
            [
                ring.neg(&ring.mul(&big_b, &ab1)),
                ring.neg(&ring.mul(&big_b, &big_a)),
            ],
        ],
    ));

    let completion = m2(
        ring,
        [
            [o.clone(), ring.neg(&big_a)],
            [x.clone(), ring.sub(&o, &ring.mul(x, &big_a))],
        ],
    );
    Ok(UnitShift {
        factors: drop_repeats(factors),
        completion,
    })
}

/// Idempotent factors of a singular 2x2 matrix.
pub fn idempotent_factors_2x2<R: EuclideanDomain>(a: &Matrix<R>) -> Result<Vec<Matrix<R>>> {
    let n = a.require_square()?;
    if n != 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "expected a 2x2 matrix, got {n}x{n}"
        )));
    }
    if !a.is_singular()? {
        return Err(Error::NotSingular);
    }
    if a.is_zero() || a.is_idempotent()? {
        return Ok(vec![a.clone()]);
    }
    let ring = a.ring().clone();
    let (p, p_inv, core) = if a.row(1).iter().all(|e| ring.is_zero(e)) {
        (
            Matrix::identity(ring.clone(), 2),
            Matrix::identity(ring.clone(), 2),
            a.clone(),
        )
    } else {
        let u = left_null_row(a)?;
        let (p, p_inv) = unimodular_complete(&ring, &u)?;
        let core = Matrix::product([&p, a, &p_inv])?;
        (p, p_inv, core)
    };
    let (x, y) = (core.get(0, 0).clone(), core.get(0, 1).clone());
    let d = ring.gcd(&x, &y);
    let mut factors = Vec::new();
    let (x, y) = if ring.is_one(&d) {
        (x, y)
    } else {
        factors.extend(table_factor_2x2(&ring, &TableCase::A { a: d.clone() })?);
        let div = |e: &R::Elem| {
            ring.exact_div(e, &d)
                .ok_or_else(|| Error::Internal("gcd does not divide".into()))
        };
        (div(&x)?, div(&y)?)
    };
    let seq = euclid_rseq(&ring, &x, &y)?;
    factors.extend(chain_to_idempotents(&ring, &rseq_to_chain(&ring, &seq)?));
    conjugate_all(factors, &p, &p_inv)
}

pub fn factor_singular_2x2<R: EuclideanDomain>(a: &Matrix<R>) -> Result<Certificate<R>> {
    let factors = idempotent_factors_2x2(a)?;
    Ok(Certificate::new(a.clone(), factors, ALGORITHM_2X2))
}
