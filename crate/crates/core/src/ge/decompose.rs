use alloc::vec;
use alloc::vec::Vec;

use super::GEFactor;
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::rings::EuclideanDomain;

/// `upper = F_k * ... * F_1 * B` for the recorded factors `F_1, ..., F_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangularization<R: EuclideanDomain> {
    pub factors: Vec<GEFactor<R::Elem>>,
    pub upper: Matrix<R>,
}

/// Row-reduces a square matrix to upper-triangular form with canonical pivots.
///
/// In each column the smallest-norm nonzero entry at or below the diagonal is
/// swapped up and used to reduce the entries beneath it, until they vanish.
pub fn triangularize<R: EuclideanDomain>(b: &Matrix<R>) -> Result<Triangularization<R>> {
    let n = b.require_square()?;
    let ring = b.ring().clone();
    let mut d = b.clone();
    let mut factors = Vec::new();
    let mut record = |f: GEFactor<R::Elem>, d: &mut Matrix<R>| {
        f.apply_left(d);
        factors.push(f);
    };
    for col in 0..n {
        while let Some(p) = (col..n)
            .filter(|&r| !ring.is_zero(d.get(r, col)))
            .min_by_key(|&r| ring.norm(d.get(r, col)))
        {
            if p != col {
                record(GEFactor::Swap { i: col, j: p }, &mut d);
            }
            let mut cleared = true;
            for r in col + 1..n {
                if ring.is_zero(d.get(r, col)) {
                    continue;
                }
                let (q, rem) = ring.euclid_div(d.get(r, col), d.get(col, col))?;
                if !ring.is_zero(&q) {
                    record(
                        GEFactor::Elementary {
                            i: r,
                            j: col,
                            c: ring.neg(&q),
                        },
                        &mut d,
                    );
                }
                if !ring.is_zero(&rem) {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
    }
    let scale: Vec<_> = (0..n)
        .map(|k| {
            let (u, _) = ring.canonical_associate(d.get(k, k));
            ring.unit_inverse(&u).expect("unit part invertible")
        })
        .collect();
    if !scale.iter().all(|x| ring.is_one(x)) {
        record(GEFactor::DiagUnits(scale), &mut d);
    }
    Ok(Triangularization { factors, upper: d })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ge2Strategy<E> {
    /// Triangularize, then clear the remaining upper entry.
    Euclid,
    /// Closed form built around `x` with `a + bx` a unit, `(a, b)` the first row.
    UnitShift(E),
}

/// `[[r, 1], [1, 0]] = E_01(r) E_10(1) diag(1, -1) E_01(1) E_10(-1)`.
pub fn five_factor<R: EuclideanDomain>(ring: &R, r: &R::Elem) -> Vec<GEFactor<R::Elem>> {
    let one = ring.one();
    vec![
        GEFactor::Elementary {
            i: 0,
            j: 1,
            c: r.clone(),
        },
        GEFactor::Elementary {
            i: 1,
            j: 0,
            c: one.clone(),
        },
        GEFactor::DiagUnits(vec![one.clone(), ring.neg(&one)]),
        GEFactor::Elementary {
            i: 0,
            j: 1,
            c: one.clone(),
        },
        GEFactor::Elementary {
            i: 1,
            j: 0,
            c: ring.neg(&one),
        },
    ]
}

/// GE factors of an invertible 2x2 matrix, in product order.
pub fn ge2_decompose<R: EuclideanDomain>(
    a: &Matrix<R>,
    strategy: &Ge2Strategy<R::Elem>,
) -> Result<Vec<GEFactor<R::Elem>>> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "expected a 2x2 matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let ring = a.ring();
    let det = a.det_bareiss()?;
    if !ring.is_unit(&det) {
        return Err(Error::NotInvertible);
    }
    match strategy {
        Ge2Strategy::Euclid => {
            let tri = triangularize(a)?;
            let mut out = tri
                .factors
                .iter()
                .map(|f| f.inverse(ring))
                .collect::<Result<Vec<_>>>()?;
            let t = tri.upper.get(0, 1);
            if !ring.is_zero(t) {
                out.push(GEFactor::Elementary {
                    i: 0,
                    j: 1,
                    c: t.clone(),
                });
            }
            Ok(out)
        }
        Ge2Strategy::UnitShift(x) => {
            let (a0, b0, c0, d0) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
            let u = ring.add(a0, &ring.mul(b0, x));
            let u_inv = ring.unit_inverse(&u).ok_or(Error::NotAUnit)?;
            let cdx = ring.add(c0, &ring.mul(d0, x));
            let v = ring.sub(d0, &ring.mul(&ring.mul(&cdx, &u_inv), b0));
            let v_inv = ring
                .unit_inverse(&v)
                .ok_or_else(|| Error::Internal("v is not a unit".into()))?;
            let mut out = vec![
                GEFactor::DiagUnits(vec![u, v]),
                GEFactor::Elementary {
                    i: 1,
                    j: 0,
                    c: ring.mul(&v_inv, &cdx),
                },
            ];
            out.extend(five_factor(ring, &ring.mul(&u_inv, b0)));
            out.extend(five_factor(ring, &ring.neg(x)));
            Ok(out)
        }
    }
}
