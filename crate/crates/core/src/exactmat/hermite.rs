use alloc::vec::Vec;

use super::Matrix;
use crate::error::{Error, Result};
use crate::rings::EuclideanDomain;

/// `original * transform = result`, with the inverse transform tracked alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedReduction<R: EuclideanDomain> {
    pub result: Matrix<R>,
    pub transform: Matrix<R>,
    pub transform_inverse: Matrix<R>,
}

/// Column Hermite form by unimodular column operations.
///
/// Rows are scanned top to bottom. In each row the entries right of the current
/// pivot column are folded into the pivot by Euclidean steps, leaving zeros to
/// the right of the pivot and a canonical pivot. Columns past the last pivot end
/// up entirely zero.
pub fn column_hnf<R: EuclideanDomain>(a: &Matrix<R>) -> TrackedReduction<R> {
    let ring = a.ring().clone();
    let n = a.cols();
    let mut h = a.clone();
    let mut t = Matrix::identity(ring.clone(), n);
    let mut t_inv = Matrix::identity(ring.clone(), n);
    let mut k = 0;
    for i in 0..h.rows() {
        if k == n {
            break;
        }
        // Smallest-norm nonzero entry in the active part of the row; ties go to the first.
        while let Some(j) = (k..n)
            .filter(|&j| !ring.is_zero(h.get(i, j)))
            .min_by_key(|&j| ring.norm(h.get(i, j)))
        {
            h.swap_cols(k, j);
            t.swap_cols(k, j);
            t_inv.swap_rows(k, j);
            let mut done = true;
            for c in k + 1..n {
                if ring.is_zero(h.get(i, c)) {
                    continue;
                }
                let (q, r) = ring
                    .euclid_div(h.get(i, c), h.get(i, k))
                    .expect("pivot is nonzero");
                if !ring.is_zero(&q) {
                    let mq = ring.neg(&q);
                    h.add_col_multiple(c, k, &mq);
                    t.add_col_multiple(c, k, &mq);
                    t_inv.add_row_multiple(k, c, &q);
                }
                if !ring.is_zero(&r) {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if ring.is_zero(h.get(i, k)) {
            continue;
        }
        let (u, _) = ring.canonical_associate(h.get(i, k));
        if !ring.is_one(&u) {
            let v = ring.unit_inverse(&u).expect("unit part invertible");
            h.scale_col(k, &v);
            t.scale_col(k, &v);
            t_inv.scale_row(k, &u);
        }
        k += 1;
    }
    TrackedReduction {
        result: h,
        transform: t,
        transform_inverse: t_inv,
    }
}

/// An invertible `P` whose last row is the unimodular row `u`; returns `(P, P^-1)`.
///
/// `u` is column-reduced to `(0, ..., 0, 1)` by a tracked `V`, so `u = e_n * V^-1`.
pub fn unimodular_complete<R: EuclideanDomain>(
    ring: &R,
    u: &[R::Elem],
) -> Result<(Matrix<R>, Matrix<R>)> {
    let n = u.len();
    if n == 0 || u.iter().all(|x| ring.is_zero(x)) {
        return Err(Error::NotUnimodular);
    }
    let row = Matrix::new(ring.clone(), 1, n, u.to_vec())?;
    let red = column_hnf(&row);
    if !ring.is_one(red.result.get(0, 0)) {
        return Err(Error::NotUnimodular);
    }
    let mut v = red.transform;
    let mut v_inv = red.transform_inverse;
    v.swap_cols(0, n - 1);
    v_inv.swap_rows(0, n - 1);
    Ok((v_inv, v))
}

/// `C` with `C^-1 * Y * C = diag(I_h, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalIdempotent<R: EuclideanDomain> {
    pub c: Matrix<R>,
    pub c_inv: Matrix<R>,
    pub rank: usize,
}

fn leading_nonzero_columns<R: EuclideanDomain>(h: &Matrix<R>) -> usize {
    (0..h.cols())
        .take_while(|&j| (0..h.rows()).any(|i| !h.ring().is_zero(h.get(i, j))))
        .count()
}

/// Similarity of an idempotent to `diag(I_h, 0)` over a PID.
///
/// The image of `Y` is spanned by its columns and the kernel by the columns of
/// `I - Y`; Hermite bases of the two, side by side, form `C`.
pub fn idempotent_canonical_form<R: EuclideanDomain>(
    y: &Matrix<R>,
) -> Result<CanonicalIdempotent<R>> {
    let n = y.require_square()?;
    if !y.is_idempotent()? {
        return Err(Error::NotIdempotent);
    }
    let ring = y.ring().clone();
    let image = column_hnf(y).result;
    let kernel = column_hnf(&Matrix::identity(ring.clone(), n).sub(y)?).result;
    let h = leading_nonzero_columns(&image);
    let k = leading_nonzero_columns(&kernel);
    if h + k != n {
        return Err(Error::Internal(
            "image and kernel ranks do not add up".into(),
        ));
    }
    let mut c = Matrix::zero(ring.clone(), n, n);
    c.paste(0, 0, &image.submatrix(0..n, 0..h));
    c.paste(0, h, &kernel.submatrix(0..n, 0..k));
    let c_inv = c.inverse().map_err(|_| {
        Error::Internal(alloc::format!(
            "image/kernel basis of an idempotent is not unimodular: {c:?}"
        ))
    })?;
    Ok(CanonicalIdempotent { c, c_inv, rank: h })
}

/// `diag(I_h, 0_{n-h})`.
pub fn rank_projector<R: EuclideanDomain>(ring: &R, n: usize, h: usize) -> Matrix<R> {
    let d: Vec<_> = (0..n)
        .map(|i| if i < h { ring.one() } else { ring.zero() })
        .collect();
    Matrix::diagonal(ring.clone(), d)
}
