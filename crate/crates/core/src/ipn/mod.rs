//! Singular `n x n` matrices as products of idempotents, by induction on `n`.
//!
//! A singular matrix is first conjugated so its last row vanishes,
//! `[[B, C], [0, 0]]`. A singular `B` recurses directly. Otherwise `B` is
//! triangularized, the triangular remainder is split along its first row, and
//! the induction hypothesis is applied to two strictly smaller blocks.

use alloc::vec;
use alloc::vec::Vec;

use crate::certify::Certificate;
use crate::error::{Error, Result};
use crate::exactmat::{idempotent_canonical_form, left_null_row, unimodular_complete, Matrix};
use crate::ge::{embed_ge_as_idempotents, triangularize, Embeddable, GEFactor};
use crate::idem2::{conjugate_all, drop_repeats, idempotent_factors_2x2};
use crate::rings::EuclideanDomain;

pub const ALGORITHM: &str = "bordered-induction";

/// `P * A * P^-1 = core` with the last row of `core` zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderedForm<R: EuclideanDomain> {
    pub p: Matrix<R>,
    pub p_inv: Matrix<R>,
    pub core: Matrix<R>,
}

/// Bookkeeping collected during one factorization.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FactorStats {
    /// Deepest nesting of recursive calls, counting the top-level call as 1.
    pub max_depth: usize,
}

pub fn bordered_form<R: EuclideanDomain>(a: &Matrix<R>) -> Result<BorderedForm<R>> {
    let n = a.require_square()?;
    let ring = a.ring().clone();
    if a.row(n - 1).iter().all(|e| ring.is_zero(e)) {
        let id = Matrix::identity(ring, n);
        return Ok(BorderedForm {
            p: id.clone(),
            p_inv: id,
            core: a.clone(),
        });
    }
    let u = left_null_row(a)?;
    let (p, p_inv) = unimodular_complete(&ring, &u)?;
    let core = Matrix::product([&p, a, &p_inv])?;
    Ok(BorderedForm { p, p_inv, core })
}

pub fn factor_singular<R: EuclideanDomain>(a: &Matrix<R>) -> Result<Certificate<R>> {
    Ok(factor_singular_with_stats(a)?.0)
}

pub fn factor_singular_with_stats<R: EuclideanDomain>(
    a: &Matrix<R>,
) -> Result<(Certificate<R>, FactorStats)> {
    let n = a.require_square()?;
    if n == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    if !a.is_singular()? {
        return Err(Error::NotSingular);
    }
    let mut stats = FactorStats::default();
    let factors = drop_repeats(factor_rec(a, 1, &mut stats)?);
    Ok((Certificate::new(a.clone(), factors, ALGORITHM), stats))
}

fn factor_rec<R: EuclideanDomain>(
    a: &Matrix<R>,
    depth: usize,
    stats: &mut FactorStats,
) -> Result<Vec<Matrix<R>>> {
    stats.max_depth = stats.max_depth.max(depth);
    let n = a.rows();
    match n {
        1 if a.is_zero() => return Ok(vec![a.clone()]),
        1 => return Err(Error::NotSingular),
        2 => return idempotent_factors_2x2(a),
        _ => {}
    }
    if a.is_zero() || a.is_idempotent()? {
        return Ok(vec![a.clone()]);
    }
    let ring = a.ring().clone();
    let bf = bordered_form(a)?;
    let b = bf.core.submatrix(0..n - 1, 0..n - 1);
    let factors = if b.is_singular()? {
        let mut head = Matrix::identity(ring.clone(), n);
        head.set(n - 1, n - 1, ring.zero());
        head.paste(0, n - 1, &bf.core.submatrix(0..n - 1, n - 1..n));
        let one = Matrix::identity(ring.clone(), 1);
        let mut out = vec![head];
        for y in factor_rec(&b, depth + 1, stats)? {
            out.push(y.direct_sum(&one));
        }
        out
    } else {
        reduce_rec(&bf.core, depth, stats)?
    };
    conjugate_all(factors, &bf.p, &bf.p_inv)
}

/// Idempotent factors of `[[B, C], [0, 0]]` with `B` nonsingular and `n >= 3`.
pub fn reduce_bordered<R: EuclideanDomain>(core: &Matrix<R>) -> Result<Vec<Matrix<R>>> {
    let n = core.require_square()?;
    if n < 3 {
        return Err(Error::SizeTooSmall(n));
    }
    if !core.row(n - 1).iter().all(|e| core.ring().is_zero(e)) {
        return Err(Error::InvalidParameter("last row is not zero".into()));
    }
    if core.submatrix(0..n - 1, 0..n - 1).is_singular()? {
        return Err(Error::InvalidParameter("leading block is singular".into()));
    }
    reduce_rec(core, 1, &mut FactorStats::default())
}

fn reduce_rec<R: EuclideanDomain>(
    core: &Matrix<R>,
    depth: usize,
    stats: &mut FactorStats,
) -> Result<Vec<Matrix<R>>> {
    if core.is_idempotent()? {
        return Ok(vec![core.clone()]);
    }
    let ring = core.ring().clone();
    let n = core.rows();
    let m = n - 1;
    let mut out = Vec::new();

    // core = hat(F_1^-1) ... hat(F_l^-1) * [[D, F_l ... F_1 C], [0, 0]]
    let tri = triangularize(&core.submatrix(0..m, 0..m))?;
    let mut rest = Matrix::zero(ring.clone(), n, n);
    rest.paste(0, 0, &tri.upper);
    let mut col = core.submatrix(0..m, m..n);
    for f in &tri.factors {
        f.apply_left(&mut col);
        out.extend(embed_ge_as_idempotents(
            &ring,
            &Embeddable::Factor(f.inverse(&ring)?),
            n,
        )?);
    }
    rest.paste(0, m, &col);

    // rest = diag(1, D_1) * [[d_1, top], [0, Y_m]] where D_1 = Y_1 ... Y_m.
    let d1 = rest.submatrix(1..n, 1..n);
    let mut ys = factor_rec(&d1, depth + 1, stats)?;
    while ys.last().is_some_and(Matrix::is_identity) {
        ys.pop();
    }
    let Some(y_m) = ys.last().cloned() else {
        return Err(Error::Internal(
            "trailing block factored into identities only".into(),
        ));
    };
    if y_m.is_zero() {
        return Err(Error::Internal(
            "last factor of the trailing block is zero".into(),
        ));
    }
    let one = Matrix::identity(ring.clone(), 1);
    out.extend(ys.iter().map(|y| one.direct_sum(y)));

    // Conjugate [[d_1, top], [0, Y_m]] by G = diag(1, C_Y) into [[d_1, t], [0, diag(I_h, 0)]].
    let cf = idempotent_canonical_form(&y_m)?;
    let h = cf.rank;
    if h == 0 || h >= m {
        return Err(Error::Internal(
            "trailing idempotent has degenerate rank".into(),
        ));
    }
    let g = one.direct_sum(&cf.c);
    let g_inv = one.direct_sum(&cf.c_inv);
    let mut t = Matrix::zero(ring.clone(), n, n);
    t.set(0, 0, rest.get(0, 0).clone());
    t.paste(0, 1, &rest.submatrix(0..1, 1..n).mul(&cf.c)?);
    for i in 1..=h {
        t.set(i, i, ring.one());
    }

    // Move coordinate 0 to position h: new index p holds old index order[p].
    let order: Vec<usize> = (1..=h).chain([0]).chain(h + 1..n).collect();
    let mut q = Matrix::zero(ring.clone(), n, n);
    for (p, &o) in order.iter().enumerate() {
        q.set(p, o, ring.one());
    }
    let qt = q.transpose();
    let mut t2 = Matrix::product([&q, &t, &qt])?;

    // Clear row h left of the diagonal; the identity rows above make each step independent.
    let mut group = Vec::new();
    for k in 0..h {
        let c = t2.get(h, k).clone();
        if ring.is_zero(&c) {
            continue;
        }
        group.extend(embed_ge_as_idempotents(
            &ring,
            &Embeddable::Factor(GEFactor::Elementary {
                i: h,
                j: k,
                c: c.clone(),
            }),
            n,
        )?);
        t2.add_row_multiple(h, k, &ring.neg(&c));
    }
    let star = t2.submatrix(h..n, h..n);
    let ih = Matrix::identity(ring.clone(), h);
    for z in factor_rec(&star, depth + 1, stats)? {
        group.push(ih.direct_sum(&z));
    }

    // Each E in the group becomes K E K^-1 with K = G Q^T.
    let k = g.mul(&qt)?;
    let k_inv = q.mul(&g_inv)?;
    out.extend(conjugate_all(group, &k_inv, &k)?);
    Ok(out)
}
