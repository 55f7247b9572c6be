use super::Matrix;
use crate::error::{Error, Result};
use crate::rings::EuclideanDomain;

impl<R: EuclideanDomain> Matrix<R> {
    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every division in the recurrence is exact in an integral domain, so the
    /// computation never leaves the ring.
    pub fn det_bareiss(&self) -> Result<R::Elem> {
        let n = self.require_square()?;
        let r = self.ring().clone();
        if n == 0 {
            return Ok(r.one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = r.one();
        for k in 0..n - 1 {
            if r.is_zero(m.get(k, k)) {
                let Some(p) = (k + 1..n).find(|&i| !r.is_zero(m.get(i, k))) else {
                    return Ok(r.zero());
                };
                m.swap_rows(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = r.sub(
                        &r.mul(m.get(i, j), m.get(k, k)),
                        &r.mul(m.get(i, k), m.get(k, j)),
                    );
                    let v = r
                        .exact_div(&num, &prev)
                        .ok_or_else(|| Error::Internal("Bareiss division was not exact".into()))?;
                    m.set(i, j, v);
                }
                m.set(i, k, r.zero());
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { r.neg(&d) } else { d })
    }

    pub fn is_singular(&self) -> Result<bool> {
        Ok(self.ring().is_zero(&self.det_bareiss()?))
    }
}
