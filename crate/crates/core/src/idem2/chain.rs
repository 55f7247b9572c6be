use alloc::vec;
use alloc::vec::Vec;

use super::table::m2;
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::rings::EuclideanDomain;

/// `(a, b, c, d)` with `c*a + d*b = 1`; encodes the idempotent `(a; b)(c, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutQuad<E> {
    a: E,
    b: E,
    c: E,
    d: E,
}

impl<E: Clone> BezoutQuad<E> {
    pub fn new<R: EuclideanDomain<Elem = E>>(ring: &R, a: E, b: E, c: E, d: E) -> Result<Self> {
        let s = ring.add(&ring.mul(&c, &a), &ring.mul(&d, &b));
        if !ring.is_one(&s) {
            return Err(Error::InvalidParameter(
                "quadruple violates c*a + d*b = 1".into(),
            ));
        }
        Ok(BezoutQuad { a, b, c, d })
    }

    pub fn a(&self) -> &E {
        &self.a
    }
    pub fn b(&self) -> &E {
        &self.b
    }
    pub fn c(&self) -> &E {
        &self.c
    }
    pub fn d(&self) -> &E {
        &self.d
    }

    pub fn into_parts(self) -> (E, E, E, E) {
        (self.a, self.b, self.c, self.d)
    }
}

/// A nonempty ordered list of Bezout quadruples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdemChain2<E> {
    quads: Vec<BezoutQuad<E>>,
}

impl<E: Clone> IdemChain2<E> {
    pub fn new(quads: Vec<BezoutQuad<E>>) -> Result<Self> {
        if quads.is_empty() {
            return Err(Error::BadChain("empty chain".into()));
        }
        Ok(IdemChain2 { quads })
    }

    pub fn quads(&self) -> &[BezoutQuad<E>] {
        &self.quads
    }

    pub fn len(&self) -> usize {
        self.quads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quads.is_empty()
    }

    /// `a_1 = c_1 = 1`, `b_1 = 0` and `c_i a_{i+1} + d_i b_{i+1} = 1` throughout.
    pub fn is_normalized<R: EuclideanDomain<Elem = E>>(&self, ring: &R) -> bool {
        let first = &self.quads[0];
        if !(ring.is_one(&first.a) && ring.is_one(&first.c) && ring.is_zero(&first.b)) {
            return false;
        }
        self.quads.windows(2).all(|w| {
            let link = ring.add(&ring.mul(&w[0].c, &w[1].a), &ring.mul(&w[0].d, &w[1].b));
            ring.is_one(&link)
        })
    }
}

/// `r_0, ..., r_{2n-2}`; always of odd length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSeq<E> {
    coeffs: Vec<E>,
}

impl<E> RSeq<E> {
    pub fn new(coeffs: Vec<E>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::BadLength(coeffs.len()));
        }
        Ok(RSeq { coeffs })
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }
}

pub fn idempotent_from_bezout<R: EuclideanDomain>(ring: &R, q: &BezoutQuad<R::Elem>) -> Matrix<R> {
    let m = |x, y| ring.mul(x, y);
    m2(
        ring,
        [
            [m(&q.a, &q.c), m(&q.a, &q.d)],
            [m(&q.b, &q.c), m(&q.b, &q.d)],
        ],
    )
}

pub fn chain_to_idempotents<R: EuclideanDomain>(
    ring: &R,
    ch: &IdemChain2<R::Elem>,
) -> Vec<Matrix<R>> {
    ch.quads
        .iter()
        .map(|q| idempotent_from_bezout(ring, q))
        .collect()
}

/// Rewrites a chain whose product is `[[a, b], [0, 0]]` into normalized form.
///
/// Each quad is rescaled by a unit, `(ta, tb, c/t, d/t)`, which leaves its
/// idempotent unchanged; the units are chosen so every link becomes 1.
pub fn normalize_chain<R: EuclideanDomain>(
    ring: &R,
    ch: &IdemChain2<R::Elem>,
    target: (&R::Elem, &R::Elem),
) -> Result<IdemChain2<R::Elem>> {
    let (a, b) = target;
    let z = ring.zero();
    let expected = m2(ring, [[a.clone(), b.clone()], [z.clone(), z]]);
    if Matrix::product(&chain_to_idempotents(ring, ch))? != expected {
        return Err(Error::BadChain(
            "product of the chain is not the target".into(),
        ));
    }
    if !ring.ext_gcd(a, b).is_ok_and(|g| ring.is_unit(&g.d)) {
        return Err(Error::NotCoprime);
    }
    let q1 = &ch.quads[0];
    let mut out = Vec::with_capacity(ch.len());
    out.push(BezoutQuad {
        a: ring.one(),
        b: ring.zero(),
        c: ring.one(),
        d: ring.mul(&q1.a, &q1.d),
    });
    for next in &ch.quads[1..] {
        let prev: &BezoutQuad<R::Elem> = out.last().expect("nonempty");
        let u = ring.add(&ring.mul(&prev.c, &next.a), &ring.mul(&prev.d, &next.b));
        let v = ring.unit_inverse(&u).ok_or_else(|| {
            Error::BadChain("link between consecutive quads is not a unit".into())
        })?;
        out.push(BezoutQuad {
            a: ring.mul(&next.a, &v),
            b: ring.mul(&next.b, &v),
            c: ring.mul(&next.c, &u),
            d: ring.mul(&next.d, &u),
        });
    }
    let last = out.last().expect("nonempty");
    if last.c != *a || last.d != *b {
        return Err(Error::BadChain(
            "normalized chain does not end at the target".into(),
        ));
    }
    Ok(IdemChain2 { quads: out })
}

pub fn chain_to_rseq<R: EuclideanDomain>(
    ring: &R,
    ch: &IdemChain2<R::Elem>,
) -> Result<RSeq<R::Elem>> {
    if !ch.is_normalized(ring) {
        return Err(Error::NotNormalized);
    }
    let q = &ch.quads;
    let mut r = Vec::with_capacity(2 * q.len() - 1);
    r.push(ring.neg(&q[0].d));
    for w in q.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        r.push(ring.sub(&ring.mul(&cur.a, &next.b), &ring.mul(&next.a, &cur.b)));
        r.push(ring.sub(&ring.mul(&next.c, &cur.d), &ring.mul(&cur.c, &next.d)));
    }
    Ok(RSeq { coeffs: r })
}

/// Solves `[[m00, m01], [m10, m11]] (x, y)^T = (s, t)^T` when the determinant is a unit.
fn cramer2<R: EuclideanDomain>(
    ring: &R,
    m: [[&R::Elem; 2]; 2],
    s: &R::Elem,
    t: &R::Elem,
) -> Result<(R::Elem, R::Elem)> {
    let det = ring.sub(&ring.mul(m[0][0], m[1][1]), &ring.mul(m[0][1], m[1][0]));
    let inv = ring
        .unit_inverse(&det)
        .ok_or_else(|| Error::Internal("chain system has a non-unit determinant".into()))?;
    let x = ring.sub(&ring.mul(s, m[1][1]), &ring.mul(m[0][1], t));
    let y = ring.sub(&ring.mul(m[0][0], t), &ring.mul(s, m[1][0]));
    Ok((ring.mul(&x, &inv), ring.mul(&y, &inv)))
}

pub fn rseq_to_chain<R: EuclideanDomain>(
    ring: &R,
    rs: &RSeq<R::Elem>,
) -> Result<IdemChain2<R::Elem>> {
    let r = &rs.coeffs;
    if r.len() % 2 == 0 {
        return Err(Error::BadLength(r.len()));
    }
    let one = ring.one();
    let mut quads = vec![BezoutQuad {
        a: one.clone(),
        b: ring.zero(),
        c: one.clone(),
        d: ring.neg(&r[0]),
    }];
    for k in 1..=r.len() / 2 {
        let prev = quads.last().expect("nonempty");
        // a_k b' - b_k a' = r_{2k-1} and c_k a' + d_k b' = 1, in unknowns (a', b').
        let nb = ring.neg(&prev.b);
        let (a, b) = cramer2(
            ring,
            [[&nb, &prev.a], [&prev.c, &prev.d]],
            &r[2 * k - 1],
            &one,
        )?;
        // d_k c' - c_k d' = r_{2k} and a' c' + b' d' = 1, in unknowns (c', d').
        let nc = ring.neg(&prev.c);
        let (c, d) = cramer2(ring, [[&prev.d, &nc], [&a, &b]], &r[2 * k], &one)?;
        quads.push(BezoutQuad { a, b, c, d });
    }
    Ok(IdemChain2 { quads })
}

/// `(1, 0) * M(r_{2n-2}) ... M(r_0) * S` with `M(r) = [[r, 1], [1, 0]]` and `S = [[0, -1], [1, 0]]`.
pub fn rseq_row<R: EuclideanDomain>(ring: &R, rs: &RSeq<R::Elem>) -> (R::Elem, R::Elem) {
    let (mut x, mut y) = (ring.one(), ring.zero());
    for r in rs.coeffs.iter().rev() {
        (x, y) = (ring.add(&ring.mul(&x, r), &y), x);
    }
    (y, ring.neg(&x))
}

/// An r-sequence for a coprime pair, read off the Euclidean algorithm on `(-b, a)`.
///
/// When the final remainder is a unit `g != 1` the triple `0, -g^-1, g` is
/// appended, using `(1, 0) M(g) M(-g^-1) M(0) = (g, 0)`. An even count is
/// then padded with `0, -1, 1`, using `(1, 0) M(1) M(-1) M(0) = (1, 0)`.
pub fn euclid_rseq<R: EuclideanDomain>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
) -> Result<RSeq<R::Elem>> {
    if ring.is_zero(a) && ring.is_zero(b) {
        return Err(Error::NotCoprime);
    }
    let (mut x, mut y) = (ring.neg(b), a.clone());
    let mut q = Vec::new();
    while !ring.is_zero(&y) {
        let (quot, rem) = ring.euclid_div(&x, &y)?;
        q.push(quot);
        (x, y) = (y, rem);
    }
    let g_inv = ring.unit_inverse(&x).ok_or(Error::NotCoprime)?;
    if !ring.is_one(&x) {
        q.extend([ring.zero(), ring.neg(&g_inv), x]);
    }
    if q.len() % 2 == 0 {
        q.extend([ring.zero(), ring.from_i64(-1), ring.one()]);
    }
    Ok(RSeq { coeffs: q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{GaussianIntegers, Integers, PolyModP};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn quad(a: i64, b: i64, c: i64, d: i64) -> BezoutQuad<BigInt> {
        BezoutQuad::new(&Integers, z(a), z(b), z(c), z(d)).unwrap()
    }

    fn rs(v: &[i64]) -> RSeq<BigInt> {
        RSeq::new(v.iter().map(|&x| z(x)).collect()).unwrap()
    }

    fn zm(rows: &[&[i64]]) -> Matrix<Integers> {
        Matrix::from_i64(Integers, rows).unwrap()
    }

    #[test]
    fn bezout_idempotents() {
        assert_eq!(
            idempotent_from_bezout(&Integers, &quad(2, 1, 1, -1)),
            zm(&[&[2, -2], &[1, -1]])
        );
        assert_eq!(
            idempotent_from_bezout(&Integers, &quad(1, 0, 1, 9)),
            zm(&[&[1, 9], &[0, 0]])
        );
        assert_eq!(
            idempotent_from_bezout(&Integers, &quad(0, 1, 4, 1)),
            zm(&[&[0, 0], &[4, 1]])
        );
        assert!(BezoutQuad::new(&Integers, z(2), z(1), z(1), z(1)).is_err());
    }

    #[test]
    fn regression_chain() {
        let ch = IdemChain2::new(vec![quad(1, 0, 1, 1), quad(-1, 2, 5, 3)]).unwrap();
        let es = chain_to_idempotents(&Integers, &ch);
        assert_eq!(
            es,
            vec![zm(&[&[1, 1], &[0, 0]]), zm(&[&[-5, -3], &[10, 6]])]
        );
        assert_eq!(Matrix::product(&es).unwrap(), zm(&[&[5, 3], &[0, 0]]));
        assert!(ch.is_normalized(&Integers));
        assert_eq!(chain_to_rseq(&Integers, &ch).unwrap(), rs(&[-1, 2, 2]));
        assert_eq!(rseq_to_chain(&Integers, &rs(&[-1, 2, 2])).unwrap(), ch);
    }

    #[test]
    fn normalization() {
        let raw = IdemChain2::new(vec![quad(1, 0, 1, 1), quad(1, -2, -5, -3)]).unwrap();
        let norm = normalize_chain(&Integers, &raw, (&z(5), &z(3))).unwrap();
        assert_eq!(
            norm,
            IdemChain2::new(vec![quad(1, 0, 1, 1), quad(-1, 2, 5, 3)]).unwrap()
        );
        assert_eq!(
            normalize_chain(&Integers, &norm, (&z(5), &z(3))).unwrap(),
            norm
        );

        let single = IdemChain2::new(vec![quad(1, 0, 1, 4)]).unwrap();
        assert_eq!(
            normalize_chain(&Integers, &single, (&z(1), &z(4))).unwrap(),
            single
        );

        assert!(matches!(
            normalize_chain(&Integers, &raw, (&z(5), &z(4))),
            Err(Error::BadChain(_))
        ));
    }

    #[test]
    fn normalization_rejects_non_coprime_targets() {
        // (1;0)(1,0) times (2;1)(1,-1) is [[2,-2],[0,0]]: the product matches, the pair does not generate R.
        let ch = IdemChain2::new(vec![quad(1, 0, 1, 0), quad(2, 1, 1, -1)]).unwrap();
        assert_eq!(
            normalize_chain(&Integers, &ch, (&z(2), &z(-2))),
            Err(Error::NotCoprime)
        );
    }

    #[test]
    fn single_quad_sequences() {
        let ch = IdemChain2::new(vec![quad(1, 0, 1, 7)]).unwrap();
        assert_eq!(chain_to_rseq(&Integers, &ch).unwrap(), rs(&[-7]));
        assert_eq!(rseq_to_chain(&Integers, &rs(&[-7])).unwrap(), ch);
        let ch = IdemChain2::new(vec![quad(1, 0, 1, 0)]).unwrap();
        assert_eq!(chain_to_rseq(&Integers, &ch).unwrap(), rs(&[0]));
    }

    #[test]
    fn unnormalized_chains_are_rejected() {
        let ch = IdemChain2::new(vec![quad(2, 1, 1, -1)]).unwrap();
        assert_eq!(chain_to_rseq(&Integers, &ch), Err(Error::NotNormalized));
        assert_eq!(RSeq::new(vec![z(1), z(2)]), Err(Error::BadLength(2)));
        assert_eq!(RSeq::<BigInt>::new(vec![]), Err(Error::BadLength(0)));
    }

    #[test]
    fn euclid_examples() {
        assert_eq!(
            euclid_rseq(&Integers, &z(5), &z(3)).unwrap(),
            rs(&[-1, 2, 2])
        );
        assert_eq!(
            euclid_rseq(&Integers, &z(3), &z(5)).unwrap(),
            rs(&[-2, 3, 0, -1, 1])
        );
        assert_eq!(euclid_rseq(&Integers, &z(1), &z(0)).unwrap(), rs(&[0]));
        assert_eq!(euclid_rseq(&Integers, &z(4), &z(6)), Err(Error::NotCoprime));
        assert_eq!(euclid_rseq(&Integers, &z(0), &z(0)), Err(Error::NotCoprime));
        for (a, b) in [(5, 3), (3, 5), (1, 0), (-1, 0), (0, -1), (-7, 4)] {
            let seq = euclid_rseq(&Integers, &z(a), &z(b)).unwrap();
            assert_eq!(rseq_row(&Integers, &seq), (z(a), z(b)), "{a} {b}");
        }
    }

    #[test]
    fn euclid_over_other_rings() {
        let g = GaussianIntegers;
        let (a, b) = (
            crate::rings::GaussInt::new(2, 1),
            crate::rings::GaussInt::new(1, -1),
        );
        let seq = euclid_rseq(&g, &a, &b).unwrap();
        assert_eq!(rseq_row(&g, &seq), (a, b));

        let p = PolyModP::new(5).unwrap();
        let (a, b) = (p.poly(&[1, 0, 1]), p.poly(&[2, 3]));
        let seq = euclid_rseq(&p, &a, &b).unwrap();
        assert_eq!(rseq_row(&p, &seq), (a.clone(), b.clone()));
        let ch = rseq_to_chain(&p, &seq).unwrap();
        let last = ch.quads().last().unwrap();
        assert_eq!((last.c(), last.d()), (&a, &b));
    }

    proptest! {
        #[test]
        fn rseq_round_trip(v in prop::collection::vec(-9i64..=9, 0..5).prop_flat_map(|h| {
            let n = 2 * h.len() + 1;
            prop::collection::vec(-9i64..=9, n)
        })) {
            let seq = rs(&v);
            let ch = rseq_to_chain(&Integers, &seq).unwrap();
            prop_assert!(ch.is_normalized(&Integers));
            let es = chain_to_idempotents(&Integers, &ch);
            for e in &es {
                prop_assert!(e.is_idempotent().unwrap());
            }
            let (a, b) = rseq_row(&Integers, &seq);
            let last = ch.quads().last().unwrap();
            prop_assert_eq!((last.c().clone(), last.d().clone()), (a.clone(), b.clone()));
            prop_assert_eq!(Matrix::product(&es).unwrap(), Matrix::from_rows(Integers, vec![vec![a, b], vec![z(0), z(0)]]).unwrap());
            prop_assert_eq!(chain_to_rseq(&Integers, &ch).unwrap(), seq);
        }

        #[test]
        fn euclid_pipeline_multiplies_back(a in -200i64..200, b in -200i64..200) {
            let (a, b) = (z(a), z(b));
            let d = Integers.gcd(&a, &b);
            prop_assume!(Integers.is_one(&d));
            let seq = euclid_rseq(&Integers, &a, &b).unwrap();
            prop_assert_eq!(rseq_row(&Integers, &seq), (a.clone(), b.clone()));
            let es = chain_to_idempotents(&Integers, &rseq_to_chain(&Integers, &seq).unwrap());
            prop_assert_eq!(Matrix::product(&es).unwrap(), Matrix::from_rows(Integers, vec![vec![a, b], vec![z(0), z(0)]]).unwrap());
        }

        #[test]
        fn normalization_is_idempotent(v in prop::collection::vec(-9i64..=9, 1..4).prop_map(|h| {
            let mut w = h.clone();
            w.extend(h.iter().skip(1));
            w
        }), flips in prop::collection::vec(any::<bool>(), 5)) {
            // Rescale a normalized chain by random signs, then normalize it back.
            let seq = rs(&v);
            let ch = rseq_to_chain(&Integers, &seq).unwrap();
            let scrambled: Vec<_> = ch.quads().iter().zip(flips.iter().cycle()).map(|(q, &f)| {
                let t = if f { z(-1) } else { z(1) };
                BezoutQuad::new(&Integers, q.a() * &t, q.b() * &t, q.c() * &t, q.d() * &t).unwrap()
            }).collect();
            let scrambled = IdemChain2::new(scrambled).unwrap();
            let (a, b) = rseq_row(&Integers, &seq);
            let norm = normalize_chain(&Integers, &scrambled, (&a, &b)).unwrap();
            prop_assert_eq!(&norm, &ch);
            prop_assert_eq!(normalize_chain(&Integers, &norm, (&a, &b)).unwrap(), norm);
        }
    }
}
