//! Commutative Euclidean domains.
//!
//! A ring is a small value (often zero-sized) that carries whatever context its
//! elements need, e.g. the modulus of `F_p[x]`. Elements are plain data; all
//! arithmetic goes through the ring so that elements never have to carry the
//! context themselves.
//!
//! Every domain fixes one canonical representative per associate class:
//! positive integers, monic polynomials, first-quadrant Gaussian integers and
//! `1` for nonzero elements of a field. Downstream constructions rely on this
//! to be deterministic.

use core::fmt::Debug;

use num_bigint::BigUint;

use crate::error::{Error, Result};

mod fraction;
mod gauss;
mod integer;
mod poly;

pub use fraction::{Fraction, FractionField, Rationals};
pub use gauss::{GaussInt, GaussianIntegers};
pub use integer::Integers;
pub use poly::{Poly, PolyModP};

/// Which concrete domain a matrix or certificate lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integer,
    Rational,
    Gauss,
    /// `F_p[x]`; the modulus is prime.
    PolyMod(u64),
}

impl RingDescriptor {
    /// Builds `F_p[x]`, rejecting composite moduli.
    pub fn poly_mod(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(RingDescriptor::PolyMod(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

/// Trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Bezout data for a pair: `a*x + b*y = d` with `d` canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtGcd<E> {
    pub d: E,
    pub x: E,
    pub y: E,
}

/// A commutative Euclidean domain with exact arithmetic.
pub trait EuclideanDomain: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Division with remainder: `a = b*q + r` with `r = 0` or `N(r) < N(b)`.
    fn euclid_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<(Self::Elem, Self::Elem)>;

    /// The Euclidean norm (absolute value, Gaussian norm, degree, or 0 in a field).
    /// The zero element has norm 0.
    fn norm(&self, a: &Self::Elem) -> BigUint;

    /// Splits `a = u * a'` with `u` a unit and `a'` the canonical associate.
    fn canonical_associate(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// Inverse of `a` if `a` is a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.unit_inverse(a).is_some()
    }

    /// `a / b` when `b` divides `a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (q, r) = self.euclid_div(a, b).ok()?;
        self.is_zero(&r).then_some(q)
    }

    fn divides(&self, d: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        self.exact_div(a, d).is_some()
    }

    /// Extended Euclid, normalized so that `d` is canonical.
    fn ext_gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Result<ExtGcd<Self::Elem>> {
        if self.is_zero(a) && self.is_zero(b) {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.euclid_div(&r0, &r1)?;
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
            t0 = core::mem::replace(&mut t1, t2);
        }
        let (u, d) = self.canonical_associate(&r0);
        let v = self
            .unit_inverse(&u)
            .ok_or_else(|| Error::Internal("canonical unit part is not invertible".into()))?;
        Ok(ExtGcd {
            d,
            x: self.mul(&s0, &v),
            y: self.mul(&t0, &v),
        })
    }

    /// Canonical gcd; `gcd(0, 0) = 0`.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match self.ext_gcd(a, b) {
            Ok(g) => g.d,
            Err(_) => self.zero(),
        }
    }
}

/// A domain that can be named in a file format.
pub trait ConcreteRing: EuclideanDomain {
    fn descriptor(&self) -> RingDescriptor;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_by_trial_division() {
        let primes: alloc::vec::Vec<u64> = (0..40).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert_eq!(RingDescriptor::poly_mod(6), Err(Error::NotPrime(6)));
        assert_eq!(RingDescriptor::poly_mod(5), Ok(RingDescriptor::PolyMod(5)));
    }

    use alloc::vec::Vec;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    /// Commutative ring axioms, Euclidean division and the Bezout identity on one triple.
    fn check_axioms<R: EuclideanDomain>(
        ring: &R,
        a: &R::Elem,
        b: &R::Elem,
        c: &R::Elem,
    ) -> core::result::Result<(), TestCaseError> {
        prop_assert_eq!(ring.add(&ring.add(a, b), c), ring.add(a, &ring.add(b, c)));
        prop_assert_eq!(ring.mul(&ring.mul(a, b), c), ring.mul(a, &ring.mul(b, c)));
        prop_assert_eq!(ring.add(a, b), ring.add(b, a));
        prop_assert_eq!(ring.mul(a, b), ring.mul(b, a));
        prop_assert_eq!(
            ring.mul(a, &ring.add(b, c)),
            ring.add(&ring.mul(a, b), &ring.mul(a, c))
        );
        prop_assert_eq!(ring.add(a, &ring.neg(a)), ring.zero());
        prop_assert_eq!(ring.sub(a, b), ring.add(a, &ring.neg(b)));
        prop_assert_eq!(ring.mul(a, &ring.one()), a.clone());
        if !ring.is_zero(b) {
            let (q, r) = ring.euclid_div(a, b).unwrap();
            prop_assert_eq!(ring.add(&ring.mul(b, &q), &r), a.clone());
            prop_assert!(ring.is_zero(&r) || ring.norm(&r) < ring.norm(b));
        }
        if let Ok(g) = ring.ext_gcd(a, b) {
            prop_assert_eq!(
                ring.add(&ring.mul(a, &g.x), &ring.mul(b, &g.y)),
                g.d.clone()
            );
            prop_assert!(ring.divides(&g.d, a) && ring.divides(&g.d, b));
            prop_assert_eq!(ring.canonical_associate(&g.d).1, g.d);
        }
        let (u, canon) = ring.canonical_associate(a);
        prop_assert!(ring.is_unit(&u));
        prop_assert_eq!(ring.mul(&u, &canon), a.clone());
        Ok(())
    }

    proptest! {
        #[test]
        fn integer_axioms(v in prop::collection::vec(-10_000i64..10_000, 3)) {
            let e: Vec<_> = v.iter().map(|&x| BigInt::from(x)).collect();
            check_axioms(&Integers, &e[0], &e[1], &e[2])?;
        }

        #[test]
        fn rational_axioms(v in prop::collection::vec((-50i64..50, 1i64..20), 3)) {
            let q = Rationals::rationals();
            let e: Vec<_> = v.iter().map(|&(n, d)| q.fraction(BigInt::from(n), BigInt::from(d)).unwrap()).collect();
            check_axioms(&q, &e[0], &e[1], &e[2])?;
        }

        #[test]
        fn gauss_axioms(v in prop::collection::vec((-100i64..100, -100i64..100), 3)) {
            let e: Vec<_> = v.iter().map(|&(re, im)| GaussInt::new(re, im)).collect();
            check_axioms(&GaussianIntegers, &e[0], &e[1], &e[2])?;
        }

        #[test]
        fn poly_axioms(
            p in prop::sample::select(alloc::vec![2u64, 3, 5, 7, 101]),
            v in prop::collection::vec(prop::collection::vec(0u64..1000, 0..6), 3),
        ) {
            let ring = PolyModP::new(p).unwrap();
            let e: Vec<_> = v.iter().map(|c| ring.poly(c)).collect();
            check_axioms(&ring, &e[0], &e[1], &e[2])?;
        }
    }
}
