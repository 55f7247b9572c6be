use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ConcreteRing, EuclideanDomain, RingDescriptor};
use crate::error::{Error, Result};

/// The integers, with arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Integers;

impl EuclideanDomain for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    /// Remainder is always in `0 <= r < |b|`.
    fn euclid_div(&self, a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut q, mut r) = a.div_rem(b);
        if r.is_negative() {
            if b.is_positive() {
                q -= 1;
                r += b;
            } else {
                q += 1;
                r -= b;
            }
        }
        Ok((q, r))
    }

    fn norm(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }

    fn canonical_associate(&self, a: &BigInt) -> (BigInt, BigInt) {
        match a.sign() {
            Sign::Minus => (-BigInt::one(), -a),
            _ => (BigInt::one(), a.clone()),
        }
    }

    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        (a.magnitude().is_one()).then(|| a.clone())
    }
}

impl ConcreteRing for Integers {
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integer
    }
}
