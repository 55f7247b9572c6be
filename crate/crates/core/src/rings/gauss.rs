use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ConcreteRing, EuclideanDomain, RingDescriptor};
use crate::error::{Error, Result};

/// `re + im*i` with arbitrary-precision coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    fn conj(&self) -> GaussInt {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplication by `i`.
    fn rotate(&self) -> GaussInt {
        GaussInt {
            re: -&self.im,
            im: self.re.clone(),
        }
    }
}

/// `n / d` rounded to the nearest integer, ties toward zero; `d > 0`.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = n.div_rem(d);
    let twice: BigInt = r.abs() * 2u32;
    if &twice > d {
        if n.is_negative() {
            q -= 1;
        } else {
            q += 1;
        }
    }
    q
}

/// `Z[i]` with rounded-quotient division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianIntegers;

impl EuclideanDomain for GaussianIntegers {
    type Elem = GaussInt;

    fn zero(&self) -> GaussInt {
        GaussInt::new(0, 0)
    }
    fn one(&self) -> GaussInt {
        GaussInt::new(1, 0)
    }
    fn from_i64(&self, n: i64) -> GaussInt {
        GaussInt::new(n, 0)
    }
    fn is_zero(&self, a: &GaussInt) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }
    fn add(&self, a: &GaussInt, b: &GaussInt) -> GaussInt {
        GaussInt {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }
    fn sub(&self, a: &GaussInt, b: &GaussInt) -> GaussInt {
        GaussInt {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }
    fn mul(&self, a: &GaussInt, b: &GaussInt) -> GaussInt {
        GaussInt {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
        }
    }
    fn neg(&self, a: &GaussInt) -> GaussInt {
        GaussInt {
            re: -&a.re,
            im: -&a.im,
        }
    }

    /// Rounds each coordinate of `a/b` to the nearest integer, so `N(r) <= N(b)/2`.
    fn euclid_div(&self, a: &GaussInt, b: &GaussInt) -> Result<(GaussInt, GaussInt)> {
        if self.is_zero(b) {
            return Err(Error::DivisionByZero);
        }
        let n = b.norm();
        let num = self.mul(a, &b.conj());
        let q = GaussInt {
            re: round_div(&num.re, &n),
            im: round_div(&num.im, &n),
        };
        let r = self.sub(a, &self.mul(b, &q));
        Ok((q, r))
    }

    fn norm(&self, a: &GaussInt) -> BigUint {
        a.norm().to_biguint().unwrap_or_default()
    }

    /// The associate with `re > 0, im >= 0`.
    fn canonical_associate(&self, a: &GaussInt) -> (GaussInt, GaussInt) {
        if self.is_zero(a) {
            return (self.one(), self.zero());
        }
        // a * i^k lands in the first quadrant for exactly one k; then a = i^(-k) * a'.
        let mut cur = a.clone();
        let mut unit = self.one();
        let minus_i = GaussInt::new(0, -1);
        for _ in 0..4 {
            if cur.re.sign() == Sign::Plus && !cur.im.is_negative() {
                return (unit, cur);
            }
            cur = cur.rotate();
            unit = self.mul(&unit, &minus_i);
        }
        unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
    }

    fn unit_inverse(&self, a: &GaussInt) -> Option<GaussInt> {
        a.norm().is_one().then(|| a.conj())
    }
}

impl ConcreteRing for GaussianIntegers {
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Gauss
    }
}
