use num_bigint::BigUint;

use super::{ConcreteRing, EuclideanDomain, Integers, RingDescriptor};
use crate::error::{Error, Result};

/// `num / den` in lowest terms with a canonical denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction<E> {
    pub num: E,
    pub den: E,
}

/// The field of fractions of a Euclidean domain, itself a (trivially) Euclidean domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FractionField<R> {
    base: R,
}

/// `Q` as the fraction field of `Z`.
pub type Rationals = FractionField<Integers>;

impl<R: EuclideanDomain> FractionField<R> {
    pub fn new(base: R) -> Self {
        FractionField { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// Reduces `num / den`; fails only when `den = 0`.
    pub fn fraction(&self, num: R::Elem, den: R::Elem) -> Result<Fraction<R::Elem>> {
        let b = &self.base;
        if b.is_zero(&den) {
            return Err(Error::DivisionByZero);
        }
        if b.is_zero(&num) {
            return Ok(Fraction { num, den: b.one() });
        }
        let g = b.gcd(&num, &den);
        let num = b.exact_div(&num, &g).expect("gcd divides numerator");
        let den = b.exact_div(&den, &g).expect("gcd divides denominator");
        let (u, den) = b.canonical_associate(&den);
        let v = b
            .unit_inverse(&u)
            .expect("canonical unit part is invertible");
        Ok(Fraction {
            num: b.mul(&num, &v),
            den,
        })
    }

    pub fn embed(&self, a: R::Elem) -> Fraction<R::Elem> {
        Fraction {
            num: a,
            den: self.base.one(),
        }
    }

    /// The base-ring element a fraction equals, if its denominator is a unit.
    pub fn to_base(&self, f: &Fraction<R::Elem>) -> Option<R::Elem> {
        let inv = self.base.unit_inverse(&f.den)?;
        Some(self.base.mul(&f.num, &inv))
    }

    pub fn inverse(&self, f: &Fraction<R::Elem>) -> Option<Fraction<R::Elem>> {
        if self.base.is_zero(&f.num) {
            return None;
        }
        self.fraction(f.den.clone(), f.num.clone()).ok()
    }

    pub fn div(&self, a: &Fraction<R::Elem>, b: &Fraction<R::Elem>) -> Result<Fraction<R::Elem>> {
        let inv = self.inverse(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }
}

impl Rationals {
    pub fn rationals() -> Self {
        FractionField::new(Integers)
    }
}

impl<R: EuclideanDomain> EuclideanDomain for FractionField<R> {
    type Elem = Fraction<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(self.base.from_i64(n))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.num)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if r.is_one(&a.den) && r.is_one(&b.den) {
            return self.embed(r.add(&a.num, &b.num));
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.fraction(num, r.mul(&a.den, &b.den))
            .expect("product of denominators is nonzero")
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if r.is_one(&a.den) && r.is_one(&b.den) {
            return self.embed(r.mul(&a.num, &b.num));
        }
        self.fraction(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
            .expect("product of denominators is nonzero")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Fraction {
            num: self.base.neg(&a.num),
            den: a.den.clone(),
        }
    }

    /// In a field every nonzero divisor divides exactly: `q = a/b`, `r = 0`.
    fn euclid_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<(Self::Elem, Self::Elem)> {
        Ok((self.div(a, b)?, self.zero()))
    }

    fn norm(&self, _a: &Self::Elem) -> BigUint {
        BigUint::default()
    }

    fn canonical_associate(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        if self.is_zero(a) {
            (self.one(), self.zero())
        } else {
            (a.clone(), self.one())
        }
    }

    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.inverse(a)
    }
}

impl ConcreteRing for Rationals {
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rational
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::PolyModP;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Fraction<BigInt> {
        Rationals::rationals()
            .fraction(BigInt::from(n), BigInt::from(d))
            .unwrap()
    }

    #[test]
    fn reduced_with_positive_denominator() {
        assert_eq!(
            q(4, -6),
            Fraction {
                num: BigInt::from(-2),
                den: BigInt::from(3)
            }
        );
        assert_eq!(
            q(0, -6),
            Fraction {
                num: BigInt::from(0),
                den: BigInt::from(1)
            }
        );
        let qq = Rationals::rationals();
        assert_eq!(qq.add(&q(1, 2), &q(1, 3)), q(5, 6));
        assert_eq!(qq.add(&q(1, 6), &q(1, 3)), q(1, 2));
        assert_eq!(qq.mul(&q(2, 3), &q(3, 4)), q(1, 2));
        assert_eq!(
            qq.fraction(BigInt::from(1), BigInt::from(0)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn field_division_has_zero_remainder() {
        let qq = Rationals::rationals();
        assert_eq!(
            qq.euclid_div(&q(3, 4), &q(-1, 2)),
            Ok((q(-3, 2), qq.zero()))
        );
        let g = qq.ext_gcd(&q(3, 4), &q(5, 7)).unwrap();
        assert_eq!(g.d, qq.one());
        assert_eq!(
            qq.add(&qq.mul(&q(3, 4), &g.x), &qq.mul(&q(5, 7), &g.y)),
            qq.one()
        );
    }

    #[test]
    fn polynomial_fractions_have_monic_denominators() {
        let f5 = PolyModP::new(5).unwrap();
        let k = FractionField::new(f5);
        // (2x + 2) / (3x + 3) = 2/3 = 4
        let f = k.fraction(f5.poly(&[2, 2]), f5.poly(&[3, 3])).unwrap();
        assert_eq!(
            f,
            Fraction {
                num: f5.constant(4),
                den: f5.one()
            }
        );
        let f = k.fraction(f5.one(), f5.poly(&[1, 2])).unwrap();
        assert_eq!(f.den, f5.poly(&[3, 1]));
        assert_eq!(f.num, f5.constant(3));
    }
}
