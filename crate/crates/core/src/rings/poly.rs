use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::{is_prime, ConcreteRing, EuclideanDomain, RingDescriptor};
use crate::error::{Error, Result};

/// Coefficients over `Z/p`, lowest degree first, without trailing zeros.
/// The zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<u64>);

impl Poly {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> Option<u64> {
        self.0.last().copied()
    }
}

/// `F_p[x]` for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyModP {
    p: u64,
}

impl PolyModP {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PolyModP { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Builds a polynomial from residues (reduced mod `p`), lowest degree first.
    pub fn poly(&self, coeffs: &[u64]) -> Poly {
        self.trim(coeffs.iter().map(|&c| c % self.p).collect())
    }

    /// Same, from signed residues.
    pub fn poly_i64(&self, coeffs: &[i64]) -> Poly {
        self.trim(coeffs.iter().map(|&c| self.reduce_i64(c)).collect())
    }

    pub fn constant(&self, c: u64) -> Poly {
        self.poly(&[c])
    }

    fn reduce_i64(&self, c: i64) -> u64 {
        (c as i128).rem_euclid(self.p as i128) as u64
    }

    fn trim(&self, mut v: Vec<u64>) -> Poly {
        while v.last() == Some(&0) {
            v.pop();
        }
        Poly(v)
    }

    fn add_c(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    fn sub_c(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + self.p as u128 - b as u128) % self.p as u128) as u64
    }

    fn mul_c(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv_c(&self, a: u64) -> u64 {
        // Fermat: a^(p-2).
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_c(acc, base);
            }
            base = self.mul_c(base, base);
            exp >>= 1;
        }
        acc
    }

    fn scale(&self, a: &Poly, c: u64) -> Poly {
        self.trim(a.0.iter().map(|&x| self.mul_c(x, c)).collect())
    }
}

impl EuclideanDomain for PolyModP {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly(Vec::new())
    }
    fn one(&self) -> Poly {
        self.constant(1)
    }
    fn from_i64(&self, n: i64) -> Poly {
        self.poly_i64(&[n])
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.0.is_empty()
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let v = (0..n)
            .map(|i| self.add_c(*a.0.get(i).unwrap_or(&0), *b.0.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let v = (0..n)
            .map(|i| self.sub_c(*a.0.get(i).unwrap_or(&0), *b.0.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.0.is_empty() || b.0.is_empty() {
            return self.zero();
        }
        let mut v = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                v[i + j] = self.add_c(v[i + j], self.mul_c(x, y));
            }
        }
        self.trim(v)
    }

    fn neg(&self, a: &Poly) -> Poly {
        self.trim(a.0.iter().map(|&x| self.sub_c(0, x)).collect())
    }

    /// Schoolbook long division.
    fn euclid_div(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let (db, lb) = match (b.degree(), b.lead()) {
            (Some(d), Some(l)) => (d, l),
            _ => return Err(Error::DivisionByZero),
        };
        let inv = self.inv_c(lb);
        let mut r = a.0.clone();
        let Some(da) = a.degree().filter(|&da| da >= db) else {
            return Ok((self.zero(), a.clone()));
        };
        let mut q = vec![0u64; da - db + 1];
        for k in (0..=da - db).rev() {
            let c = self.mul_c(r[k + db], inv);
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (j, &bj) in b.0.iter().enumerate() {
                r[k + j] = self.sub_c(r[k + j], self.mul_c(c, bj));
            }
        }
        Ok((self.trim(q), self.trim(r)))
    }

    fn norm(&self, a: &Poly) -> BigUint {
        BigUint::from(a.degree().unwrap_or(0))
    }

    /// Monic associate; the unit is the leading coefficient.
    fn canonical_associate(&self, a: &Poly) -> (Poly, Poly) {
        match a.lead() {
            None => (self.one(), self.zero()),
            Some(l) => (self.constant(l), self.scale(a, self.inv_c(l))),
        }
    }

    fn unit_inverse(&self, a: &Poly) -> Option<Poly> {
        match a.0.as_slice() {
            [c] => Some(self.constant(self.inv_c(*c))),
            _ => None,
        }
    }
}

impl ConcreteRing for PolyModP {
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PolyMod(self.p)
    }
}
