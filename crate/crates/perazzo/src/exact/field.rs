//! Coefficient rings: arbitrary-precision rationals and prime fields.
//!
//! Rings are passed around as values so that a runtime modulus can travel
//! with the arithmetic; elements stay plain data (`BigRational`, `u64`).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A commutative ring with chosen element representation.
pub trait Ring: Clone + Eq + Debug {
    type Elt: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elt;
    fn one(&self) -> Self::Elt;
    fn is_zero(&self, a: &Self::Elt) -> bool;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn sub(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn neg(&self, a: &Self::Elt) -> Self::Elt;
    fn from_i64(&self, n: i64) -> Self::Elt;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elt) -> Option<Self::Elt>;

    fn div(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        let bi = self.inv(b).expect("division by zero");
        self.mul(a, &bi)
    }
}

/// The field of rational numbers.  `BigRational` keeps every value in lowest
/// terms with a positive denominator, which is exactly the normal form the
/// rest of the crate relies on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elt = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

/// The prime field `F_p`, `p < 2^31`.  Elements are residues in `[0, p)`,
/// so products never overflow a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31), "modulus out of range");
        assert!(is_prime_u64(p), "modulus {p} is not prime");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduce an integer.
    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("reduced residue fits u64")
    }

    /// Reduce a rational; `None` when `p` divides the denominator.
    pub fn reduce_rational(&self, r: &BigRational) -> Option<u64> {
        let den = self.reduce_int(r.denom());
        let num = self.reduce_int(r.numer());
        let deninv = self.inv(&den)?;
        Some(self.mul(&num, &deninv))
    }

    /// Every nonzero residue, in increasing order.
    pub fn units(&self) -> impl Iterator<Item = u64> {
        1..self.p
    }

    /// Every residue, in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

impl Ring for PrimeField {
    type Elt = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        let m = n.rem_euclid(self.p as i64);
        m as u64
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        Some(t.rem_euclid(self.p as i64) as u64)
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rational from an integer pair, for terse test fixtures.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let x = rat(4, -6);
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7);
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
        for a in f.units() {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
    }

    #[test]
    fn reduce_rational_mod_p() {
        let f = PrimeField::new(5);
        assert_eq!(f.reduce_rational(&rat(1, 2)), Some(3));
        assert_eq!(f.reduce_rational(&rat(1, 5)), None);
        assert_eq!(f.reduce_rational(&rat(-7, 3)), Some(1));
    }

    #[test]
    #[should_panic]
    fn composite_modulus_rejected() {
        PrimeField::new(6);
    }
}
