//! Field contexts used by the generic elimination code.
//!
//! The same echelon routines run over the rationals (exact, slow) and over
//! word-sized prime fields (fast, used by the multimodular paths). A field is
//! a context object in the style of `feanor-math`: elements are plain values
//! and all arithmetic goes through the context.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Scalar;

pub trait Field: Sync + Send {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// Image of a rational number, `None` when the denominator vanishes.
    fn from_scalar(&self, q: &Scalar) -> Option<Self::Elem>;

    fn from_i64(&self, v: i64) -> Self::Elem;

    /// `v[i] += c * w[i]` for all `i`.
    fn axpy(&self, v: &mut [Self::Elem], c: &Self::Elem, w: &[Self::Elem]) {
        for (x, y) in v.iter_mut().zip(w) {
            if !self.is_zero(y) {
                *x = self.add(x, &self.mul(c, y));
            }
        }
    }

    fn scale(&self, v: &mut [Self::Elem], c: &Self::Elem) {
        for x in v.iter_mut() {
            if !self.is_zero(x) {
                *x = self.mul(x, c);
            }
        }
    }

    /// Lifts an element back to an integer in the symmetric range, if the
    /// field is a prime field. The rationals return `None` unless the value
    /// is an integer.
    fn to_signed_integer(&self, a: &Self::Elem) -> Option<i64>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a - b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_scalar(&self, q: &Scalar) -> Option<Scalar> {
        Some(q.clone())
    }
    fn from_i64(&self, v: i64) -> Scalar {
        Scalar::from_integer(BigInt::from(v))
    }
    fn to_signed_integer(&self, a: &Scalar) -> Option<i64> {
        if a.is_integer() {
            a.numer().to_i64()
        } else {
            None
        }
    }
}

/// The prime field of order `P`. `P` must be a prime below `2^31` so that a
/// product of two reduced residues plus one more residue fits in a `u64`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PrimeField<const P: u64>;

impl<const P: u64> PrimeField<P> {
    pub const MODULUS: u64 = P;

    #[inline]
    fn pow(mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= P;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            exp >>= 1;
        }
        acc
    }

    fn reduce_bigint(v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(P));
        r.to_u64().expect("residue fits in u64")
    }
}

impl<const P: u64> Field for PrimeField<P> {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= P {
            s - P
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % P
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            P - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        Self::pow(*a, P - 2)
    }
    fn from_scalar(&self, q: &Scalar) -> Option<u64> {
        let den = Self::reduce_bigint(q.denom());
        if den == 0 {
            return None;
        }
        let num = Self::reduce_bigint(q.numer());
        Some(num * Self::pow(den, P - 2) % P)
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(P as i64) as u64
    }

    #[inline]
    fn axpy(&self, v: &mut [u64], c: &u64, w: &[u64]) {
        let c = *c;
        if c == 0 {
            return;
        }
        for (x, &y) in v.iter_mut().zip(w) {
            *x = (*x + c * y) % P;
        }
    }

    #[inline]
    fn scale(&self, v: &mut [u64], c: &u64) {
        let c = *c;
        for x in v.iter_mut() {
            *x = *x * c % P;
        }
    }

    fn to_signed_integer(&self, a: &u64) -> Option<i64> {
        let a = *a as i64;
        let p = P as i64;
        Some(if a > p / 2 { a - p } else { a })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = PrimeField<2147483647>;

    #[test]
    fn prime_field_inverse() {
        let f = F::default();
        for a in [1u64, 2, 3, 12345, 2147483646] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn rational_reduction() {
        let f = F::default();
        let half = Scalar::new(BigInt::from(1), BigInt::from(2));
        let h = f.from_scalar(&half).unwrap();
        assert_eq!(f.mul(&h, &2), 1);
        let neg = Scalar::from_integer(BigInt::from(-3));
        assert_eq!(f.to_signed_integer(&f.from_scalar(&neg).unwrap()), Some(-3));
        let bad = Scalar::new(BigInt::from(1), BigInt::from(2147483647u64));
        assert!(f.from_scalar(&bad).is_none());
    }
}
