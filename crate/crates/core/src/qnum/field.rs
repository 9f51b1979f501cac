//! Scalar abstraction: the polynomial and operator stack is generic over the
//! coefficient field, so the same construction code runs over exact rationals
//! (the default) and over truncated formal Laurent series in the base root
//! `q^(1/2L)` (the exact series pairing backend).

use super::scalar::{sc, scalar_str, Scalar};
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// A field of coefficients.  Bounds cover the mixed value/reference operator
/// forms the arithmetic-heavy code paths use; operations taking `&self` on
/// the left live in [`RefOps`], which impl blocks request explicitly.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_int(n: i64) -> Self;
    fn from_rat(r: &Scalar) -> Self;
    /// Multiplicative inverse; panics on zero (callers guard with
    /// [`Zero::is_zero`] where zero is a legitimate input).
    fn recip(&self) -> Self;
    /// Stable textual form used in fingerprints and serialized artifacts.
    fn repr(&self) -> String;
}

/// Operations available on `&S` for a field `S`.  Impl blocks that compute
/// with borrowed scalars add the one-line bound
/// `for<'x> &'x S: RefOps<S>`.
pub trait RefOps<Base>:
    Sized
    + Neg<Output = Base>
    + Add<Self, Output = Base>
    + Sub<Self, Output = Base>
    + Mul<Self, Output = Base>
    + Div<Self, Output = Base>
    + Add<Base, Output = Base>
    + Sub<Base, Output = Base>
    + Mul<Base, Output = Base>
    + Div<Base, Output = Base>
{
}

impl<Base, T> RefOps<Base> for T where
    T: Sized
        + Neg<Output = Base>
        + Add<Self, Output = Base>
        + Sub<Self, Output = Base>
        + Mul<Self, Output = Base>
        + Div<Self, Output = Base>
        + Add<Base, Output = Base>
        + Sub<Base, Output = Base>
        + Mul<Base, Output = Base>
        + Div<Base, Output = Base>
{
}

impl Field for Scalar {
    fn from_int(n: i64) -> Self {
        sc(n)
    }

    fn from_rat(r: &Scalar) -> Self {
        r.clone()
    }

    fn recip(&self) -> Self {
        Scalar::recip(self)
    }

    fn repr(&self) -> String {
        scalar_str(self)
    }
}

/// Integer power with negative exponents allowed.  `x^0 = 1` even at
/// `x = 0`; a negative power of zero panics.
pub fn pow_i<S: Field>(x: &S, k: i64) -> S {
    if k == 0 {
        return S::one();
    }
    if x.is_zero() {
        assert!(k > 0, "negative power of zero");
        return S::zero();
    }
    let mut base = if k > 0 { x.clone() } else { x.recip() };
    let mut e = k.unsigned_abs();
    let mut acc = S::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}
