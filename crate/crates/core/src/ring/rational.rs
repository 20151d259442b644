//! Exact rational scalars.
//!
//! `Rat` is a thin alias for `num`'s arbitrary-precision rational; this
//! module adds the small helpers the rest of the crate leans on (literal
//! construction, integer powers, canonical formatting) and wires `BigInt`
//! and `Rat` into the crate-local [`Ring`](super::Ring) trait so they can
//! sit inside the generic determinant code.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Rational literal `num/den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for any integer exponent. Panics on a negative power of zero.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return <Rat as One>::one();
    }
    let mag = base.pow(i32::try_from(exp.unsigned_abs()).expect("exponent magnitude fits i32"));
    if exp > 0 {
        mag
    } else {
        assert!(!<Rat as Zero>::is_zero(&mag), "negative power of zero");
        mag.recip()
    }
}

/// Canonical string form: integers without a denominator (`7`, `-3`),
/// everything else as `num/den` in lowest terms (`-5/2`).
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_negative(r: &Rat) -> bool {
    Signed::is_negative(r)
}

impl super::Ring for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        <BigInt as One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigInt as Zero>::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if <BigInt as Zero>::is_zero(rhs) {
            return None;
        }
        let (q, r) = num::Integer::div_rem(self, rhs);
        <BigInt as Zero>::is_zero(&r).then_some(q)
    }
}

impl super::Ring for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if <Rat as Zero>::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}
