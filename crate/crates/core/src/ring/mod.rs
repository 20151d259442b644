//! Exact arithmetic kernel shared by every other module.
//!
//! - [`Rat`]: arbitrary-precision rationals (always reduced)
//! - [`binom`]: binomial coefficients that vanish outside `0 <= b <= a`
//! - [`MPoly`]: Laurent polynomials in `p` (with `q = p^2`) times ordinary
//!   polynomials in `z`, `rho`, `tau`, over [`Rat`] coefficients
//! - [`qint`]: balanced q-integers as [`MPoly`] values
//! - [`QuadExt`]: exact arithmetic in `Q(zeta)` for a quadratic root of unity
//! - [`SqMatrix`]: square matrices over any [`Ring`] with a fraction-free
//!   Bareiss determinant

mod binom;
mod matrix;
mod mpoly;
mod quadext;
mod rational;

pub use binom::{binom, factorial, rising};
pub use matrix::{mat_mul_square, SqMatrix};
pub use mpoly::{qint, MPoly, Mono};
pub use quadext::{CycModulus, QuadExt, Zeta3, Zeta4, Zeta6};
pub use rational::{fmt_rat, rat, rat_pow, Rat};

use std::fmt::Debug;

/// Errors raised by the exact-arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    /// Exact division was requested but the divisor does not divide the
    /// dividend in the ring.
    #[error("not divisible: {0}")]
    NotDivisible(String),
    /// A power of `p` with odd exponent was hit while evaluating at a point
    /// that only determines `q = p^2`.
    #[error("odd power of p cannot be evaluated at a point given only q: {0}")]
    HalfPowerAtRoot(String),
}

/// A commutative ring with exact division, as needed by fraction-free
/// elimination. All arguments are taken by reference because the elements
/// (big integers, polynomials) are expensive to clone.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Exact division: `Some(c)` with `self == rhs * c` when such an element
    /// exists, `None` otherwise (including division by zero).
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}
