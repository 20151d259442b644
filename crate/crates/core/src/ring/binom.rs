//! Binomial coefficients and factorial helpers.
//!
//! Every determinant entry in this crate is a sum over a shifted index range,
//! and those sums only stay correct under one convention: `binom(a, b)` is
//! zero unless `0 <= b <= a`. In particular `binom(-1, 0) == 0`, which makes
//! out-of-range summands vanish so index ranges can be widened or narrowed
//! freely.

use num::bigint::BigInt;
use num::traits::One;

/// `a choose b` with the hard support rule: zero unless `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::from(0);
    }
    // Multiplicative form over the smaller cofactor; every partial product
    // binom(a, i) is an integer, so the division below is exact.
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Rising factorial `a * (a+1) * ... * (a+n-1)`; the empty product is 1.
pub fn rising(a: i64, n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..i64::from(n) {
        acc *= BigInt::from(a + i);
    }
    acc
}
