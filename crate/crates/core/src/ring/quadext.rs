//! Quadratic cyclotomic extensions of the rationals.
//!
//! The roots-of-unity evaluations all live in rings of the shape
//! `Q[zeta] / (zeta^2 - c1*zeta - c0)` for a primitive root of unity `zeta`
//! of order 3, 4, or 6. The modulus is a type parameter, so `zero()`/`one()`
//! stay nullary and matrices over these rings plug straight into the generic
//! determinant code.

use std::fmt;
use std::marker::PhantomData;

use num::traits::{One, Signed, Zero};

use super::mpoly::MPoly;
use super::rational::{fmt_rat, is_negative};
use super::{Rat, RingError};

/// Defining data of one quadratic cyclotomic modulus: `zeta^2 = C0 + C1*zeta`,
/// with `zeta` a primitive `ORDER`-th root of unity.
pub trait CycModulus:
    Copy + Clone + PartialEq + Eq + std::fmt::Debug + Send + Sync + 'static
{
    const C0: i64;
    const C1: i64;
    const ORDER: i64;
    /// Variable name used when printing elements.
    const SYMBOL: &'static str;
}

/// Primitive third root of unity: `zeta^2 = -1 - zeta`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Zeta3;
impl CycModulus for Zeta3 {
    const C0: i64 = -1;
    const C1: i64 = -1;
    const ORDER: i64 = 3;
    const SYMBOL: &'static str = "w3";
}

/// Primitive fourth root of unity: `zeta^2 = -1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Zeta4;
impl CycModulus for Zeta4 {
    const C0: i64 = -1;
    const C1: i64 = 0;
    const ORDER: i64 = 4;
    const SYMBOL: &'static str = "I";
}

/// Primitive sixth root of unity: `zeta^2 = -1 + zeta`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Zeta6;
impl CycModulus for Zeta6 {
    const C0: i64 = -1;
    const C1: i64 = 1;
    const ORDER: i64 = 6;
    const SYMBOL: &'static str = "w6";
}

/// Element `a + b*zeta` of the quadratic extension selected by `M`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt<M: CycModulus> {
    pub a: Rat,
    pub b: Rat,
    _m: PhantomData<M>,
}

impl<M: CycModulus> QuadExt<M> {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadExt { a, b, _m: PhantomData }
    }

    pub fn from_rat(a: Rat) -> Self {
        Self::new(a, Rat::zero())
    }

    pub fn from_int(a: i64) -> Self {
        Self::from_rat(Rat::from_integer(a.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn zeta() -> Self {
        Self::new(Rat::zero(), Rat::one())
    }

    /// `zeta^e` for any integer exponent (reduced modulo the root's order).
    pub fn zeta_pow(e: i64) -> Self {
        let e = e.rem_euclid(M::ORDER);
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(&Self::zeta());
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The rational part when the element has no `zeta` component.
    pub fn as_rat(&self) -> Option<Rat> {
        self.b.is_zero().then(|| self.a.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(&self.a * c, &self.b * c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // (a1 + b1 z)(a2 + b2 z) with z^2 = C0 + C1 z.
        let c0 = Rat::from_integer(M::C0.into());
        let c1 = Rat::from_integer(M::C1.into());
        let bb = &self.b * &rhs.b;
        let a = &self.a * &rhs.a + &bb * &c0;
        let b = &self.a * &rhs.b + &self.b * &rhs.a + &bb * &c1;
        Self::new(a, b)
    }

    /// Complex conjugate (the nontrivial field automorphism).
    pub fn conj(&self) -> Self {
        let c1 = Rat::from_integer(M::C1.into());
        Self::new(&self.a + &self.b * &c1, -&self.b)
    }

    /// Field norm `x * conj(x)`, always rational; vanishes only at zero.
    pub fn norm(&self) -> Rat {
        let c1 = Rat::from_integer(M::C1.into());
        &self.a * &self.a + &self.a * &self.b * &c1 + &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<M: CycModulus> fmt::Display for QuadExt<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = M::SYMBOL;
        let zeta_part = |b: &Rat| -> String {
            if b.abs().is_one() {
                sym.to_string()
            } else {
                format!("{}*{sym}", fmt_rat(&b.abs()))
            }
        };
        if self.b.is_zero() {
            write!(f, "{}", fmt_rat(&self.a))
        } else if self.a.is_zero() {
            if is_negative(&self.b) {
                write!(f, "-{}", zeta_part(&self.b))
            } else {
                write!(f, "{}", zeta_part(&self.b))
            }
        } else {
            let sign = if is_negative(&self.b) { "-" } else { "+" };
            write!(f, "{} {sign} {}", fmt_rat(&self.a), zeta_part(&self.b))
        }
    }
}

impl<M: CycModulus> super::Ring for QuadExt<M> {
    fn zero() -> Self {
        QuadExt::zero()
    }
    fn one() -> Self {
        QuadExt::one()
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        QuadExt::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        QuadExt::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        QuadExt::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        QuadExt::mul(self, rhs)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }
}

impl MPoly {
    /// Evaluate with `q` at the root of unity of `M` and the remaining
    /// variables at rationals. Fails with [`RingError::HalfPowerAtRoot`] when
    /// a term carries an odd power of `p = q^(1/2)`: such a term would need a
    /// square root of the root of unity that the extension does not contain.
    pub fn eval_at_root<M: CycModulus>(
        &self,
        z: &Rat,
        rho: &Rat,
        tau: &Rat,
    ) -> Result<QuadExt<M>, RingError> {
        use super::rational::rat_pow;
        let mut acc = QuadExt::<M>::zero();
        for (m, c) in self.terms() {
            if m.p % 2 != 0 {
                return Err(RingError::HalfPowerAtRoot(format!("term has p^{}", m.p)));
            }
            let scalar = c
                * rat_pow(z, i64::from(m.z))
                * rat_pow(rho, i64::from(m.rho))
                * rat_pow(tau, i64::from(m.tau));
            let root = QuadExt::<M>::zeta_pow(i64::from(m.p / 2));
            acc = acc.add(&root.scale(&scalar));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::mpoly::qint;
    use crate::ring::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_elt<M: CycModulus>(rng: &mut ChaCha8Rng) -> QuadExt<M> {
        QuadExt::new(rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)), rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
    }

    fn one_rat() -> Rat {
        rat(1, 1)
    }

    #[test]
    fn zeta_has_the_advertised_order() {
        fn check<M: CycModulus>() {
            for k in 1..M::ORDER {
                assert_ne!(QuadExt::<M>::zeta_pow(k), QuadExt::<M>::one(), "zeta^{k} of order {}", M::ORDER);
            }
            assert_eq!(QuadExt::<M>::zeta_pow(M::ORDER), QuadExt::<M>::one());
            assert_eq!(QuadExt::<M>::zeta_pow(-1), QuadExt::<M>::zeta_pow(M::ORDER - 1));
        }
        check::<Zeta3>();
        check::<Zeta4>();
        check::<Zeta6>();
    }

    #[test]
    fn cube_root_sums_to_zero_with_its_square() {
        let one = QuadExt::<Zeta3>::one();
        let z = QuadExt::<Zeta3>::zeta();
        assert_eq!(one.add(&z).add(&z.mul(&z)), QuadExt::<Zeta3>::zero());
    }

    #[test]
    fn norm_is_multiplicative_and_inverse_works() {
        fn check<M: CycModulus>(seed: u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..80 {
                let x = rand_elt::<M>(&mut rng);
                let y = rand_elt::<M>(&mut rng);
                assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
                assert_eq!(x.mul(&x.conj()), QuadExt::<M>::from_rat(x.norm()));
                if !x.is_zero() {
                    assert_eq!(x.mul(&x.inv().unwrap()), QuadExt::<M>::one());
                }
            }
        }
        check::<Zeta3>(3);
        check::<Zeta4>(4);
        check::<Zeta6>(6);
    }

    #[test]
    fn root_evaluations_match_hand_values() {
        // q + q^-1 at q = i is i - i = 0.
        let v = qint(2).eval_at_root::<Zeta4>(&one_rat(), &one_rat(), &one_rat()).unwrap();
        assert_eq!(v, QuadExt::<Zeta4>::zero());
        // q^2 + 1 + q^-2 at q = i is -1 + 1 - 1 = -1.
        let v = qint(3).eval_at_root::<Zeta4>(&one_rat(), &one_rat(), &one_rat()).unwrap();
        assert_eq!(v, QuadExt::<Zeta4>::from_int(-1));
        // 2 + q + q^-1 at a primitive cube root is 2 - 1 = 1.
        let f = MPoly::from_int_terms(&[(2, 0, 0, 0, 0), (1, 2, 0, 0, 0), (1, -2, 0, 0, 0)]);
        let v = f.eval_at_root::<Zeta3>(&one_rat(), &one_rat(), &one_rat()).unwrap();
        assert_eq!(v, QuadExt::<Zeta3>::one());
        // Odd half-powers are rejected.
        let err = MPoly::p_pow(1).eval_at_root::<Zeta4>(&one_rat(), &one_rat(), &one_rat());
        assert!(matches!(err, Err(RingError::HalfPowerAtRoot(_))));
    }

    #[test]
    fn display_covers_the_mixed_cases() {
        let x = QuadExt::<Zeta4>::new(rat(1, 1), rat(-1, 1));
        assert_eq!(x.to_string(), "1 - I");
        let y = QuadExt::<Zeta4>::new(rat(0, 1), rat(-4, 1));
        assert_eq!(y.to_string(), "-4*I");
        let z = QuadExt::<Zeta3>::new(rat(-1, 2), rat(3, 1));
        assert_eq!(z.to_string(), "-1/2 + 3*w3");
        assert_eq!(QuadExt::<Zeta6>::zeta().to_string(), "w6");
    }
}
