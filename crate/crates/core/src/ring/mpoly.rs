//! Multivariate Laurent polynomials in `(p, z, rho, tau)`.
//!
//! `p` may carry negative exponents; `z`, `rho`, `tau` are ordinary
//! polynomial variables. The substitution `q = p^2` keeps every half-integer
//! power of `q` used by the weight bookkeeping integral, so the whole crate
//! works in this one ring.
//!
//! Terms live in a `BTreeMap` keyed by [`Mono`] under ascending graded
//! lexicographic order (total degree first, then `(e_p, e_z, e_rho, e_tau)`
//! lexicographically), which makes equality structural and printing
//! canonical: `rho*tau^2 + rho^2*tau` always renders exactly like that.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::traits::{One, Signed, Zero};

use super::rational::{fmt_rat, is_negative, rat_pow};
use super::{Rat, RingError};

/// Exponent vector of one monomial. `p` is a Laurent exponent (any integer);
/// the other three stay non-negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub p: i32,
    pub z: i32,
    pub rho: i32,
    pub tau: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { p: 0, z: 0, rho: 0, tau: 0 };

    pub fn new(p: i32, z: i32, rho: i32, tau: i32) -> Self {
        debug_assert!(z >= 0 && rho >= 0 && tau >= 0, "z/rho/tau exponents stay non-negative");
        Mono { p, z, rho, tau }
    }

    fn grade(&self) -> i64 {
        i64::from(self.p) + i64::from(self.z) + i64::from(self.rho) + i64::from(self.tau)
    }

    fn mul(&self, rhs: &Mono) -> Mono {
        Mono::new(self.p + rhs.p, self.z + rhs.z, self.rho + rhs.rho, self.tau + rhs.tau)
    }

    /// Component-wise quotient when `rhs` divides `self` in the polynomial
    /// monoid (all exponents assumed non-negative by the division routine).
    fn try_div(&self, rhs: &Mono) -> Option<Mono> {
        if self.p >= rhs.p && self.z >= rhs.z && self.rho >= rhs.rho && self.tau >= rhs.tau {
            Some(Mono::new(self.p - rhs.p, self.z - rhs.z, self.rho - rhs.rho, self.tau - rhs.tau))
        } else {
            None
        }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.grade(), self.p, self.z, self.rho, self.tau)
            .cmp(&(other.grade(), other.p, other.z, other.rho, other.tau))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in `p` and ordinary polynomial in `z`, `rho`, `tau`
/// over exact rationals. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rat::from_integer(c.into()))
    }

    pub fn term(m: Mono, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// `p^e` for any integer exponent.
    pub fn p_pow(e: i32) -> Self {
        Self::term(Mono::new(e, 0, 0, 0), Rat::one())
    }

    /// `q^k = p^(2k)`.
    pub fn q_pow(k: i32) -> Self {
        Self::p_pow(2 * k)
    }

    pub fn z_var() -> Self {
        Self::term(Mono::new(0, 1, 0, 0), Rat::one())
    }

    pub fn rho_var() -> Self {
        Self::term(Mono::new(0, 0, 1, 0), Rat::one())
    }

    pub fn tau_var() -> Self {
        Self::term(Mono::new(0, 0, 0, 1), Rat::one())
    }

    /// Build from integer-coefficient terms `(c, e_p, e_z, e_rho, e_tau)`;
    /// repeated monomials accumulate. Handy for frozen expected values.
    pub fn from_int_terms(terms: &[(i64, i32, i32, i32, i32)]) -> Self {
        let mut acc = MPoly::zero();
        for &(c, p, z, rho, tau) in terms {
            acc = acc.add(&Self::term(Mono::new(p, z, rho, tau), Rat::from_integer(c.into())));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending graded lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(*m).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        MPoly { terms }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m).or_insert_with(Rat::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        MPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn min_p_exp(&self) -> i32 {
        self.terms.keys().map(|m| m.p).min().unwrap_or(0)
    }

    pub fn max_p_exp(&self) -> i32 {
        self.terms.keys().map(|m| m.p).max().unwrap_or(0)
    }

    /// Multiply by `p^delta`.
    pub fn shift_p(&self, delta: i32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono::new(m.p + delta, m.z, m.rho, m.tau), c.clone()))
                .collect(),
        }
    }

    /// Exact division in the Laurent ring. Errors with
    /// [`RingError::NotDivisible`] when no exact quotient exists; a failed
    /// division is how the identity checks report a broken factorization.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.is_zero() {
            return Err(RingError::NotDivisible("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(MPoly::zero());
        }
        // Normalize both operands to plain polynomials (minimal p-exponent 0);
        // the p-shift of the quotient is recovered at the end.
        let shift = self.min_p_exp() - rhs.min_p_exp();
        let mut rem = self.shift_p(-self.min_p_exp());
        let den = rhs.shift_p(-rhs.min_p_exp());
        let (dm, dc) = den.terms.last_key_value().expect("divisor is non-zero");
        let mut quo = MPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.terms.last_key_value().expect("loop guard");
            // If an exact quotient exists, the leading term of the remainder
            // is always divisible by the leading term of the divisor; the
            // first failure proves indivisibility.
            let Some(m) = rm.try_div(dm) else {
                return Err(RingError::NotDivisible(format!(
                    "leading term {} not divisible by {}",
                    MPoly::term(*rm, rc.clone()),
                    MPoly::term(*dm, dc.clone()),
                )));
            };
            let t = MPoly::term(m, rc / dc);
            rem = rem.sub(&t.mul(&den));
            quo = quo.add(&t);
        }
        Ok(quo.shift_p(shift))
    }

    /// Substitute `z -> g`. The replacement must not itself involve `z`.
    pub fn subst_z(&self, g: &Self) -> Self {
        debug_assert!(g.terms.keys().all(|m| m.z == 0), "replacement reintroduces z");
        let mut acc = MPoly::zero();
        let mut cache: Vec<MPoly> = vec![MPoly::one()];
        for (m, c) in &self.terms {
            let e = m.z as usize;
            while cache.len() <= e {
                let next = cache.last().expect("non-empty").mul(g);
                cache.push(next);
            }
            let rest = MPoly::term(Mono::new(m.p, 0, m.rho, m.tau), c.clone());
            acc = acc.add(&rest.mul(&cache[e]));
        }
        acc
    }

    fn set_var(&self, v: &Rat, pick: fn(&Mono) -> i32, clear: fn(&Mono) -> Mono) -> Self {
        let mut acc = MPoly::zero();
        for (m, c) in &self.terms {
            let coeff = c * rat_pow(v, i64::from(pick(m)));
            acc = acc.add(&MPoly::term(clear(m), coeff));
        }
        acc
    }

    /// Evaluate `z` at a rational, keeping the other variables symbolic.
    pub fn set_z(&self, v: &Rat) -> Self {
        self.set_var(v, |m| m.z, |m| Mono::new(m.p, 0, m.rho, m.tau))
    }

    /// Evaluate `rho` at a rational, keeping the other variables symbolic.
    pub fn set_rho(&self, v: &Rat) -> Self {
        self.set_var(v, |m| m.rho, |m| Mono::new(m.p, m.z, 0, m.tau))
    }

    /// Evaluate `tau` at a rational, keeping the other variables symbolic.
    pub fn set_tau(&self, v: &Rat) -> Self {
        self.set_var(v, |m| m.tau, |m| Mono::new(m.p, m.z, m.rho, 0))
    }

    /// Exchange the `rho` and `tau` exponents of every term.
    pub fn swap_rho_tau(&self) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono::new(m.p, m.z, m.tau, m.rho), c.clone()))
                .collect(),
        }
    }

    /// Substitute `p -> p^-1` (hence `q -> q^-1`).
    pub fn subst_p_inv(&self) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono::new(-m.p, m.z, m.rho, m.tau), c.clone()))
                .collect(),
        }
    }

    /// Full rational evaluation. `p` must be non-zero when negative
    /// `p`-exponents are present.
    pub fn eval(&self, p: &Rat, z: &Rat, rho: &Rat, tau: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            acc += c
                * rat_pow(p, i64::from(m.p))
                * rat_pow(z, i64::from(m.z))
                * rat_pow(rho, i64::from(m.rho))
                * rat_pow(tau, i64::from(m.tau));
        }
        acc
    }

    /// Evaluate at a rational value of `q = p^2`. Every `p`-exponent must be
    /// even; an odd exponent would need a square root of `q`.
    pub fn eval_at_q(&self, q: &Rat, z: &Rat, rho: &Rat, tau: &Rat) -> Result<Rat, RingError> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            if m.p % 2 != 0 {
                return Err(RingError::HalfPowerAtRoot(format!("term has p^{}", m.p)));
            }
            acc += c
                * rat_pow(q, i64::from(m.p / 2))
                * rat_pow(z, i64::from(m.z))
                * rat_pow(rho, i64::from(m.rho))
                * rat_pow(tau, i64::from(m.tau));
        }
        Ok(acc)
    }

    /// First monomial (in canonical order) whose coefficients differ between
    /// `self` and `other`, as a human-readable witness.
    pub fn first_diff(&self, other: &Self) -> Option<String> {
        let keys: std::collections::BTreeSet<&Mono> =
            self.terms.keys().chain(other.terms.keys()).collect();
        for m in keys {
            let a = self.coeff(m);
            let b = other.coeff(m);
            if a != b {
                let name = MPoly::term(*m, Rat::one());
                return Some(format!("coefficient of {name}: {} vs {}", fmt_rat(&a), fmt_rat(&b)));
            }
        }
        None
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = is_negative(c);
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (name, e) in [("p", m.p), ("z", m.z), ("rho", m.rho), ("tau", m.tau)] {
                if e == 1 {
                    factors.push(name.to_string());
                } else if e != 0 {
                    factors.push(format!("{name}^{e}"));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&mag), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl super::Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        MPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MPoly::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MPoly::mul(self, rhs)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        MPoly::exact_div(self, rhs).ok()
    }
}

/// Balanced q-integer as a Laurent polynomial in `p` (`q = p^2`):
/// zero for `k = 0`, `q^(k-1) + q^(k-3) + ... + q^(1-k)` for `k > 0`, and the
/// negation of the mirror value for `k < 0`. Division-free, so it stays
/// meaningful at roots of unity including `q = -1`.
pub fn qint(k: i64) -> MPoly {
    match k {
        0 => MPoly::zero(),
        k if k < 0 => qint(-k).neg(),
        k => {
            let mut acc = MPoly::zero();
            for j in 0..k {
                let e = k - 1 - 2 * j;
                acc = acc.add(&MPoly::q_pow(i32::try_from(e).expect("exponent fits i32")));
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(rng: &mut ChaCha8Rng) -> MPoly {
        let n_terms = rng.gen_range(0..=5);
        let mut acc = MPoly::zero();
        for _ in 0..n_terms {
            let m = Mono::new(
                rng.gen_range(-4..=4),
                rng.gen_range(0..=3),
                rng.gen_range(0..=3),
                rng.gen_range(0..=3),
            );
            let c = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
            acc = acc.add(&MPoly::term(m, c));
        }
        acc
    }

    #[test]
    fn qint_examples() {
        // qint(3) = q^2 + 1 + q^-2
        assert_eq!(qint(3), MPoly::from_int_terms(&[(1, 4, 0, 0, 0), (1, 0, 0, 0, 0), (1, -4, 0, 0, 0)]));
        // qint(-2) = -q - q^-1
        assert_eq!(qint(-2), MPoly::from_int_terms(&[(-1, 2, 0, 0, 0), (-1, -2, 0, 0, 0)]));
        assert_eq!(qint(0), MPoly::zero());
        assert_eq!(qint(1), MPoly::one());
    }

    #[test]
    fn qint_matches_ratio_definition_at_q_two() {
        // For q = 2 the balanced q-integer agrees with
        // (q^k - q^-k) / (q - q^-1).
        let q = rat(2, 1);
        let dq = &q - q.recip();
        for k in -20i64..=20 {
            let expect = (rat_pow(&q, k) - rat_pow(&q, -k)) / dq.clone();
            let got = qint(k).eval_at_q(&q, &rat(1, 1), &rat(1, 1), &rat(1, 1)).unwrap();
            assert_eq!(got, expect, "k = {k}");
        }
    }

    #[test]
    fn display_is_canonical() {
        let f = MPoly::from_int_terms(&[(1, 0, 0, 1, 2), (1, 0, 0, 2, 1)]);
        assert_eq!(f.to_string(), "rho*tau^2 + rho^2*tau");
        let g = MPoly::from_int_terms(&[(-1, -3, 0, 0, 0), (1, -1, 0, 0, 0), (1, 1, 0, 0, 0), (-1, 3, 0, 0, 0)]);
        assert_eq!(g.to_string(), "-p^-3 + p^-1 + p - p^3");
        assert_eq!(MPoly::zero().to_string(), "0");
        let h = MPoly::term(Mono::new(0, 1, 0, 0), rat(-1, 2));
        assert_eq!(h.to_string(), "-1/2*z");
    }

    #[test]
    fn ring_axioms_hold_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..120 {
            let f = random_poly(&mut rng);
            let g = random_poly(&mut rng);
            let h = random_poly(&mut rng);
            assert_eq!(f.add(&g), g.add(&f));
            assert_eq!(f.mul(&g), g.mul(&f));
            assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
            assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            assert_eq!(f.sub(&f), MPoly::zero());
            assert_eq!(f.mul(&MPoly::one()), f);
        }
    }

    #[test]
    fn exact_div_round_trips_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut nontrivial = 0;
        for _ in 0..200 {
            let f = random_poly(&mut rng);
            let g = random_poly(&mut rng);
            if g.is_zero() {
                continue;
            }
            nontrivial += 1;
            let prod = f.mul(&g);
            assert_eq!(prod.exact_div(&g).expect("product divides"), f);
        }
        assert!(nontrivial > 100);
    }

    #[test]
    fn exact_div_examples() {
        // (q^2 - 1) / (q - 1) = q + 1, written in p.
        let num = MPoly::from_int_terms(&[(1, 4, 0, 0, 0), (-1, 0, 0, 0, 0)]);
        let den = MPoly::from_int_terms(&[(1, 2, 0, 0, 0), (-1, 0, 0, 0, 0)]);
        let quo = MPoly::from_int_terms(&[(1, 2, 0, 0, 0), (1, 0, 0, 0, 0)]);
        assert_eq!(num.exact_div(&den).unwrap(), quo);

        // Laurent shift: (p - p^-1) / p^-1 = p^2 - 1.
        let num = MPoly::from_int_terms(&[(1, 1, 0, 0, 0), (-1, -1, 0, 0, 0)]);
        let den = MPoly::p_pow(-1);
        let quo = MPoly::from_int_terms(&[(1, 2, 0, 0, 0), (-1, 0, 0, 0, 0)]);
        assert_eq!(num.exact_div(&den).unwrap(), quo);

        // rho*tau + 1 does not divide rho^2*tau.
        let num = MPoly::from_int_terms(&[(1, 0, 0, 2, 1)]);
        let den = MPoly::from_int_terms(&[(1, 0, 0, 1, 1), (1, 0, 0, 0, 0)]);
        assert!(matches!(num.exact_div(&den), Err(RingError::NotDivisible(_))));
    }

    #[test]
    fn substitution_and_partial_evaluation() {
        // f = z^2*rho; z -> 2 + q + q^-1.
        let f = MPoly::from_int_terms(&[(1, 0, 2, 1, 0)]);
        let repl = MPoly::from_int_terms(&[(2, 0, 0, 0, 0), (1, 2, 0, 0, 0), (1, -2, 0, 0, 0)]);
        let got = f.subst_z(&repl);
        assert_eq!(got, repl.pow(2).mul(&MPoly::rho_var()));

        let g = MPoly::from_int_terms(&[(1, 0, 0, 1, 2), (1, 0, 0, 2, 1)]);
        assert_eq!(g.set_tau(&rat(1, 1)), MPoly::from_int_terms(&[(1, 0, 0, 1, 0), (1, 0, 0, 2, 0)]));
        assert_eq!(g.swap_rho_tau(), g);
        let asym = MPoly::from_int_terms(&[(1, 0, 0, 3, 1)]);
        assert_eq!(asym.swap_rho_tau(), MPoly::from_int_terms(&[(1, 0, 0, 1, 3)]));
    }

    #[test]
    fn eval_at_q_rejects_odd_p_powers() {
        let f = MPoly::p_pow(3);
        assert!(matches!(
            f.eval_at_q(&rat(4, 1), &rat(1, 1), &rat(1, 1), &rat(1, 1)),
            Err(RingError::HalfPowerAtRoot(_))
        ));
        let g = MPoly::q_pow(-2);
        assert_eq!(g.eval_at_q(&rat(2, 1), &rat(1, 1), &rat(1, 1), &rat(1, 1)).unwrap(), rat(1, 4));
    }
}
