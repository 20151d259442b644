//! Elementary and complete homogeneous symmetric functions on rational
//! alphabets, the rectangular-product factorization of the Cauchy-type
//! double-kernel determinant, and the partition function derived from it.
//!
//! The factorization states that
//! `F_q(V,U) = (-1)^{n(n-1)/2} det(1/((v_i-u_j)(q v_i-u_j)))
//!            * prod_{i,j}(v_i-u_j)(q v_i-u_j) / (Delta(V) Delta(U))`
//! equals the determinant of an `n x n` product of two rectangular matrices
//! built from `h_k(V)` and `e_k(U)`. Both sides are evaluated exactly at
//! rational points; equality of the two independent pipelines at generic
//! sampled points is the verification strategy, since both sides are
//! rational functions of bounded degree.

use num::traits::{One, Zero};

use crate::ice::SpectralParams;
use crate::report::CheckError;
use crate::ring::{mat_mul_square, rat, rat_pow, Rat};

/// Elementary symmetric function `e_k` of the alphabet; 0 outside
/// `0 <= k <= |u|`.
pub fn elem_sym(u: &[Rat], k: i64) -> Rat {
    if k < 0 || k as usize > u.len() {
        return Rat::zero();
    }
    let k = k as usize;
    let mut e = vec![Rat::zero(); k + 1];
    e[0] = Rat::one();
    for (idx, x) in u.iter().enumerate() {
        for j in (1..=k.min(idx + 1)).rev() {
            let add = x * &e[j - 1];
            e[j] += add;
        }
    }
    e.pop().expect("table has k+1 entries")
}

/// Complete homogeneous symmetric function `h_k` of the alphabet; 0 for
/// `k < 0`, and `h_0 = 1` (also on the empty alphabet).
pub fn hom_sym(u: &[Rat], k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let k = k as usize;
    let mut h = vec![Rat::zero(); k + 1];
    h[0] = Rat::one();
    for x in u {
        for m in 1..=k {
            let add = x * &h[m - 1];
            h[m] += add;
        }
    }
    h.pop().expect("table has k+1 entries")
}

/// Closed form of `e_k` on the alphabet `{phi*q, q, ..., q, psi*q}` with
/// `n-2` middle copies of `q`:
/// `(binom(n-2,k) + (phi+psi) binom(n-2,k-1) + phi*psi*binom(n-2,k-2)) q^k`.
pub fn specialized_elem(n: i64, k: i64, phi: &Rat, psi: &Rat, q: &Rat) -> Rat {
    assert!(n >= 2, "the alphabet needs at least its two endpoints");
    if k < 0 {
        return Rat::zero();
    }
    let b = |kk: i64| Rat::from_integer(crate::ring::binom(n - 2, kk));
    let bracket = b(k) + (phi + psi) * b(k - 1) + phi * psi * b(k - 2);
    bracket * rat_pow(q, k)
}

/// `(q^a - q^b) / (q - 1)` as an explicit alternating-free geometric sum:
/// `q^b (1 + q + ... + q^{a-b-1})` for `a > b`, negated mirror for `a < b`,
/// zero for `a = b`. Total except at `q = 0` with a negative exponent.
pub fn q_ratio(q: &Rat, a: i64, b: i64) -> Rat {
    if a == b {
        return Rat::zero();
    }
    let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
    let mut geo = Rat::zero();
    for t in 0..hi - lo {
        geo += rat_pow(q, t);
    }
    let val = rat_pow(q, lo) * geo;
    if sign < 0 {
        -val
    } else {
        val
    }
}

fn vandermonde(w: &[Rat]) -> Rat {
    let mut d = Rat::one();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            d *= &w[i] - &w[j];
        }
    }
    d
}

fn ensure_kernel_generic(v: &[Rat], u: &[Rat], q: &Rat) -> Result<(), CheckError> {
    if v.is_empty() || v.len() != u.len() {
        return Err(CheckError::DegenerateParams(format!(
            "alphabets must have equal positive lengths, got {} and {}",
            v.len(),
            u.len()
        )));
    }
    for (i, vi) in v.iter().enumerate() {
        for (j, uj) in u.iter().enumerate() {
            if vi == uj || &(q * vi) == uj {
                return Err(CheckError::DegenerateParams(format!(
                    "kernel factor vanishes at v_{} vs u_{}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if vandermonde(v).is_zero() || vandermonde(u).is_zero() {
        return Err(CheckError::DegenerateParams("repeated alphabet entry".into()));
    }
    Ok(())
}

/// The double-kernel determinant expression, evaluated literally.
pub fn fq_direct(v: &[Rat], u: &[Rat], q: &Rat) -> Result<Rat, CheckError> {
    ensure_kernel_generic(v, u, q)?;
    let n = v.len();
    let kernel = crate::ring::SqMatrix::from_fn(n, |i, j| {
        ((&v[i - 1] - &u[j - 1]) * (q * &v[i - 1] - &u[j - 1])).recip()
    });
    let mut prod = Rat::one();
    for vi in v {
        for uj in u {
            prod *= (vi - uj) * (q * vi - uj);
        }
    }
    let mut f = kernel.det() * prod / (vandermonde(v) * vandermonde(u));
    if n * (n - 1) / 2 % 2 == 1 {
        f = -f;
    }
    Ok(f)
}

/// The same quantity as the determinant of the product of an
/// `n x (2n-1)` matrix of `h`'s in `V` and a `(2n-1) x n` matrix of
/// geometric factors times `e`'s in `U`.
pub fn fq_factored(v: &[Rat], u: &[Rat], q: &Rat) -> Result<Rat, CheckError> {
    ensure_kernel_generic(v, u, q)?;
    if q.is_zero() || q.is_one() {
        return Err(CheckError::DegenerateParams(format!(
            "the factored form divides by q - 1 and inverts q; q = {q} is excluded"
        )));
    }
    let n = v.len() as i64;
    let h: Vec<Vec<Rat>> = (1..=n)
        .map(|i| (1..=2 * n - 1).map(|j| hom_sym(v, j - i)).collect())
        .collect();
    let e: Vec<Vec<Rat>> = (1..=2 * n - 1)
        .map(|j| {
            (1..=n)
                .map(|k| {
                    let deg = n - j + k - 1;
                    let sign = if deg.rem_euclid(2) == 1 { -1 } else { 1 };
                    rat(sign, 1) * q_ratio(q, j - k + 1, k - 1) * elem_sym(u, deg)
                })
                .collect()
        })
        .collect();
    Ok(mat_mul_square(&h, &e).det())
}

/// Partition function through the factorization, with `V = {b_i^2}`,
/// `U = {a_i^2}` and parameter `q^2`:
/// `(-1)^{n^2} F_{q^2}(V,U) / ((q^2-1)^{n^2-n} prod_i (a_i b_i)^n b_i^{-2})`.
pub fn zn_via_lascoux(params: &SpectralParams) -> Result<Rat, CheckError> {
    params.ensure_generic()?;
    let n = params.n();
    let v: Vec<Rat> = (1..=n).map(|i| params.v(i)).collect();
    let u: Vec<Rat> = (1..=n).map(|i| params.u(i)).collect();
    let qq = params.q() * params.q();
    let f = fq_factored(&v, &u, &qq)?;
    let mut den = rat_pow(&(&qq - rat(1, 1)), (n * n - n) as i64);
    for i in 1..=n {
        den *= rat_pow(&(params.a(i) * params.b(i)), n as i64) / params.v(i);
    }
    let mut z = f / den;
    if (n * n) % 2 == 1 {
        z = -z;
    }
    Ok(z)
}
