//! Square matrices over an exact [`Ring`] with a fraction-free determinant.
//!
//! Indices are 1-based throughout: the library's matrix families are defined
//! by explicit formulas in the row index `i` and column index `j` starting
//! at 1, and keeping the same convention here removes a whole class of
//! off-by-one mistakes.
//!
//! The determinant uses the Bareiss elimination scheme, whose intermediate
//! entries are themselves minors of the input. Every interior division is
//! exact in any integral domain, so polynomial matrices never leave the
//! polynomial ring and never grow spurious denominators.

use super::Ring;

/// Dense square matrix over `R` with 1-based `(row, column)` access.
#[derive(Clone, PartialEq, Debug)]
pub struct SqMatrix<R: Ring> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> SqMatrix<R> {
    /// Build an `n x n` matrix from a formula over 1-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                data.push(f(i, j));
            }
        }
        SqMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index out of range");
        &self.data[(i - 1) * self.n + (j - 1)]
    }

    fn at(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.n + j]
    }

    fn set0(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.n + j] = v;
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> SqMatrix<S> {
        SqMatrix { n: self.n, data: self.data.iter().map(|x| f(x)).collect() }
    }

    /// Entries rendered with `Display`, row by row.
    pub fn rows_display(&self) -> Vec<Vec<String>>
    where
        R: std::fmt::Display,
    {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.entry(i, j).to_string()).collect())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det(&self) -> R {
        let n = self.n;
        if n == 0 {
            return R::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m.at(r, k).is_zero()) else {
                    return R::zero();
                };
                for j in 0..n {
                    let tmp = m.at(k, j).clone();
                    let low = m.at(r, j).clone();
                    m.set0(k, j, low);
                    m.set0(r, j, tmp);
                }
                negate = !negate;
            }
            let pivot = m.at(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot.mul(m.at(i, j)).sub(&m.at(i, k).mul(m.at(k, j)));
                    let q = num
                        .exact_div(&prev)
                        .expect("interior Bareiss entries divide by the previous pivot");
                    m.set0(i, j, q);
                }
                m.set0(i, k, R::zero());
            }
            prev = pivot;
        }
        let d = m.at(n - 1, n - 1).clone();
        if negate {
            d.neg()
        } else {
            d
        }
    }
}

/// Product of an `n x m` and an `m x n` rectangular array as a square matrix.
/// Panics if the shapes do not line up.
pub fn mat_mul_square<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> SqMatrix<R> {
    let n = a.len();
    assert!(n > 0, "empty product");
    let m = a[0].len();
    assert!(a.iter().all(|row| row.len() == m), "left factor is ragged");
    assert_eq!(b.len(), m, "inner dimensions differ");
    assert!(b.iter().all(|row| row.len() == n), "right factor is ragged");
    SqMatrix::from_fn(n, |i, j| {
        let mut acc = R::zero();
        for k in 0..m {
            acc = acc.add(&a[i - 1][k].mul(&b[k][j - 1]));
        }
        acc
    })
}
