//! asmlab: exact enumeration of alternating sign matrices and the
//! determinant identities of their square-ice partition function.
//!
//! Everything is computed in exact arithmetic — big rationals, Laurent
//! polynomials in `p = q^(1/2)`, and quadratic cyclotomic extensions — so
//! every identity check in this crate is a literal equality of normal forms,
//! not a floating-point comparison.
//!
//! * [`ring`] — rationals, binomials, Laurent polynomials, roots of unity,
//!   and fraction-free determinants.
//! * [`asm`] — alternating sign matrices: validation, enumeration, refined
//!   statistics, generating functions.
//! * [`ice`] — the square-ice bijection, vertex weights, and the partition
//!   function in brute-force and determinant forms.
//! * [`symfunc`] — Schur-function specializations and the factored route to
//!   the partition function.
//! * [`identities`] — the named determinant families and every identity
//!   check relating them to the refined enumeration.
//! * [`decomp`] — the two-factor decomposition of the refined counts and
//!   the order-by-order factorization check.
//! * [`report`] — the pass/fail/witness type every identity check returns.
//! * [`sample`] — deterministic parameter draws for the spot-check suites.
//!
//! ```
//! use asmlab::asm::{count_closed_form, gen_fun};
//! use asmlab::ring::rat;
//!
//! let g = gen_fun(4);
//! // Setting all three marks to 1 recovers the plain count.
//! assert_eq!(
//!     g.eval(&rat(1, 1), &rat(1, 1), &rat(1, 1), &rat(1, 1)),
//!     rat(42, 1),
//! );
//! assert_eq!(count_closed_form(4).to_string(), "42");
//! ```

pub mod asm;
pub mod decomp;
pub mod ice;
pub mod identities;
pub mod report;
pub mod ring;
pub mod sample;
pub mod symfunc;
