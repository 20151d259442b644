//! Outcome type shared by all identity checks.
//!
//! Every verification routine in this crate answers with a [`CheckReport`]:
//! which check ran, at what order, whether the two sides agreed, and — when
//! they did not — a witness string pinpointing the first discrepancy. The
//! command-line tool serializes these verbatim, so the fields stay stable.

use serde::Serialize;

/// Result of one identity check at one matrix order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckReport {
    /// Stable identifier of the check, e.g. `"theorem1"`.
    pub check: String,
    /// Matrix order the check ran at.
    pub n: u32,
    /// Whether both sides agreed exactly.
    pub pass: bool,
    /// First observed discrepancy, present only on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn pass(check: &str, n: u32) -> Self {
        CheckReport { check: check.into(), n, pass: true, witness: None }
    }

    pub fn fail(check: &str, n: u32, witness: String) -> Self {
        CheckReport { check: check.into(), n, pass: false, witness: Some(witness) }
    }

    /// Pass/fail from an optional witness.
    pub fn from_witness(check: &str, n: u32, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(check, n),
            Some(w) => Self::fail(check, n, w),
        }
    }
}

/// Parameter validation shared by the weighted-ice and determinant modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    /// The requested evaluation point sits on one of the excluded loci
    /// (a vanishing denominator, a collision between spectral parameters,
    /// or a root-of-unity degeneration).
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    /// The matrix family is not defined at the requested order (its entry
    /// formula collapses there).
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
}
