//! Enumeration limits.
//!
//! Every exhaustive routine checks its operation count against a [`Budget`]
//! before starting, so oversized requests fail fast with a useful message
//! instead of running for hours.

use crate::error::{Error, Result};

/// Default limit on the number of codewords enumerated (4^k).
pub const DEFAULT_CODEWORDS: u64 = 1 << 26;
/// Default limit on word-versus-codeword tests in exact error enumeration.
pub const DEFAULT_EXACT_OPS: u64 = 1 << 32;
/// Default limit on the number of full-weight words visited by the coset method.
pub const DEFAULT_COSET_WORDS: u64 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub codewords: u64,
    pub exact_ops: u64,
    pub coset_words: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            codewords: DEFAULT_CODEWORDS,
            exact_ops: DEFAULT_EXACT_OPS,
            coset_words: DEFAULT_COSET_WORDS,
        }
    }
}

impl Budget {
    /// One limit applied to every kind of enumeration.
    pub fn uniform(limit: u64) -> Self {
        Self {
            codewords: limit,
            exact_ops: limit,
            coset_words: limit,
        }
    }

    pub(crate) fn check_codewords(&self, what: &'static str, count: Option<u128>) -> Result<()> {
        check(what, count, self.codewords, "")
    }

    pub(crate) fn check_exact(&self, what: &'static str, ops: Option<u128>) -> Result<()> {
        check(
            what,
            ops,
            self.exact_ops,
            "; use monte-carlo simulation instead",
        )
    }

    pub(crate) fn check_coset(&self, what: &'static str, words: Option<u128>) -> Result<()> {
        check(
            what,
            words,
            self.coset_words,
            "; use monte-carlo simulation instead",
        )
    }
}

fn check(what: &'static str, required: Option<u128>, limit: u64, hint: &'static str) -> Result<()> {
    match required {
        Some(r) if r <= u128::from(limit) => Ok(()),
        other => Err(Error::BudgetExceeded {
            what,
            required: other.unwrap_or(u128::MAX),
            limit,
            hint,
        }),
    }
}

/// `base^exp` as `u128`, or `None` on overflow.
pub(crate) fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    base.checked_pow(u32::try_from(exp).ok()?)
}
