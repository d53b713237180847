//! Consistency sets and the two decoders.
//!
//! A received word `y` is consistent with codeword `c` when it differs from
//! `c` in every coordinate, i.e. `y` lies in `L(c)`, the `3^n` words the
//! channel can produce from `c`. The sequential decoder picks the first
//! consistent codeword in list order; the maximum-likelihood decoder picks
//! one of the consistent codewords uniformly at random.

use crate::budget::{checked_pow, Budget};
use crate::codes::Codebook;
use crate::error::{Error, Result};
use crate::gf4::{all_words, full_weight_words, Word};
use rand::Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decoded {
    /// Index into the codebook.
    Codeword(usize),
    /// No codeword is consistent with the received word.
    Inconsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecodeOutcome {
    pub result: Decoded,
    /// Codewords the decoder chose among: all consistent ones for ML, 1 for
    /// a sequential hit, 0 when inconsistent.
    pub tie_count: usize,
}

impl DecodeOutcome {
    pub fn index(&self) -> Option<usize> {
        match self.result {
            Decoded::Codeword(i) => Some(i),
            Decoded::Inconsistent => None,
        }
    }
}

impl fmt::Display for DecodeOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.result {
            Decoded::Codeword(i) => write!(f, "decoded({i}) ties={}", self.tie_count),
            Decoded::Inconsistent => write!(f, "inconsistent"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecoderKind {
    Ml,
    Sequential,
}

impl FromStr for DecoderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ml" => Ok(DecoderKind::Ml),
            "seq" | "sequential" => Ok(DecoderKind::Sequential),
            _ => Err(Error::InvalidParameter(format!(
                "unknown decoder {s:?}; use ml or seq"
            ))),
        }
    }
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecoderKind::Ml => "ml",
            DecoderKind::Sequential => "seq",
        })
    }
}

/// `y` lies in `L(c)`.
pub fn is_consistent(y: &Word, c: &Word) -> Result<bool> {
    y.differs_everywhere(c)
}

#[inline]
pub(crate) fn consistent_fast(y: &Word, c: &Word) -> bool {
    match (y.packed(), c.packed()) {
        (Some(a), Some(b)) => a.differs_everywhere(b),
        _ => y.differs_everywhere(c).unwrap_or(false),
    }
}

/// `|L(c)| = 3^n`, if it fits in 128 bits.
pub fn consistency_set_size(n: usize) -> Option<u128> {
    checked_pow(3, n)
}

/// Enumerates `L(c)` as `c + a` over full-weight words `a`.
pub fn consistency_set(c: &Word) -> impl Iterator<Item = Word> + '_ {
    full_weight_words(c.len()).map(move |a| c + &a)
}

/// `|L(c_i) ∩ L(c_j)| = 3^(n-s) 2^s` with `s = d(c_i, c_j)`.
///
/// Per coordinate: where the two agree, 3 letters avoid both; where they
/// differ, 2 do.
pub fn intersection_size(ci: &Word, cj: &Word) -> Result<u128> {
    let s = ci.distance(cj)?;
    if s == 0 {
        return Err(Error::IdenticalWords);
    }
    let n = ci.len();
    let three = checked_pow(3, n - s).ok_or(Error::Overflow("3^(n-s)"))?;
    let two = checked_pow(2, s).ok_or(Error::Overflow("2^s"))?;
    three.checked_mul(two).ok_or(Error::Overflow("3^(n-s) 2^s"))
}

fn check_received(y: &Word, code: &Codebook) -> Result<()> {
    if y.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            found: y.len(),
        });
    }
    Ok(())
}

/// Indices of every codeword consistent with `y`, in list order.
pub fn consistent_indices(y: &Word, code: &Codebook) -> Result<Vec<usize>> {
    check_received(y, code)?;
    Ok(code
        .words()
        .iter()
        .enumerate()
        .filter(|(_, c)| consistent_fast(y, c))
        .map(|(i, _)| i)
        .collect())
}

/// Decoding regions `D_i = L(c_i) \ (L(c_1) ∪ ... ∪ L(c_{i-1}))`.
pub fn sequential_decode(y: &Word, code: &Codebook) -> Result<DecodeOutcome> {
    check_received(y, code)?;
    Ok(
        match code.words().iter().position(|c| consistent_fast(y, c)) {
            Some(i) => DecodeOutcome {
                result: Decoded::Codeword(i),
                tie_count: 1,
            },
            None => DecodeOutcome {
                result: Decoded::Inconsistent,
                tie_count: 0,
            },
        },
    )
}

/// Uniform choice among the consistent codewords; a consistent word always
/// consumes exactly one draw from `rng`, an inconsistent one none.
pub fn ml_decode<R: Rng + ?Sized>(y: &Word, code: &Codebook, rng: &mut R) -> Result<DecodeOutcome> {
    let ties = consistent_indices(y, code)?;
    if ties.is_empty() {
        return Ok(DecodeOutcome {
            result: Decoded::Inconsistent,
            tie_count: 0,
        });
    }
    let pick = ties[rng.random_range(0..ties.len())];
    Ok(DecodeOutcome {
        result: Decoded::Codeword(pick),
        tie_count: ties.len(),
    })
}

pub fn decode<R: Rng + ?Sized>(
    kind: DecoderKind,
    y: &Word,
    code: &Codebook,
    rng: &mut R,
) -> Result<DecodeOutcome> {
    match kind {
        DecoderKind::Ml => ml_decode(y, code, rng),
        DecoderKind::Sequential => sequential_decode(y, code),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegionViolation {
    /// `y` was assigned to codeword `index` but is not in its consistency set.
    OutsideConsistencySet { y: Word, index: usize },
    /// `y` is receivable but was left undecoded.
    Uncovered { y: Word },
    /// `y` was assigned to an index past the end of the codebook.
    BadIndex { y: Word, index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionCheck {
    /// `|D_i|` for each codeword.
    pub sizes: Vec<u64>,
    pub violation: Option<RegionViolation>,
}

impl RegionCheck {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that a deterministic decoder `assign` induces valid decoding
/// regions over all of `F4^n`: each region inside its consistency set, and
/// every receivable word decoded. Disjointness holds because `assign` is a
/// function.
pub fn validate_decoding_regions<F>(
    code: &Codebook,
    budget: &Budget,
    mut assign: F,
) -> Result<RegionCheck>
where
    F: FnMut(&Word) -> Option<usize>,
{
    let words = checked_pow(4, code.n());
    let ops = words.and_then(|w| w.checked_mul(code.len() as u128));
    budget.check_exact("decoding-region validation", ops)?;
    let mut sizes = vec![0u64; code.len()];
    for y in all_words(code.n()) {
        let receivable = code.words().iter().any(|c| consistent_fast(&y, c));
        match assign(&y) {
            Some(index) if index >= code.len() => {
                return Ok(RegionCheck {
                    sizes,
                    violation: Some(RegionViolation::BadIndex { y, index }),
                })
            }
            Some(index) => {
                if !consistent_fast(&y, code.get(index)) {
                    return Ok(RegionCheck {
                        sizes,
                        violation: Some(RegionViolation::OutsideConsistencySet { y, index }),
                    });
                }
                sizes[index] += 1;
            }
            None if receivable => {
                return Ok(RegionCheck {
                    sizes,
                    violation: Some(RegionViolation::Uncovered { y }),
                })
            }
            None => {}
        }
    }
    Ok(RegionCheck {
        sizes,
        violation: None,
    })
}
