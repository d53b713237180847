//! Linear codes over GF(4).
//!
//! A [`LinearCode`] is given by a full-rank `k x n` generator matrix. Message
//! `m` (a length-`k` word) encodes to `m G`; codewords are enumerated in
//! message-index order (see [`Word::from_index`]), so index 0 is always the
//! zero codeword. A [`Codebook`] is an explicit, ordered list of words and is
//! what the decoders and exact analysis consume, which lets them work on
//! arbitrary (also nonlinear) codes.

mod catalog;
mod file;
mod gv;
pub(crate) mod matrix;
mod qc;

pub use catalog::{catalog, lookup, CatalogEntry, Source};
pub use file::{parse_code_file, write_code_file};
pub use gv::{gv_random_code, gv_rate_bound, h4, GvOptions};
pub use qc::{circulant_generator, parse_blocks, quasi_cyclic_from_first_row};

use crate::budget::{checked_pow, Budget};
use crate::error::{Error, Result};
use crate::gf4::{Word, F4};
use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

/// Largest supported dimension; `4^k` must fit in a `u128`.
pub const MAX_DIMENSION: usize = 63;

/// Number of codewords of each Hamming weight, `A_0 ..= A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    /// From a dense table. `A_0` must be 1.
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.first() != Some(&1) {
            return Err(Error::InvalidParameter(
                "weight distribution must have A_0 = 1".into(),
            ));
        }
        Ok(Self { counts })
    }

    /// From the nonzero weights of a length-`n` code; `A_0 = 1` is implied.
    pub fn from_sparse(n: usize, nonzero: &[(usize, u64)]) -> Result<Self> {
        let mut counts = vec![0u64; n + 1];
        counts[0] = 1;
        for &(s, a) in nonzero {
            if s == 0 || s > n {
                return Err(Error::InvalidParameter(format!(
                    "weight {s} outside 1..={n}"
                )));
            }
            counts[s] += a;
        }
        Ok(Self { counts })
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, s: usize) -> u64 {
        self.counts.get(s).copied().unwrap_or(0)
    }

    /// Number of codewords, `sum A_s`.
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| u128::from(c)).sum()
    }

    /// Smallest positive weight present; `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&s| self.counts[s] > 0)
    }

    /// `(s, A_s)` for every nonzero `A_s` with `s >= 1`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .copied()
            .enumerate()
            .skip(1)
            .filter(|&(_, a)| a > 0)
    }
}

/// An ordered list of distinct words of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    n: usize,
    words: Vec<Word>,
}

impl Codebook {
    pub fn new(words: Vec<Word>) -> Result<Self> {
        let n = words.first().ok_or(Error::TooFewCodewords(0))?.len();
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: w.len(),
                });
            }
            if !seen.insert(w) {
                return Err(Error::InvalidParameter(format!("duplicate codeword {w}")));
            }
        }
        Ok(Self { n, words })
    }

    /// Parses whitespace-separated words.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(
            s.split_whitespace()
                .map(str::parse)
                .collect::<Result<_>>()?,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Always false; a codebook holds at least one word.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn get(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub(crate) fn require_pair(&self) -> Result<()> {
        if self.words.len() < 2 {
            Err(Error::TooFewCodewords(self.words.len()))
        } else {
            Ok(())
        }
    }
}

/// A linear `[n, k]` code over GF(4).
pub struct LinearCode {
    generator: Vec<Word>,
    n: usize,
    // Columns where the generator restricted to them is invertible.
    pivots: Vec<usize>,
    pivot_inverse: Vec<Vec<F4>>,
    weights: OnceLock<WeightDistribution>,
}

impl LinearCode {
    /// Builds a code from generator rows; they must be independent.
    pub fn new(rows: Vec<Word>) -> Result<Self> {
        let n = rows
            .first()
            .ok_or(Error::InvalidParameter("generator has no rows".into()))?
            .len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
        }
        if rows.len() > MAX_DIMENSION {
            return Err(Error::InvalidParameter(format!(
                "dimension {} exceeds the supported maximum {MAX_DIMENSION}",
                rows.len()
            )));
        }
        let (_, pivots) = matrix::rref(&rows);
        if pivots.len() < rows.len() {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                rows: rows.len(),
            });
        }
        let sub: Vec<Vec<F4>> = rows
            .iter()
            .map(|r| pivots.iter().map(|&p| r.get(p)).collect())
            .collect();
        let pivot_inverse = matrix::invert(&sub).expect("pivot submatrix of a full-rank generator");
        Ok(Self {
            generator: rows,
            n,
            pivots,
            pivot_inverse,
            weights: OnceLock::new(),
        })
    }

    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.parse()).collect::<Result<_>>()?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Word] {
        &self.generator
    }

    /// Number of codewords, `4^k`.
    pub fn size(&self) -> u128 {
        1u128 << (2 * self.k())
    }

    pub fn encode(&self, message: &Word) -> Result<Word> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                found: message.len(),
            });
        }
        Ok(message
            .iter()
            .zip(&self.generator)
            .filter(|(m, _)| !m.is_zero())
            .fold(Word::zeros(self.n), |acc, (m, row)| &acc + &row.scale(m)))
    }

    /// Encodes the message with base-4 index `index`.
    pub fn encode_index(&self, index: u128) -> Word {
        self.encode(&Word::from_index(index, self.k()))
            .expect("message length is k")
    }

    /// Recovers the message of a codeword; errors if `c` is not in the code.
    pub fn message_of(&self, c: &Word) -> Result<Word> {
        if c.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: c.len(),
            });
        }
        let at_pivots: Vec<F4> = self.pivots.iter().map(|&p| c.get(p)).collect();
        let m = Word::from_symbols(&matrix::vec_mul(&at_pivots, &self.pivot_inverse))?;
        if &self.encode(&m)? != c {
            return Err(Error::InvalidParameter(format!("{c} is not a codeword")));
        }
        Ok(m)
    }

    pub fn contains(&self, c: &Word) -> bool {
        self.message_of(c).is_ok()
    }

    /// Iterates all `4^k` codewords in message-index order.
    pub fn codewords(&self, budget: &Budget) -> Result<CodewordIter<'_>> {
        budget.check_codewords("codeword enumeration", Some(self.size()))?;
        Ok(CodewordIter::new(self))
    }

    pub fn codebook(&self, budget: &Budget) -> Result<Codebook> {
        Ok(Codebook {
            n: self.n,
            words: self.codewords(budget)?.collect(),
        })
    }

    /// Weight distribution by enumeration; computed once and cached.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<&WeightDistribution> {
        if let Some(w) = self.weights.get() {
            return Ok(w);
        }
        let mut counts = vec![0u64; self.n + 1];
        for c in self.codewords(budget)? {
            counts[c.weight()] += 1;
        }
        let _ = self.weights.set(WeightDistribution { counts });
        Ok(self.weights.get().expect("just set"))
    }

    pub fn minimum_distance(&self, budget: &Budget) -> Result<usize> {
        self.weight_distribution(budget)?
            .min_distance()
            .ok_or(Error::InvalidParameter(
                "code has no nonzero codeword".into(),
            ))
    }

    /// Codewords vanishing at `position`, with that coordinate deleted.
    ///
    /// Rows are reduced so exactly one has a nonzero entry at `position`;
    /// dropping it leaves an `[n-1, k-1]` generator.
    pub fn shorten(&self, position: usize) -> Result<LinearCode> {
        if position >= self.n {
            return Err(Error::InvalidParameter(format!(
                "position {position} out of range"
            )));
        }
        if self.k() < 2 || self.n < 2 {
            return Err(Error::InvalidParameter(format!(
                "shortening a [{}, {}] code leaves dimension 0",
                self.n,
                self.k()
            )));
        }
        let Some(p) = self
            .generator
            .iter()
            .position(|r| !r.get(position).is_zero())
        else {
            return Err(Error::InvalidParameter(format!(
                "every codeword is zero at position {position}; shortening would not reduce the dimension"
            )));
        };
        let pivot = &self.generator[p];
        let inv = pivot.get(position).inv().expect("nonzero");
        let rows: Vec<Word> = self
            .generator
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != p)
            .map(|(_, r)| {
                let f = r.get(position) * inv;
                (r + &pivot.scale(f)).remove(position)
            })
            .collect();
        let (rows, _) = matrix::rref(&rows);
        let code = LinearCode::new(rows)?;
        debug_assert_eq!(code.k(), self.k() - 1);
        Ok(code)
    }
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        Self {
            generator: self.generator.clone(),
            n: self.n,
            pivots: self.pivots.clone(),
            pivot_inverse: self.pivot_inverse.clone(),
            weights: self.weights.clone(),
        }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearCode")
            .field("n", &self.n)
            .field("k", &self.k())
            .field("generator", &self.generator)
            .finish()
    }
}

/// Codewords in message-index order, one word addition per step on average.
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    digits: Vec<u8>,
    current: Word,
    remaining: u128,
}

impl<'a> CodewordIter<'a> {
    fn new(code: &'a LinearCode) -> Self {
        Self {
            code,
            digits: vec![0; code.k()],
            current: Word::zeros(code.n),
            remaining: code.size(),
        }
    }
}

impl Iterator for CodewordIter<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current.clone();
        if self.remaining > 0 {
            for (i, d) in self.digits.iter_mut().enumerate() {
                let old = F4::from_bits(*d);
                let new = F4::from_bits((*d + 1) & 3);
                *d = new.bits();
                // Replace old*g_i by new*g_i.
                self.current = &self.current + &self.code.generator[i].scale(old + new);
                if *d != 0 {
                    break;
                }
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

/// `4^k` as `u128`, if it fits.
pub fn code_size(k: usize) -> Option<u128> {
    checked_pow(4, k)
}

/// Key bits per channel letter, `log2(M) / n = 2k / n`.
pub fn efficiency(n: usize, k: usize) -> f64 {
    2.0 * k as f64 / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf4::all_words;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn repetition(n: usize) -> LinearCode {
        LinearCode::from_rows(&[&"1".repeat(n)]).unwrap()
    }

    #[test]
    fn encode_examples() {
        let rep = repetition(10);
        assert_eq!(rep.encode(&w("0")).unwrap(), Word::zeros(10));
        assert_eq!(rep.encode(&w("a")).unwrap(), w(&"a".repeat(10)));
        assert!(matches!(
            rep.encode(&w("01")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn rejects_dependent_rows() {
        let e = LinearCode::from_rows(&["1a0", "ab0"]).unwrap_err();
        assert_eq!(e, Error::RankDeficient { rank: 1, rows: 2 });
        assert!(LinearCode::from_rows(&["1a0", "ab"]).is_err());
    }

    #[test]
    fn codewords_enumerate_in_index_order() {
        let code = LinearCode::from_rows(&["1a0b", "01ab", "0011"]).unwrap();
        let all: Vec<Word> = code.codewords(&Budget::default()).unwrap().collect();
        assert_eq!(all.len(), 64);
        for (i, c) in all.iter().enumerate() {
            assert_eq!(c, &code.encode_index(i as u128));
            assert_eq!(code.message_of(c).unwrap(), Word::from_index(i as u128, 3));
        }
        let distinct: HashSet<&Word> = all.iter().collect();
        assert_eq!(distinct.len(), 64);
    }

    #[test]
    fn whole_field_code() {
        let code = LinearCode::from_rows(&["1"]).unwrap();
        let all: Vec<String> = code
            .codewords(&Budget::default())
            .unwrap()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(all, ["0", "1", "a", "b"]);
    }

    #[test]
    fn repetition_code_parameters() {
        let rep = repetition(10);
        assert_eq!(rep.codewords(&Budget::default()).unwrap().count(), 4);
        assert_eq!(rep.minimum_distance(&Budget::default()).unwrap(), 10);
        let wd = rep.weight_distribution(&Budget::default()).unwrap();
        assert_eq!(wd.get(10), 3);
        assert_eq!(wd.total(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let code = LinearCode::from_rows(&["100", "010", "001"]).unwrap();
        let err = code.codewords(&Budget::uniform(63)).err().unwrap();
        assert!(matches!(
            err,
            Error::BudgetExceeded {
                required: 64,
                limit: 63,
                ..
            }
        ));
        assert!(err.to_string().contains("63"));
    }

    #[test]
    fn message_of_rejects_non_codewords() {
        let rep = repetition(3);
        assert!(rep.message_of(&w("110")).is_err());
        assert!(!rep.contains(&w("110")));
        assert!(rep.contains(&w("bbb")));
    }

    #[test]
    fn distinct_messages_give_distinct_codewords() {
        for k in 1..=5 {
            let rows: Vec<Word> = (0..k)
                .map(|i| {
                    let mut s = vec![F4::ZERO; 7];
                    s[i] = F4::ONE;
                    s[5] = F4::from_bits(i as u8 % 3 + 1);
                    s[6] = F4::A;
                    Word::from_symbols(&s).unwrap()
                })
                .collect();
            let code = LinearCode::new(rows).unwrap();
            let set: HashSet<Word> = code.codewords(&Budget::default()).unwrap().collect();
            assert_eq!(set.len() as u128, code.size());
        }
    }

    #[test]
    fn shortening_keeps_zero_coordinate_words() {
        let code = LinearCode::from_rows(&["1a01", "01b1", "1101"]).unwrap();
        let short = code.shorten(0).unwrap();
        assert_eq!((short.n(), short.k()), (3, 2));
        let expected: HashSet<Word> = code
            .codewords(&Budget::default())
            .unwrap()
            .filter(|c| c.get(0).is_zero())
            .map(|c| c.remove(0))
            .collect();
        let got: HashSet<Word> = short.codewords(&Budget::default()).unwrap().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn shortening_degenerate_inputs() {
        let pair = LinearCode::from_rows(&["11"]).unwrap();
        assert!(pair.shorten(0).is_err());
        let zero_col = LinearCode::from_rows(&["011", "01a"]).unwrap();
        assert!(zero_col.shorten(0).is_err());
        assert!(zero_col.shorten(5).is_err());
    }

    #[test]
    fn distance_distribution_equals_weight_distribution() {
        let code = LinearCode::from_rows(&["11a0b", "0a1b1"]).unwrap();
        let words: Vec<Word> = code.codewords(&Budget::default()).unwrap().collect();
        let m = words.len() as u64;
        let mut pairs = vec![0u64; code.n() + 1];
        for x in &words {
            for y in &words {
                pairs[x.distance(y).unwrap()] += 1;
            }
        }
        let wd = code.weight_distribution(&Budget::default()).unwrap();
        for (s, &p) in pairs.iter().enumerate() {
            assert_eq!(p, m * wd.get(s));
        }
    }

    #[test]
    fn codebook_validation() {
        assert!(Codebook::parse("00 11 00").is_err());
        assert!(Codebook::parse("00 111").is_err());
        assert!(Codebook::new(vec![]).is_err());
        let cb = Codebook::parse("00 11 aa bb").unwrap();
        assert_eq!((cb.n(), cb.len()), (2, 4));
    }

    #[test]
    fn linear_span_matches_brute_force() {
        let code = LinearCode::from_rows(&["1a1", "0b1"]).unwrap();
        let span: HashSet<Word> = code.codewords(&Budget::default()).unwrap().collect();
        for x in all_words(3) {
            assert_eq!(span.contains(&x), code.contains(&x));
        }
    }

    #[test]
    fn efficiency_values() {
        assert!((efficiency(28, 4) - 2.0 / 7.0).abs() < 1e-15);
        assert!((efficiency(100, 10) - 0.2).abs() < 1e-15);
        assert!((efficiency(39, 4) - 8.0 / 39.0).abs() < 1e-15);
    }
}
