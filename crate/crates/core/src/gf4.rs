//! The four-element field and words over it.
//!
//! Elements are stored as two bits `hi:lo` meaning `lo + hi*a`, so `0 = 00`,
//! `1 = 01`, `a = 10`, `b = a^2 = a + 1 = 11`. Addition is exclusive-or;
//! multiplication goes through a 16-entry table.
//!
//! ```text
//!  + | 0 1 a b        x | 0 1 a b
//! ---+---------      ---+---------
//!  0 | 0 1 a b        0 | 0 0 0 0
//!  1 | 1 0 b a        1 | 0 1 a b
//!  a | a b 0 1        a | 0 a b 1
//!  b | b a 1 0        b | 0 b 1 a
//! ```
//!
//! The channel letters `A B C D` are identified with `0 1 a b` in that order.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

/// Element of GF(4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

const INV: [u8; 4] = [0, 1, 3, 2];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const A: F4 = F4(2);
    pub const B: F4 = F4(3);

    /// All four elements in alphabet order `0, 1, a, b`.
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::A, F4::B];
    pub const NONZERO: [F4; 3] = [F4::ONE, F4::A, F4::B];

    /// Builds an element from its 2-bit code; only the low two bits are used.
    pub const fn from_bits(bits: u8) -> F4 {
        F4(bits & 3)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self) -> Option<F4> {
        (!self.is_zero()).then(|| F4(INV[self.0 as usize]))
    }

    /// Parses a field symbol: `0 1 a b`, case-insensitive, or digits `2 3` for `a b`.
    pub fn from_symbol(c: char) -> Result<F4> {
        match c {
            '0' => Ok(F4::ZERO),
            '1' => Ok(F4::ONE),
            'a' | 'A' | '2' => Ok(F4::A),
            'b' | 'B' | '3' => Ok(F4::B),
            _ => Err(Error::InvalidSymbol(c)),
        }
    }

    pub fn symbol(self) -> char {
        ['0', '1', 'a', 'b'][self.0 as usize]
    }

    /// Parses a channel letter `A B C D` (case-insensitive).
    pub fn from_letter(c: char) -> Result<F4> {
        match c.to_ascii_uppercase() {
            'A' => Ok(F4::ZERO),
            'B' => Ok(F4::ONE),
            'C' => Ok(F4::A),
            'D' => Ok(F4::B),
            _ => Err(Error::InvalidLetter(c)),
        }
    }

    pub fn letter(self) -> char {
        ['A', 'B', 'C', 'D'][self.0 as usize]
    }
}

impl Add for F4 {
    type Output = F4;
    // Characteristic 2: addition is XOR of the bit pairs.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

// Characteristic 2: subtraction is addition.
impl Sub for F4 {
    type Output = F4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        F4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

pub fn f4_add(x: F4, y: F4) -> F4 {
    x + y
}

pub fn f4_mul(x: F4, y: F4) -> F4 {
    x * y
}

/// Words of length at most 64 stored as two bit planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct PackedWord {
    pub(crate) lo: u64,
    pub(crate) hi: u64,
    pub(crate) len: u8,
}

pub(crate) const PACKED_MAX: usize = 64;

impl PackedWord {
    #[inline]
    pub(crate) fn full_mask(len: u8) -> u64 {
        if len as usize == PACKED_MAX {
            u64::MAX
        } else {
            (1u64 << len) - 1
        }
    }

    #[inline]
    pub(crate) fn support(&self) -> u64 {
        self.lo | self.hi
    }

    #[inline]
    fn get(&self, i: usize) -> F4 {
        F4(((self.lo >> i) & 1) as u8 | (((self.hi >> i) & 1) as u8) << 1)
    }

    #[inline]
    fn set(&mut self, i: usize, x: F4) {
        let m = 1u64 << i;
        self.lo = (self.lo & !m) | (u64::from(x.0 & 1) << i);
        self.hi = (self.hi & !m) | (u64::from(x.0 >> 1) << i);
    }

    #[inline]
    pub(crate) fn xor(&self, o: &PackedWord) -> PackedWord {
        PackedWord {
            lo: self.lo ^ o.lo,
            hi: self.hi ^ o.hi,
            len: self.len,
        }
    }

    // a*(lo + hi a) = hi + (lo + hi) a, and b = a^2.
    #[inline]
    fn scale(&self, s: F4) -> PackedWord {
        let (lo, hi) = match s.0 {
            0 => (0, 0),
            1 => (self.lo, self.hi),
            2 => (self.hi, self.lo ^ self.hi),
            _ => (self.lo ^ self.hi, self.lo),
        };
        PackedWord {
            lo,
            hi,
            len: self.len,
        }
    }

    #[inline]
    pub(crate) fn differs_everywhere(&self, o: &PackedWord) -> bool {
        ((self.lo ^ o.lo) | (self.hi ^ o.hi)) == Self::full_mask(self.len)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Packed(PackedWord),
    Symbols(Vec<F4>),
}

/// A word of fixed positive length over GF(4).
///
/// Words of length up to 64 are kept in a packed two-plane form, longer ones
/// as a symbol array; the representation is not observable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Repr);

impl Word {
    pub fn from_symbols(symbols: &[F4]) -> Result<Word> {
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self::from_symbols_unchecked(symbols))
    }

    fn from_symbols_unchecked(symbols: &[F4]) -> Word {
        if symbols.len() <= PACKED_MAX {
            let mut p = PackedWord {
                lo: 0,
                hi: 0,
                len: symbols.len() as u8,
            };
            for (i, &x) in symbols.iter().enumerate() {
                p.set(i, x);
            }
            Word(Repr::Packed(p))
        } else {
            Word(Repr::Symbols(symbols.to_vec()))
        }
    }

    /// The all-zero word. Panics if `n == 0`.
    pub fn zeros(n: usize) -> Word {
        assert!(n > 0, "words must have positive length");
        if n <= PACKED_MAX {
            Word(Repr::Packed(PackedWord {
                lo: 0,
                hi: 0,
                len: n as u8,
            }))
        } else {
            Word(Repr::Symbols(vec![F4::ZERO; n]))
        }
    }

    /// Word whose symbol `i` is base-4 digit `i` of `index` (least significant first).
    pub fn from_index(mut index: u128, n: usize) -> Word {
        let mut w = Word::zeros(n);
        let mut i = 0;
        while index != 0 && i < n {
            w.set(i, F4::from_bits((index & 3) as u8));
            index >>= 2;
            i += 1;
        }
        w
    }

    /// Inverse of [`Word::from_index`]; `None` if the index does not fit in 128 bits.
    pub fn to_index(&self) -> Option<u128> {
        if self.len() > 64 && self.iter().skip(64).any(|x| !x.is_zero()) {
            return None;
        }
        Some(
            self.iter()
                .take(64)
                .enumerate()
                .fold(0u128, |acc, (i, x)| acc | (u128::from(x.bits()) << (2 * i))),
        )
    }

    pub fn from_letters(s: &str) -> Result<Word> {
        let symbols = s.chars().map(F4::from_letter).collect::<Result<Vec<_>>>()?;
        Word::from_symbols(&symbols)
    }

    pub fn to_letters(&self) -> String {
        self.iter().map(F4::letter).collect()
    }

    pub fn len(&self) -> usize {
        match &self.0 {
            Repr::Packed(p) => p.len as usize,
            Repr::Symbols(v) => v.len(),
        }
    }

    /// Always false; words have positive length.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Symbol at `i`. Panics if `i >= len`.
    pub fn get(&self, i: usize) -> F4 {
        assert!(
            i < self.len(),
            "index {i} out of range for word of length {}",
            self.len()
        );
        match &self.0 {
            Repr::Packed(p) => p.get(i),
            Repr::Symbols(v) => v[i],
        }
    }

    pub fn try_get(&self, i: usize) -> Option<F4> {
        (i < self.len()).then(|| self.get(i))
    }

    pub(crate) fn set(&mut self, i: usize, x: F4) {
        match &mut self.0 {
            Repr::Packed(p) => p.set(i, x),
            Repr::Symbols(v) => v[i] = x,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = F4> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn to_symbols(&self) -> Vec<F4> {
        self.iter().collect()
    }

    pub fn is_packed(&self) -> bool {
        matches!(self.0, Repr::Packed(_))
    }

    pub(crate) fn packed(&self) -> Option<&PackedWord> {
        match &self.0 {
            Repr::Packed(p) => Some(p),
            Repr::Symbols(_) => None,
        }
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        match &self.0 {
            Repr::Packed(p) => p.support().count_ones() as usize,
            Repr::Symbols(v) => v.iter().filter(|x| !x.is_zero()).count(),
        }
    }

    fn check_len(&self, other: &Word) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            })
        }
    }

    pub fn checked_add(&self, other: &Word) -> Result<Word> {
        self.check_len(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Packed(a), Repr::Packed(b)) => Word(Repr::Packed(a.xor(b))),
            _ => Word(Repr::Symbols(
                self.iter().zip(other.iter()).map(|(x, y)| x + y).collect(),
            )),
        })
    }

    pub fn scale(&self, s: F4) -> Word {
        match &self.0 {
            Repr::Packed(p) => Word(Repr::Packed(p.scale(s))),
            Repr::Symbols(v) => Word(Repr::Symbols(v.iter().map(|&x| s * x).collect())),
        }
    }

    pub fn distance(&self, other: &Word) -> Result<usize> {
        self.check_len(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Packed(a), Repr::Packed(b)) => a.xor(b).support().count_ones() as usize,
            _ => self
                .iter()
                .zip(other.iter())
                .filter(|(x, y)| x != y)
                .count(),
        })
    }

    /// True iff the words differ in every coordinate.
    pub fn differs_everywhere(&self, other: &Word) -> Result<bool> {
        self.check_len(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Packed(a), Repr::Packed(b)) => a.differs_everywhere(b),
            _ => self.iter().zip(other.iter()).all(|(x, y)| x != y),
        })
    }

    /// The word with coordinate `pos` deleted. Panics on a length-1 word.
    pub fn remove(&self, pos: usize) -> Word {
        let mut s = self.to_symbols();
        s.remove(pos);
        Word::from_symbols(&s).expect("removing from a length-1 word")
    }

    /// Symbols at `positions`, in that order.
    pub fn select(&self, positions: &[usize]) -> Result<Word> {
        let s: Vec<F4> = positions
            .iter()
            .map(|&p| {
                self.try_get(p).ok_or(Error::InvalidParameter(format!(
                    "position {p} out of range for length {}",
                    self.len()
                )))
            })
            .collect::<Result<_>>()?;
        Word::from_symbols(&s)
    }
}

impl Add for &Word {
    type Output = Word;
    /// Panics on length mismatch; see [`Word::checked_add`].
    fn add(self, rhs: &Word) -> Word {
        self.checked_add(rhs).expect("word lengths must match")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.iter() {
            write!(f, "{}", x.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        let symbols = s
            .trim()
            .chars()
            .map(F4::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        Word::from_symbols(&symbols)
    }
}

pub fn hamming_distance(x: &Word, y: &Word) -> Result<usize> {
    x.distance(y)
}

pub fn hamming_weight(x: &Word) -> usize {
    x.weight()
}

/// Odometer over words of length `n` whose symbols all lie in `F4::ALL[first..]`.
#[derive(Debug, Clone)]
pub struct WordOdometer {
    current: Word,
    first: u8,
    done: bool,
}

impl WordOdometer {
    fn new(n: usize, first: u8) -> Self {
        let mut current = Word::zeros(n);
        for i in 0..n {
            current.set(i, F4(first));
        }
        WordOdometer {
            current,
            first,
            done: false,
        }
    }
}

impl Iterator for WordOdometer {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        let mut i = 0;
        loop {
            let d = self.current.get(i).0;
            if d < 3 {
                self.current.set(i, F4(d + 1));
                break;
            }
            self.current.set(i, F4(self.first));
            i += 1;
            if i == n {
                self.done = true;
                break;
            }
        }
        Some(out)
    }
}

/// All `4^n` words of length `n`, in base-4 index order.
pub fn all_words(n: usize) -> WordOdometer {
    WordOdometer::new(n, 0)
}

/// The `3^n` words of length `n` with no zero coordinate.
pub fn full_weight_words(n: usize) -> WordOdometer {
    WordOdometer::new(n, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn tables_match_reference() {
        let (z, o, a, b) = (F4::ZERO, F4::ONE, F4::A, F4::B);
        let add = [[z, o, a, b], [o, z, b, a], [a, b, z, o], [b, a, o, z]];
        let mul = [[z, z, z, z], [z, o, a, b], [z, a, b, o], [z, b, o, a]];
        for (i, &x) in F4::ALL.iter().enumerate() {
            for (j, &y) in F4::ALL.iter().enumerate() {
                assert_eq!(f4_add(x, y), add[i][j], "{x}+{y}");
                assert_eq!(f4_mul(x, y), mul[i][j], "{x}*{y}");
            }
        }
        assert_eq!(a + b, o);
        assert_eq!(o + o, z);
        assert_eq!(a * a, b);
        assert_eq!(a * b, o);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for &x in &F4::ALL {
            assert_eq!(x + F4::ZERO, x);
            assert_eq!(x * F4::ONE, x);
            assert_eq!(x + x, F4::ZERO);
            if let Some(inv) = x.inv() {
                assert_eq!(x * inv, F4::ONE);
            } else {
                assert!(x.is_zero());
            }
            for &y in &F4::ALL {
                assert_eq!(x + y, y + x);
                assert_eq!(x * y, y * x);
                for &z in &F4::ALL {
                    assert_eq!((x + y) + z, x + (y + z));
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn parsing_aliases() {
        assert_eq!(w("0123"), w("01ab"));
        assert_eq!(w("01AB"), w("01ab"));
        assert_eq!(Word::from_letters("ABCD").unwrap(), w("01ab"));
        assert_eq!(w("01ab").to_letters(), "ABCD");
        assert_eq!(w("0123").to_string(), "01ab");
        assert!(matches!(
            "01x".parse::<Word>(),
            Err(Error::InvalidSymbol('x'))
        ));
        assert!(matches!("".parse::<Word>(), Err(Error::EmptyWord)));
        assert!(matches!(
            Word::from_letters("AE"),
            Err(Error::InvalidLetter('E'))
        ));
    }

    #[test]
    fn distance_and_weight_examples() {
        assert_eq!(hamming_distance(&w("00"), &w("11")).unwrap(), 2);
        assert_eq!(hamming_distance(&w("01ab"), &w("01ab")).unwrap(), 0);
        assert_eq!(hamming_distance(&w("01ab"), &w("01ba")).unwrap(), 2);
        assert_eq!(hamming_weight(&Word::zeros(7)), 0);
        assert_eq!(hamming_weight(&w("1ab")), 3);
        assert_eq!(hamming_weight(&w("0a0b")), 2);
        assert!(matches!(
            hamming_distance(&w("01"), &w("011")),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn long_words_use_symbol_storage() {
        let long: Word = "1a".repeat(40).parse().unwrap();
        assert!(!long.is_packed());
        assert_eq!(long.len(), 80);
        assert_eq!(long.weight(), 80);
        let doubled = &long + &long;
        assert_eq!(doubled.weight(), 0);
        assert_eq!(long.scale(F4::A).get(0), F4::A);
        assert_eq!(long.scale(F4::A).get(1), F4::B);
        assert!(w("1a").is_packed());
    }

    #[test]
    fn odometers_count() {
        assert_eq!(all_words(3).count(), 64);
        assert_eq!(full_weight_words(4).count(), 81);
        assert!(full_weight_words(4).all(|x| x.weight() == 4));
        let v: Vec<Word> = all_words(2).collect();
        for (i, x) in v.iter().enumerate() {
            assert_eq!(x.to_index(), Some(i as u128));
        }
    }

    #[test]
    fn metric_exhaustive_small() {
        for n in 1..=3 {
            let words: Vec<Word> = all_words(n).collect();
            for x in &words {
                for y in &words {
                    let dxy = x.distance(y).unwrap();
                    assert_eq!(dxy, y.distance(x).unwrap());
                    assert_eq!(dxy == 0, x == y);
                    assert_eq!(dxy, (x + y).weight());
                    for z in &words {
                        assert!(x.distance(z).unwrap() <= dxy + y.distance(z).unwrap());
                    }
                }
            }
        }
    }

    fn arb_word(n: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..4, n).prop_map(|v| {
            Word::from_symbols(&v.into_iter().map(F4::from_bits).collect::<Vec<_>>()).unwrap()
        })
    }

    fn arb_pair() -> impl Strategy<Value = (Word, Word)> {
        (1usize..100).prop_flat_map(|n| (arb_word(n), arb_word(n)))
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(x in (1usize..100).prop_flat_map(arb_word)) {
            let s = x.to_string();
            prop_assert_eq!(s.parse::<Word>().unwrap(), x);
        }

        #[test]
        fn distance_is_weight_of_difference((x, y) in arb_pair()) {
            prop_assert_eq!(x.distance(&y).unwrap(), (&x + &y).weight());
            prop_assert_eq!(
                x.differs_everywhere(&y).unwrap(),
                x.distance(&y).unwrap() == x.len()
            );
        }

        #[test]
        fn scaling_matches_symbolwise((x, _y) in arb_pair(), s in 0u8..4) {
            let s = F4::from_bits(s);
            let scaled = x.scale(s);
            for i in 0..x.len() {
                prop_assert_eq!(scaled.get(i), s * x.get(i));
            }
        }
    }
}
