use crate::budget::Budget;
use crate::channel::AntiChannel;
use crate::codes::{Codebook, LinearCode};
use crate::decode::ml_decode;
use crate::error::{Error, Result};
use crate::gf4::{Word, F4};
use rand::Rng;

/// Raw letter sequences after the exchange: Alice's letters are uniform and
/// Bob's are her letters passed through the channel.
pub fn generate_raw_keys<R: Rng + ?Sized>(length: usize, rng: &mut R) -> Result<(Word, Word)> {
    if length == 0 {
        return Err(Error::InvalidParameter(
            "raw key length must be >= 1".into(),
        ));
    }
    let mut alice = Vec::with_capacity(length);
    let mut bob = Vec::with_capacity(length);
    for _ in 0..length {
        let x = F4::from_bits(rng.random_range(0..4));
        alice.push(x);
        bob.push(AntiChannel.transmit_letter(x, rng));
    }
    Ok((Word::from_symbols(&alice)?, Word::from_symbols(&bob)?))
}

/// Two bits per message symbol: 0 -> 00, 1 -> 01, a -> 10, b -> 11.
pub fn message_bits(message: &Word) -> Vec<bool> {
    message
        .iter()
        .flat_map(|s| [s.bits() & 2 != 0, s.bits() & 1 != 0])
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolTranscript {
    pub alice_letters: Word,
    pub bob_letters: Word,
    /// Positions announced for each word, in the order of the word's symbols.
    pub announcements: Vec<Vec<usize>>,
    pub sent_words: Vec<Word>,
    pub decoded_words: Vec<Word>,
    pub key_bits_alice: Vec<bool>,
    pub key_bits_bob: Vec<bool>,
    /// Raw positions used by announcements.
    pub letters_consumed: usize,
}

impl ProtocolTranscript {
    pub fn words(&self) -> usize {
        self.sent_words.len()
    }

    pub fn word_errors(&self) -> usize {
        self.sent_words
            .iter()
            .zip(&self.decoded_words)
            .filter(|(s, d)| s != d)
            .count()
    }

    pub fn word_error_rate(&self) -> f64 {
        if self.words() == 0 {
            0.0
        } else {
            self.word_errors() as f64 / self.words() as f64
        }
    }

    pub fn key_bit_errors(&self) -> usize {
        self.key_bits_alice
            .iter()
            .zip(&self.key_bits_bob)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Key bits per consumed raw letter.
    pub fn realized_efficiency(&self) -> f64 {
        if self.letters_consumed == 0 {
            0.0
        } else {
            self.key_bits_alice.len() as f64 / self.letters_consumed as f64
        }
    }

    /// Checks the structural invariants: unique positions, Alice's letters
    /// spell each sent word, Bob's letters differ from Alice's everywhere.
    pub fn validate(&self) -> Result<()> {
        let len = self.alice_letters.len();
        if self.bob_letters.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: self.bob_letters.len(),
            });
        }
        if !self.alice_letters.differs_everywhere(&self.bob_letters)? {
            return Err(Error::InvalidParameter(
                "raw letters agree at some position".into(),
            ));
        }
        let words = self.announcements.len();
        if self.sent_words.len() != words || self.decoded_words.len() != words {
            return Err(Error::InvalidParameter("section lengths disagree".into()));
        }
        let mut used = vec![false; len];
        for (positions, sent) in self.announcements.iter().zip(&self.sent_words) {
            if positions.len() != sent.len() {
                return Err(Error::LengthMismatch {
                    expected: sent.len(),
                    found: positions.len(),
                });
            }
            for (j, &p) in positions.iter().enumerate() {
                if p >= len || used[p] {
                    return Err(Error::InvalidParameter(format!(
                        "position {p} out of range or reused"
                    )));
                }
                used[p] = true;
                if self.alice_letters.get(p) != sent.get(j) {
                    return Err(Error::InvalidParameter(format!(
                        "position {p} does not spell the sent word"
                    )));
                }
            }
        }
        if used.iter().filter(|&&u| u).count() != self.letters_consumed {
            return Err(Error::InvalidParameter(
                "letters_consumed disagrees with announcements".into(),
            ));
        }
        Ok(())
    }
}

/// A code prepared for repeated protocol runs.
#[derive(Debug, Clone)]
pub struct Protocol {
    code: LinearCode,
    codebook: Codebook,
}

impl Protocol {
    pub fn new(code: &LinearCode, budget: &Budget) -> Result<Self> {
        Ok(Self {
            codebook: code.codebook(budget)?,
            code: code.clone(),
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// Runs the position-announcement protocol on `letters` raw letters.
    ///
    /// Each word takes, for every symbol in turn, the leftmost unused position
    /// of Alice's sequence holding that letter. The run stops at the first
    /// word that cannot be spelled.
    pub fn run<R: Rng + ?Sized>(
        &self,
        num_words: usize,
        letters: usize,
        rng: &mut R,
    ) -> Result<ProtocolTranscript> {
        let n = self.code.n();
        let (alice, bob) = generate_raw_keys(letters, rng)?;
        let mut by_letter: [Vec<usize>; 4] = Default::default();
        for (p, x) in alice.iter().enumerate() {
            by_letter[x.bits() as usize].push(p);
        }
        let mut cursor = [0usize; 4];
        let mut t = ProtocolTranscript {
            alice_letters: alice,
            bob_letters: bob,
            announcements: Vec::new(),
            sent_words: Vec::new(),
            decoded_words: Vec::new(),
            key_bits_alice: Vec::new(),
            key_bits_bob: Vec::new(),
            letters_consumed: 0,
        };
        for w in 0..num_words {
            let index = rng.random_range(0..self.codebook.len());
            let sent = self.codebook.get(index).clone();
            let mut need = [0usize; 4];
            for s in sent.iter() {
                need[s.bits() as usize] += 1;
            }
            if (0..4).any(|x| cursor[x] + need[x] > by_letter[x].len()) {
                if w == 0 {
                    return Err(Error::LettersExhausted { letters });
                }
                break;
            }
            let positions: Vec<usize> = sent
                .iter()
                .map(|s| {
                    let x = s.bits() as usize;
                    cursor[x] += 1;
                    by_letter[x][cursor[x] - 1]
                })
                .collect();
            let received = t.bob_letters.select(&positions)?;
            assert_eq!(t.alice_letters.select(&positions)?, sent);
            let outcome = ml_decode(&received, &self.codebook, rng)?;
            let decoded = match outcome.index() {
                Some(i) => self.codebook.get(i).clone(),
                None => unreachable!("a channel output is consistent with the sent word"),
            };
            t.key_bits_alice
                .extend(message_bits(&self.code.message_of(&sent)?));
            t.key_bits_bob
                .extend(message_bits(&self.code.message_of(&decoded)?));
            t.letters_consumed += n;
            t.announcements.push(positions);
            t.sent_words.push(sent);
            t.decoded_words.push(decoded);
        }
        Ok(t)
    }
}

/// One protocol run; see [`Protocol::run`].
pub fn run_protocol<R: Rng + ?Sized>(
    code: &LinearCode,
    num_words: usize,
    letters: usize,
    rng: &mut R,
    budget: &Budget,
) -> Result<ProtocolTranscript> {
    Protocol::new(code, budget)?.run(num_words, letters, rng)
}
