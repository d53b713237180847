//! Monte Carlo error estimation and the one-way key-generation protocol.

mod protocol;
mod transcript;

pub use protocol::{generate_raw_keys, message_bits, run_protocol, Protocol, ProtocolTranscript};
pub use transcript::{parse_transcript, write_transcript};

use crate::analysis::{ErrorReport, Method, MonteCarloStats};
use crate::channel::AntiChannel;
use crate::codes::{Codebook, LinearCode};
use crate::decode::{decode, DecoderKind};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Trials drawn from one derived random stream.
pub const TRIALS_PER_STREAM: u64 = 4096;

/// Per-codeword tallies are kept once every codeword is expected this often.
pub const PER_CODEWORD_MIN_EXPECTED: u64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    /// Each trial sends a uniformly random codeword.
    Uniform,
    /// Every trial sends the codeword with this index.
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonteCarloConfig {
    pub trials: u64,
    pub seed: u64,
    pub decoder: DecoderKind,
    pub selection: Selection,
}

impl MonteCarloConfig {
    pub fn new(trials: u64, seed: u64, decoder: DecoderKind) -> Self {
        Self {
            trials,
            seed,
            decoder,
            selection: Selection::Uniform,
        }
    }
}

/// Random stream `stream` of the master seed.
pub fn derived_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Debug, Clone, Default)]
struct Tally {
    trials: u64,
    errors: u64,
    sent: Vec<u64>,
    wrong: Vec<u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.trials += other.trials;
        self.errors += other.errors;
        if self.sent.is_empty() {
            self.sent = other.sent;
            self.wrong = other.wrong;
        } else {
            for (a, b) in self.sent.iter_mut().zip(other.sent) {
                *a += b;
            }
            for (a, b) in self.wrong.iter_mut().zip(other.wrong) {
                *a += b;
            }
        }
        self
    }
}

/// Sends codewords through the channel, decodes them and counts word errors.
///
/// Trials are split into blocks of [`TRIALS_PER_STREAM`], block `b` using
/// stream `b` of the seed, so the result does not depend on how many threads
/// run the blocks.
pub fn estimate_error(code: &Codebook, config: &MonteCarloConfig) -> Result<ErrorReport<f64>> {
    if config.trials == 0 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    let m = code.len();
    if let Selection::Fixed(i) = config.selection {
        if i >= m {
            return Err(Error::InvalidParameter(format!(
                "codeword index {i} out of range"
            )));
        }
    }
    let per_codeword = config.trials / m as u64 >= PER_CODEWORD_MIN_EXPECTED;
    let blocks = config.trials.div_ceil(TRIALS_PER_STREAM);
    let tally = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = derived_rng(config.seed, b);
            let start = b * TRIALS_PER_STREAM;
            let count = TRIALS_PER_STREAM.min(config.trials - start);
            let mut t = Tally {
                trials: count,
                ..Tally::default()
            };
            if per_codeword {
                t.sent = vec![0; m];
                t.wrong = vec![0; m];
            }
            for _ in 0..count {
                let i = match config.selection {
                    Selection::Uniform => rng.random_range(0..m),
                    Selection::Fixed(i) => i,
                };
                let y = AntiChannel.transmit(code.get(i), &mut rng);
                let out = decode(config.decoder, &y, code, &mut rng).expect("lengths match");
                let wrong = out.index() != Some(i);
                t.errors += u64::from(wrong);
                if per_codeword {
                    t.sent[i] += 1;
                    t.wrong[i] += u64::from(wrong);
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let stats = MonteCarloStats::new(tally.trials, tally.errors);
    let average = tally.errors as f64 / tally.trials as f64;
    let per: Vec<f64> = tally
        .sent
        .iter()
        .zip(&tally.wrong)
        .map(|(&s, &w)| if s == 0 { 0.0 } else { w as f64 / s as f64 })
        .collect();
    let maximum = per.iter().copied().fold(average, f64::max);
    Ok(ErrorReport {
        n: code.n(),
        per_codeword: per,
        average,
        maximum,
        method: Method::MonteCarlo,
        monte_carlo: Some(stats),
    })
}

/// Key bits per letter, `log2(M) / n`.
pub fn efficiency(code: &LinearCode) -> f64 {
    crate::codes::efficiency(code.n(), code.k())
}
