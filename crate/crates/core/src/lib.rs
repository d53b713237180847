//! Coding for the four-letter channel whose output never equals its input.
//!
//! Each sent letter is replaced by one of the other three letters, chosen
//! uniformly. A received word therefore rules out, position by position, one
//! letter of the sent word; a codeword `c` can produce exactly the `3^n`
//! words that differ from it everywhere (its consistency set).
//!
//! The crate provides GF(4) words ([`gf4`]), the channel law ([`channel`]),
//! linear and explicit codes ([`codes`]), the sequential and maximum-likelihood
//! decoders ([`decode`]), exact error probabilities and upper bounds
//! ([`analysis`]), Monte Carlo estimates and the position-announcement key
//! protocol ([`sim`]), and reproduction of the published code table
//! ([`report`]).
//!
//! ```
//! use anticode::{Budget, LinearCode, exact_error_ml};
//!
//! let code = LinearCode::from_rows(&["11"]).unwrap();
//! let book = code.codebook(&Budget::default()).unwrap();
//! let report = exact_error_ml(&book, &Budget::default()).unwrap();
//! assert_eq!(report.average, anticode::Exact::new(5.into(), 9.into()));
//! ```

pub mod analysis;
pub mod budget;
pub mod channel;
pub mod codes;
pub mod decode;
pub mod error;
pub mod gf4;
pub mod report;
pub mod scalar;
pub mod sim;

pub use analysis::{
    bound_theorem1, bound_theorem2, bound_theorem3, coset_alpha, exact_error_ml,
    exact_error_sequential, gv_threshold, union_measure, ErrorReport, Method,
};
pub use budget::Budget;
pub use channel::AntiChannel;
pub use codes::{Codebook, LinearCode, WeightDistribution};
pub use decode::{ml_decode, sequential_decode, DecodeOutcome, Decoded, DecoderKind};
pub use error::{Error, Result};
pub use gf4::{Word, F4};
pub use scalar::{RealScalar, Scalar};
pub use sim::{estimate_error, run_protocol, MonteCarloConfig, ProtocolTranscript};

/// Exact probabilities.
pub type Exact = num_rational::BigRational;
pub type ExactReport = ErrorReport<Exact>;
pub type FloatReport = ErrorReport<f64>;
