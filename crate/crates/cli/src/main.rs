mod commands;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::Format;
use std::path::PathBuf;
use std::process::ExitCode;

const KEYS_HELP: &str = "\
Output: key=value lines on stdout and an aligned table on stderr (see --format).
Tabular results print one line per row with space-separated key=value fields.";

#[derive(Parser, Debug)]
#[command(name = "anticode", version, about = "Codes and key generation for the channel whose output letter never equals the input letter", after_help = KEYS_HELP, arg_required_else_help = true)]
pub struct Cli {
    /// Enumeration limit applied to every exhaustive computation.
    #[arg(long, global = true, env = "ANTICODE_BUDGET", value_name = "OPS")]
    pub budget: Option<u64>,

    /// Worker threads for parallel enumeration and simulation.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value = "both")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CodeArgs {
    /// Generator matrix file: an "n k" line followed by k rows over 0 1 a b.
    #[arg(long, value_name = "FILE")]
    pub code: Option<PathBuf>,

    /// Built-in code, e.g. "[40,5,28]".
    #[arg(long, value_name = "NAME", conflicts_with = "code")]
    pub name: Option<String>,

    /// Explicit codebook file: whitespace-separated words, in decoding order.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["code", "name"])]
    pub codebook: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecoderArg {
    Ml,
    #[value(alias = "sequential")]
    Seq,
}

impl From<DecoderArg> for anticode::DecoderKind {
    fn from(d: DecoderArg) -> Self {
        match d {
            DecoderArg::Ml => anticode::DecoderKind::Ml,
            DecoderArg::Seq => anticode::DecoderKind::Sequential,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Enumerate every received word (exact rationals, per codeword).
    Exact,
    /// Count cosets hit by full-weight words (linear codes, ML).
    Coset,
    /// Count the union of the consistency sets over all words.
    Union,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reproduce {
    Table1,
    Example1,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Channel entropies, mutual information and capacity.
    ///
    /// Keys: h_y_bits h_y_given_x_bits mutual_info_bits capacity_bits.
    Info,
    /// Weight distribution of a linear code.
    ///
    /// Keys: n k codewords min_distance, then weight=S count=A per nonzero weight.
    Weights(CodeArgs),
    /// Minimum distance by exhaustive enumeration.
    ///
    /// Keys: n k codewords min_distance.
    Mindist(CodeArgs),
    /// Built-in codes.
    ///
    /// Keys per row: name n k d m rate source generator bound.
    Catalog {
        #[arg(long, value_name = "NAME")]
        name: Option<String>,
    },
    /// Random linear code of length n with minimum distance at least d.
    ///
    /// Keys: n k d min_distance seed out.
    Gv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output code file (printed on the text stream when omitted).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
    },
    /// Relative distance where the GV maximum-error exponent vanishes.
    ///
    /// Keys: beta rate.
    GvThreshold,
    /// Upper bounds on average and maximum error.
    ///
    /// Keys: n m d theorem1 theorem2_tight theorem2_loose theorem3_tight theorem3_loose.
    Bounds {
        #[command(flatten)]
        code: CodeArgs,
        /// Parameters "n,k,d" instead of a code.
        #[arg(long, value_name = "N,K,D", conflicts_with_all = ["code", "name", "codebook"])]
        params: Option<String>,
        /// Take the weight distribution from this catalog entry.
        #[arg(long, value_name = "NAME")]
        weights_from_catalog: Option<String>,
    },
    /// Exact error probabilities.
    ///
    /// Keys: method n m average average_exact maximum maximum_exact, plus
    /// alpha (coset) or union (union), and e_i lines for the exact method.
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "exact")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "ml")]
        decoder: DecoderArg,
    },
    /// Decode one received word.
    ///
    /// Keys: result index codeword tie_count consistent.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_name = "WORD")]
        word: String,
        #[arg(long, value_enum, default_value = "ml")]
        decoder: DecoderArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Monte Carlo estimate of the decoding error.
    ///
    /// Keys: trials errors average std_error half_width_4sigma maximum seed decoder.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, value_enum, default_value = "ml")]
        decoder: DecoderArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Key generation by announcing raw-sequence positions.
    ///
    /// Keys: words word_errors word_error_rate key_bits key_bit_errors letters
    /// letters_consumed efficiency realized_efficiency seed.
    Protocol {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 1000)]
        words: usize,
        #[arg(long, default_value_t = 100_000)]
        letters: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the transcript here (a FILE.manifest sidecar is written too).
        #[arg(long, value_name = "FILE")]
        transcript: Option<PathBuf>,
    },
    /// Recompute the published table or the example codes.
    ///
    /// Keys per row (table1): name n k d m rate tight loose published flag.
    Reproduce {
        #[arg(value_enum)]
        which: Reproduce,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
