//! Decoding error probabilities: exact enumeration, the coset count for
//! linear codes, and closed-form upper bounds.
//!
//! For a codebook `c_1..c_M` with decoding regions `D_i`, the error
//! probability of codeword `i` is `e_i = 1 - |D_i| / 3^n`. Exact routines
//! return big rationals so different methods can be compared for equality.

mod bounds;
mod exact;

pub use bounds::{
    bound_report, bound_theorem1, bound_theorem1_from_distance_distribution, bound_theorem2,
    bound_theorem3, distance_distribution, gv_exponent, gv_threshold, BoundReport,
    DistanceDistribution,
};
pub use exact::{
    average_from_union, coset_alpha, exact_error_ml, exact_error_sequential, union_measure,
    CosetCount,
};

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactEnumeration,
    Coset,
    MonteCarlo,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ExactEnumeration => "exact-enum",
            Method::Coset => "coset",
            Method::MonteCarlo => "monte-carlo",
        })
    }
}

/// Tallies behind a simulated estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloStats {
    pub trials: u64,
    pub errors: u64,
    /// Binomial standard error of the estimated average.
    pub std_error: f64,
}

impl MonteCarloStats {
    pub fn new(trials: u64, errors: u64) -> Self {
        let p = errors as f64 / trials as f64;
        Self {
            trials,
            errors,
            std_error: (p * (1.0 - p) / trials as f64).sqrt(),
        }
    }

    /// Confidence half-width at `z` standard errors.
    pub fn half_width(&self, z: f64) -> f64 {
        z * self.std_error
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport<T> {
    pub n: usize,
    /// `e_1..e_M`; empty when the method only yields the average.
    pub per_codeword: Vec<T>,
    pub average: T,
    pub maximum: T,
    pub method: Method,
    pub monte_carlo: Option<MonteCarloStats>,
}

impl<T: Scalar> ErrorReport<T> {
    pub(crate) fn from_per_codeword(n: usize, per_codeword: Vec<T>, method: Method) -> Self {
        let m = T::from_u128(per_codeword.len() as u128);
        let sum = per_codeword
            .iter()
            .fold(T::zero(), |acc, e| acc + e.clone());
        let maximum = per_codeword
            .iter()
            .fold(T::zero(), |acc, e| if *e > acc { e.clone() } else { acc });
        Self {
            n,
            average: sum / m,
            maximum,
            per_codeword,
            method,
            monte_carlo: None,
        }
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> ErrorReport<U> {
        ErrorReport {
            n: self.n,
            per_codeword: self.per_codeword.iter().map(&f).collect(),
            average: f(&self.average),
            maximum: f(&self.maximum),
            method: self.method,
            monte_carlo: self.monte_carlo,
        }
    }

    pub fn to_f64(&self) -> ErrorReport<f64> {
        self.map(Scalar::to_f64)
    }
}

/// Renders `r` as `"num/3^n"` when `3^n r` is an integer, else as `"p/q"`.
pub fn format_exact(r: &BigRational, n: usize) -> String {
    let scale = BigInt::from(3u8).pow(n as u32);
    let scaled = r * BigRational::from_integer(scale);
    if scaled.is_integer() {
        format!("{}/3^{n}", scaled.to_integer())
    } else if r.is_zero() || r.is_one() {
        r.to_integer().to_string()
    } else {
        let g = r.numer().gcd(r.denom());
        format!("{}/{}", r.numer() / &g, r.denom() / &g)
    }
}
