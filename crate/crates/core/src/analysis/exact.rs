use super::{ErrorReport, Method};
use crate::budget::{checked_pow, Budget};
use crate::codes::{matrix, Codebook, LinearCode};
use crate::decode::{consistency_set, consistent_fast};
use crate::error::Result;
use crate::gf4::{all_words, full_weight_words, Word};
use crate::scalar::Scalar;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashSet;

fn enumeration_ops(code: &Codebook) -> Option<u128> {
    let m = code.len() as u128;
    checked_pow(3, code.n())?.checked_mul(m)?.checked_mul(m)
}

/// Exact `e_i` for the sequential regions: `e_1 = 0` and
/// `e_i = |L(c_i) ∩ (L(c_1) ∪ ... ∪ L(c_{i-1}))| / 3^n`.
pub fn exact_error_sequential(
    code: &Codebook,
    budget: &Budget,
) -> Result<ErrorReport<BigRational>> {
    code.require_pair()?;
    budget.check_exact("exact sequential error enumeration", enumeration_ops(code))?;
    let words = code.words();
    let denom = checked_pow(3, code.n()).expect("checked by budget");
    let overlaps: Vec<u128> = (0..words.len())
        .into_par_iter()
        .map(|i| {
            consistency_set(&words[i])
                .filter(|y| words[..i].iter().any(|c| consistent_fast(y, c)))
                .count() as u128
        })
        .collect();
    let per = overlaps
        .into_iter()
        .map(|o| BigRational::ratio(o, denom))
        .collect();
    let report = ErrorReport::from_per_codeword(code.n(), per, Method::ExactEnumeration);
    assert!(report.average > BigRational::zero());
    Ok(report)
}

/// Exact `e_i` for maximum-likelihood decoding with uniform tie-breaking:
/// `e_i = 3^-n * sum over y in L(c_i) of (1 - 1/t(y))`, where `t(y)` counts
/// the codewords consistent with `y`.
pub fn exact_error_ml(code: &Codebook, budget: &Budget) -> Result<ErrorReport<BigRational>> {
    code.require_pair()?;
    budget.check_exact("exact ML error enumeration", enumeration_ops(code))?;
    let words = code.words();
    let denom = BigRational::from_u128(checked_pow(3, code.n()).expect("checked by budget"));
    let per: Vec<BigRational> = (0..words.len())
        .into_par_iter()
        .map(|i| {
            // histogram[t] = #{y in L(c_i) : t(y) = t}
            let mut histogram = vec![0u128; words.len() + 1];
            for y in consistency_set(&words[i]) {
                let t = words.iter().filter(|c| consistent_fast(&y, c)).count();
                histogram[t] += 1;
            }
            let wrong: BigRational = histogram
                .iter()
                .enumerate()
                .skip(2)
                .filter(|&(_, &h)| h > 0)
                .map(|(t, &h)| {
                    BigRational::from_u128(h) * BigRational::ratio(t as u128 - 1, t as u128)
                })
                .sum();
            wrong / &denom
        })
        .collect();
    let report = ErrorReport::from_per_codeword(code.n(), per, Method::ExactEnumeration);
    assert!(report.average > BigRational::zero());
    Ok(report)
}

/// `|L(c_1) ∪ ... ∪ L(c_M)|`, counted by testing every word of `F4^n`.
pub fn union_measure(code: &Codebook, budget: &Budget) -> Result<u128> {
    let ops = checked_pow(4, code.n()).and_then(|w| w.checked_mul(code.len() as u128));
    budget.check_exact("union measure", ops)?;
    Ok(all_words(code.n())
        .par_bridge()
        .filter(|y| code.words().iter().any(|c| consistent_fast(y, c)))
        .count() as u128)
}

/// Average error `1 - |∪ L(c_i)| / (3^n M)`, valid for any decoding regions.
pub fn average_from_union(n: usize, m: usize, union: u128) -> Result<BigRational> {
    let cap = checked_pow(3, n)
        .and_then(|t| t.checked_mul(m as u128))
        .ok_or(crate::error::Error::Overflow("3^n M"))?;
    Ok(BigRational::one() - BigRational::ratio(union, cap))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CosetCount {
    /// Number of cosets of the code meeting the full-weight words.
    pub alpha: u128,
    /// `1 - alpha / 3^n`.
    pub average: BigRational,
}

impl CosetCount {
    /// As an error report; for ML decoding of a linear code every `e_i` equals the average.
    pub fn report(&self, n: usize) -> ErrorReport<BigRational> {
        ErrorReport {
            n,
            per_codeword: Vec::new(),
            average: self.average.clone(),
            maximum: self.average.clone(),
            method: Method::Coset,
            monte_carlo: None,
        }
    }
}

/// Counts the cosets `a + C` hit by full-weight words `a`.
///
/// Each `a` is reduced against the reduced echelon generator so that it is
/// zero at the pivot columns; that canonical representative identifies its
/// coset the same way a syndrome would.
pub fn coset_alpha(code: &LinearCode, budget: &Budget) -> Result<CosetCount> {
    let n = code.n();
    let words = checked_pow(3, n);
    budget.check_coset("coset enumeration", words)?;
    let (rows, pivots) = matrix::rref(code.generator());
    let reduce = |a: Word| -> Word {
        pivots.iter().zip(&rows).fold(a.clone(), |acc, (&p, r)| {
            let f = a.get(p);
            if f.is_zero() {
                acc
            } else {
                &acc + &r.scale(f)
            }
        })
    };
    let reps: HashSet<Word> = full_weight_words(n).map(reduce).collect();
    let alpha = reps.len() as u128;
    let denom = words.expect("checked by budget");
    Ok(CosetCount {
        alpha,
        average: BigRational::one() - BigRational::ratio(alpha, denom),
    })
}
