//! Upper bounds on the error probabilities and the GV threshold.

use crate::budget::Budget;
use crate::codes::{h4, Codebook, WeightDistribution};
use crate::error::{Error, Result};
use crate::scalar::{RealScalar, Scalar};

fn two_thirds_pow<T: Scalar>(s: usize) -> T {
    T::ratio(2, 3).powu(s as u32)
}

/// Bound on the average error from the distance (or weight) distribution:
/// `(1/2) sum_{s>=1} A_s (2/3)^s`.
pub fn bound_theorem1<T: Scalar>(weights: &WeightDistribution) -> T {
    let sum = weights.nonzero().fold(T::zero(), |acc, (s, a)| {
        acc + T::from_u128(a.into()) * two_thirds_pow(s)
    });
    sum / T::from_u128(2)
}

fn check_params(m: u128, d: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("need M >= 2, got {m}")));
    }
    if d < 1 {
        return Err(Error::InvalidParameter("need d >= 1".into()));
    }
    Ok(())
}

/// Average-error bound for minimum distance `>= d`:
/// `((M-1)/2 (2/3)^d, M/2 (2/3)^d)`.
pub fn bound_theorem2<T: Scalar>(m: u128, d: usize) -> Result<(T, T)> {
    check_params(m, d)?;
    let p: T = two_thirds_pow(d);
    let two = T::from_u128(2);
    Ok((
        T::from_u128(m - 1) * p.clone() / two.clone(),
        T::from_u128(m) * p / two,
    ))
}

/// Maximum-error bound for the sequential regions: `((M-1)(2/3)^d, M(2/3)^d)`.
pub fn bound_theorem3<T: Scalar>(m: u128, d: usize) -> Result<(T, T)> {
    check_params(m, d)?;
    let p: T = two_thirds_pow(d);
    Ok((T::from_u128(m - 1) * p.clone(), T::from_u128(m) * p))
}

/// Ordered pairs of codewords at each distance; `A_s = pairs[s] / M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    pub m: usize,
    pub pairs: Vec<u64>,
}

impl DistanceDistribution {
    pub fn a<T: Scalar>(&self, s: usize) -> T {
        T::ratio(
            self.pairs.get(s).copied().unwrap_or(0).into(),
            self.m as u128,
        )
    }

    pub fn bound_theorem1<T: Scalar>(&self) -> T {
        let sum = self
            .pairs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &p)| p > 0)
            .fold(T::zero(), |acc, (s, &p)| {
                acc + T::from_u128(p.into()) * two_thirds_pow(s)
            });
        sum / T::from_u128(2 * self.m as u128)
    }
}

pub fn distance_distribution(code: &Codebook, budget: &Budget) -> Result<DistanceDistribution> {
    let m = code.len() as u128;
    budget.check_exact("distance distribution", m.checked_mul(m))?;
    let mut pairs = vec![0u64; code.n() + 1];
    let words = code.words();
    for (i, x) in words.iter().enumerate() {
        pairs[0] += 1;
        for y in &words[i + 1..] {
            pairs[x.distance(y)?] += 2;
        }
    }
    Ok(DistanceDistribution {
        m: code.len(),
        pairs,
    })
}

/// Theorem-1 bound for an arbitrary codebook via its distance distribution.
pub fn bound_theorem1_from_distance_distribution<T: Scalar>(
    code: &Codebook,
    budget: &Budget,
) -> Result<T> {
    Ok(distance_distribution(code, budget)?.bound_theorem1())
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T> {
    pub theorem1: Option<T>,
    pub theorem2_tight: T,
    pub theorem2_loose: T,
    pub theorem3_tight: T,
    pub theorem3_loose: T,
}

pub fn bound_report<T: Scalar>(
    m: u128,
    d: usize,
    weights: Option<&WeightDistribution>,
) -> Result<BoundReport<T>> {
    let (theorem2_tight, theorem2_loose) = bound_theorem2(m, d)?;
    let (theorem3_tight, theorem3_loose) = bound_theorem3(m, d)?;
    Ok(BoundReport {
        theorem1: weights.map(bound_theorem1),
        theorem2_tight,
        theorem2_loose,
        theorem3_tight,
        theorem3_loose,
    })
}

/// Exponent of the GV max-error bound: `1 - H_4(x) + x log4(2/3)`.
pub fn gv_exponent<T: RealScalar>(x: T) -> T {
    let c = |v: f64| T::from_f64(v).expect("constant");
    T::one() - h4(x) + x * (c(2.0) / c(3.0)).log(c(4.0))
}

/// The root `beta` of [`gv_exponent`] in `[0.3, 0.6]` by bisection, and the
/// rate `1 - H_4(beta)` at which GV codes still drive the max error to zero.
pub fn gv_threshold<T: RealScalar>() -> (T, T) {
    let c = |v: f64| T::from_f64(v).expect("constant");
    let (mut lo, mut hi) = (c(0.3), c(0.6));
    let tol = c(1e-9);
    let f_lo_positive = gv_exponent(lo) > T::zero();
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) / c(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if (gv_exponent(mid) > T::zero()) == f_lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let beta = (lo + hi) / c(2.0);
    (beta, T::one() - h4(beta))
}
