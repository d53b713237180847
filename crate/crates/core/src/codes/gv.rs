//! Gilbert-Varshamov style random construction and the GV rate.

use super::{LinearCode, MAX_DIMENSION};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gf4::{Word, F4};
use crate::scalar::RealScalar;
use rand::Rng;

/// Quaternary entropy `H_4(x) = x log4 3 - x log4 x - (1-x) log4(1-x)`,
/// with `0 log 0 = 0`.
pub fn h4<T: RealScalar>(x: T) -> T {
    let four = T::from_u8(4).expect("small integer");
    let three = T::from_u8(3).expect("small integer");
    let xlogx = |v: T| {
        if v > T::zero() {
            v * v.log(four)
        } else {
            T::zero()
        }
    };
    x * three.log(four) - xlogx(x) - xlogx(T::one() - x)
}

/// GV dimension rate `1 - H_4(d/n)` for `0 <= d/n <= 3/4`.
pub fn gv_rate_bound<T: RealScalar>(d_over_n: T) -> Result<T> {
    let limit = T::from_f64(0.75).expect("constant");
    if !(d_over_n >= T::zero() && d_over_n <= limit) {
        return Err(Error::InvalidParameter(format!(
            "relative distance {d_over_n:?} outside [0, 3/4]"
        )));
    }
    Ok(T::one() - h4(d_over_n))
}

#[derive(Debug, Clone, Copy)]
pub struct GvOptions {
    /// Random candidates tried per additional row before giving up.
    pub max_attempts: usize,
    pub budget: Budget,
}

impl Default for GvOptions {
    fn default() -> Self {
        Self {
            max_attempts: 1000,
            budget: Budget::default(),
        }
    }
}

/// Grows a random linear code one row at a time, keeping a candidate row `r`
/// only if every new codeword has weight at least `d`.
///
/// New codewords are `c + s r` for `c` in the current code and `s != 0`; as
/// `s^-1 C = C`, checking `c + r` for all `c` suffices. The result is checked
/// once more by full enumeration before it is returned.
pub fn gv_random_code<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    rng: &mut R,
    opts: &GvOptions,
) -> Result<LinearCode> {
    if n == 0 || d == 0 || d > n {
        return Err(Error::InvalidParameter(format!(
            "need 0 < d <= n, got n={n} d={d}"
        )));
    }
    if d == 1 && n <= MAX_DIMENSION {
        // Every nonzero word has weight >= 1, so the whole space qualifies.
        let rows = (0..n)
            .map(|i| {
                let mut w = Word::zeros(n);
                w.set(i, F4::ONE);
                w
            })
            .collect();
        return LinearCode::new(rows);
    }

    let mut rows: Vec<Word> = Vec::new();
    let mut span: Vec<Word> = vec![Word::zeros(n)];
    while rows.len() < n.min(MAX_DIMENSION) {
        let next_size = (span.len() as u128) * 4;
        if next_size > u128::from(opts.budget.codewords) {
            break;
        }
        let accepted = (0..opts.max_attempts).find_map(|_| {
            let symbols: Vec<F4> = (0..n)
                .map(|_| F4::from_bits(rng.random_range(0..4)))
                .collect();
            let r = Word::from_symbols(&symbols).expect("n > 0");
            span.iter().all(|c| (c + &r).weight() >= d).then_some(r)
        });
        let Some(r) = accepted else { break };
        let mut grown = Vec::with_capacity(span.len() * 4);
        for s in F4::ALL {
            let sr = r.scale(s);
            grown.extend(span.iter().map(|c| c + &sr));
        }
        span = grown;
        rows.push(r);
    }
    if rows.is_empty() {
        return Err(Error::NoCodeFound {
            d,
            attempts: opts.max_attempts,
        });
    }
    let code = LinearCode::new(rows)?;
    let verified = code.minimum_distance(&opts.budget)?;
    assert!(
        verified >= d,
        "GV construction produced distance {verified} < {d}"
    );
    Ok(code)
}
