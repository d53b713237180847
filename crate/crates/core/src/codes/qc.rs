//! Quasi-cyclic codes built from circulant blocks.

use super::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::{Word, F4};

/// Splits a whitespace-separated first row such as `"10000 10120"`.
pub fn parse_blocks(s: &str) -> Result<Vec<Word>> {
    s.split_whitespace().map(str::parse).collect()
}

/// Generator `[G_0 G_1 ...]` of circulant `m x m` blocks whose first row is
/// given. Row `i` shifts every block right by `i` positions.
pub fn circulant_generator(blocks: &[Word]) -> Result<LinearCode> {
    let m = blocks
        .first()
        .ok_or(Error::InvalidParameter("no blocks given".into()))?
        .len();
    if let Some(b) = blocks.iter().find(|b| b.len() != m) {
        return Err(Error::InvalidParameter(format!(
            "block {b} has length {}, expected {m}",
            b.len()
        )));
    }
    let rows = (0..m)
        .map(|shift| {
            let symbols: Vec<F4> = blocks
                .iter()
                .flat_map(|b| (0..m).map(move |j| b.get((j + m - shift) % m)))
                .collect();
            Word::from_symbols(&symbols)
        })
        .collect::<Result<Vec<_>>>()?;
    LinearCode::new(rows)
}

/// The `[40, 5]` layout: exactly eight circulant blocks of size five.
pub fn quasi_cyclic_from_first_row(blocks: &[Word]) -> Result<LinearCode> {
    if blocks.len() != 8 || blocks.iter().any(|b| b.len() != 5) {
        return Err(Error::InvalidParameter(format!(
            "expected 8 blocks of 5 symbols, got {} block(s) of lengths {:?}",
            blocks.len(),
            blocks.iter().map(Word::len).collect::<Vec<_>>()
        )));
    }
    circulant_generator(blocks)
}
