//! Text format for generator matrices.
//!
//! ```text
//! 5 2
//! 1111a
//! 0123b
//! ```
//!
//! Line 1 holds `n k`; each of the next `k` lines is one generator row of `n`
//! symbols with no whitespace. Blank lines and lines starting with `#` are
//! ignored when parsing.

use super::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::Word;

pub fn parse_code_file(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing \"n k\" header".into(),
    })?;
    let parse_err = |line: usize, message: String| Error::Parse { line, message };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, k] = fields[..] else {
        return Err(parse_err(
            hline,
            format!("expected \"n k\", got {header:?}"),
        ));
    };
    let n: usize = n
        .parse()
        .map_err(|_| parse_err(hline, format!("bad length {n:?}")))?;
    let k: usize = k
        .parse()
        .map_err(|_| parse_err(hline, format!("bad dimension {k:?}")))?;
    if k == 0 || k > n {
        return Err(parse_err(
            hline,
            format!("need 1 <= k <= n, got n={n} k={k}"),
        ));
    }

    let mut rows = Vec::with_capacity(k);
    for (line, row) in lines.by_ref().take(k) {
        if row.chars().any(char::is_whitespace) {
            return Err(parse_err(line, "rows must not contain whitespace".into()));
        }
        let w: Word = row
            .parse()
            .map_err(|e: Error| parse_err(line, e.to_string()))?;
        if w.len() != n {
            return Err(parse_err(
                line,
                format!("row has {} symbols, expected {n}", w.len()),
            ));
        }
        rows.push(w);
    }
    if rows.len() != k {
        return Err(parse_err(
            hline,
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(
            line,
            "unexpected content after the last row".into(),
        ));
    }
    LinearCode::new(rows)
}

pub fn write_code_file(code: &LinearCode) -> String {
    let mut out = format!("{} {}\n", code.n(), code.k());
    for r in code.generator() {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
