//! Row reduction over GF(4).

use crate::gf4::{Word, F4};

/// Reduced row echelon form of `rows`.
///
/// Returns the nonzero reduced rows and their pivot columns; the number of
/// rows returned is the rank.
pub(crate) fn rref(rows: &[Word]) -> (Vec<Word>, Vec<usize>) {
    let mut rows: Vec<Word> = rows.to_vec();
    let Some(n) = rows.first().map(Word::len) else {
        return (rows, Vec::new());
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].get(col).is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].get(col).inv().expect("pivot is nonzero");
        rows[r] = rows[r].scale(inv);
        for i in 0..rows.len() {
            if i != r {
                let f = rows[i].get(col);
                if !f.is_zero() {
                    // Characteristic 2: subtracting equals adding.
                    rows[i] = &rows[i] + &rows[r].scale(f);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

#[cfg(test)]
pub(crate) fn rank(rows: &[Word]) -> usize {
    rref(rows).1.len()
}

/// Inverse of a square matrix given as rows, or `None` if singular.
pub(crate) fn invert(m: &[Vec<F4>]) -> Option<Vec<Vec<F4>>> {
    let k = m.len();
    let mut a: Vec<Vec<F4>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { F4::ONE } else { F4::ZERO }));
            r
        })
        .collect();
    for col in 0..k {
        let p = (col..k).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].inv()?;
        for x in a[col].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..k {
            if i != col {
                let f = a[i][col];
                if !f.is_zero() {
                    let pivot = a[col].clone();
                    for (x, v) in a[i].iter_mut().zip(pivot) {
                        *x = *x + f * v;
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[k..].to_vec()).collect())
}

/// Row vector times matrix.
pub(crate) fn vec_mul(v: &[F4], m: &[Vec<F4>]) -> Vec<F4> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(F4::ZERO, |acc, (&x, row)| acc + x * row[j])
        })
        .collect()
}
