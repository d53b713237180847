//! Built-in codes: the parameter table of quaternary codes and the four
//! explicitly described moderate-length codes.
//!
//! Most entries are parameter triples only. Two carry a published weight
//! distribution, and the quasi-cyclic `[40,5,28]` code and its shortening
//! carry an explicit generator.

use super::{parse_blocks, quasi_cyclic_from_first_row, LinearCode, WeightDistribution};
use crate::error::Result;

/// First generator row of the quasi-cyclic `[40,5,28]` code, digits 2 and 3
/// standing for `a` and `b`.
pub const QC_40_5_FIRST_ROW: &str = "10000 10120 11020 11230 12220 13130 13210 11312";

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Source {
    /// A row of the parameter table.
    Table { row: usize },
    /// One of the four explicit example codes, numbered 1 to 4.
    Example { item: u8 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub source: Source,
    /// Published upper bound `M/2 (2/3)^d` (as printed, four significant digits).
    pub published_bound: f64,
    /// Published bound from the weight distribution, where one was given.
    pub published_weight_bound: Option<f64>,
    weights: Option<&'static [(usize, u64)]>,
}

impl CatalogEntry {
    fn new(n: usize, k: usize, d: usize, source: Source, published_bound: f64) -> Self {
        Self {
            name: format!("[{n},{k},{d}]"),
            n,
            k,
            d,
            source,
            published_bound,
            published_weight_bound: None,
            weights: None,
        }
    }

    pub fn size(&self) -> u128 {
        1u128 << (2 * self.k)
    }

    pub fn efficiency(&self) -> f64 {
        super::efficiency(self.n, self.k)
    }

    /// Stored weight distribution, for the entries that publish one.
    pub fn weight_distribution(&self) -> Option<WeightDistribution> {
        self.weights
            .map(|w| WeightDistribution::from_sparse(self.n, w).expect("catalog data is valid"))
    }

    pub fn has_generator(&self) -> bool {
        matches!(self.source, Source::Example { item: 3 | 4 })
    }

    /// The explicit code, if the entry has a generator.
    pub fn code(&self) -> Option<Result<LinearCode>> {
        match self.source {
            Source::Example { item: 3 } => Some(qc_40_5()),
            Source::Example { item: 4 } => Some(qc_40_5().and_then(|c| c.shorten(0))),
            _ => None,
        }
    }
}

fn qc_40_5() -> Result<LinearCode> {
    quasi_cyclic_from_first_row(&parse_blocks(QC_40_5_FIRST_ROW)?)
}

// (n, k, d, printed bound), in table order: the n = 100 group, the two long
// codes, then lengths 50 down to 10.
const TABLE: [(usize, usize, usize, f64); 22] = [
    (100, 10, 62, 6.337e-6),
    (100, 11, 60, 5.704e-5),
    (100, 12, 58, 5.133e-4),
    (100, 13, 56, 4.620e-3),
    (100, 14, 55, 0.02772),
    (100, 15, 52, 0.3742),
    (200, 20, 109, 3.517e-8),
    (250, 25, 136, 6.340e-10),
    (50, 5, 35, 3.516e-4),
    (50, 6, 33, 3.165e-3),
    (48, 6, 32, 4.747e-3),
    (48, 5, 33, 7.912e-4),
    (47, 6, 31, 7.120e-3),
    (46, 5, 32, 1.187e-3),
    (45, 5, 31, 1.780e-3),
    (43, 5, 30, 2.670e-3),
    (42, 5, 29, 4.005e-3),
    (41, 5, 28, 6.008e-3),
    (40, 4, 28, 1.502e-3),
    (30, 3, 22, 4.277e-3),
    (20, 2, 16, 0.01218),
    (10, 1, 10, 0.02601),
];

const WEIGHTS_28_4: &[(usize, u64)] = &[(20, 189), (24, 63), (28, 3)];
const WEIGHTS_31_4: &[(usize, u64)] = &[(22, 141), (24, 87), (28, 24), (30, 3)];

/// Table rows first, then the four example codes.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut entries: Vec<CatalogEntry> = TABLE
        .iter()
        .enumerate()
        .map(|(row, &(n, k, d, b))| CatalogEntry::new(n, k, d, Source::Table { row }, b))
        .collect();

    let mut e1 = CatalogEntry::new(28, 4, 20, Source::Example { item: 1 }, 0.03849);
    e1.weights = Some(WEIGHTS_28_4);
    e1.published_weight_bound = Some(0.03038);
    let mut e2 = CatalogEntry::new(31, 4, 22, Source::Example { item: 2 }, 0.01711);
    e2.weights = Some(WEIGHTS_31_4);
    e2.published_weight_bound = Some(0.01216);
    let e3 = CatalogEntry::new(40, 5, 28, Source::Example { item: 3 }, 0.006008);
    let e4 = CatalogEntry::new(39, 4, 28, Source::Example { item: 4 }, 0.001502);
    entries.extend([e1, e2, e3, e4]);
    entries
}

/// Finds an entry by name, with or without brackets and spaces: `"[40,5,28]"`, `"40,5,28"`.
pub fn lookup(name: &str) -> Option<CatalogEntry> {
    let key: String = name
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '[' && *c != ']')
        .collect();
    catalog()
        .into_iter()
        .find(|e| e.name[1..e.name.len() - 1] == key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;

    #[test]
    fn catalog_contents() {
        let cat = catalog();
        assert_eq!(cat.len(), 26);
        assert_eq!(
            cat.iter()
                .filter(|e| matches!(e.source, Source::Table { .. }))
                .count(),
            22
        );
        let names: std::collections::HashSet<_> = cat.iter().map(|e| e.name.clone()).collect();
        assert_eq!(names.len(), cat.len(), "names are unique");
    }

    #[test]
    fn lookups() {
        let first = lookup("[100,10,62]").unwrap();
        assert!(first.code().is_none());
        assert_eq!(first.efficiency(), 0.2);
        assert!(lookup("40, 5, 28").unwrap().has_generator());
        assert!(lookup("[1,1,1]").is_none());
    }

    #[test]
    fn stored_weights_are_complete() {
        for name in ["[28,4,20]", "[31,4,22]"] {
            let e = lookup(name).unwrap();
            let w = e.weight_distribution().unwrap();
            assert_eq!(w.total(), 256);
            assert_eq!(w.min_distance(), Some(e.d));
        }
    }

    #[test]
    fn explicit_codes_match_parameters() {
        let budget = Budget::default();
        for name in ["[40,5,28]", "[39,4,28]"] {
            let e = lookup(name).unwrap();
            let code = e.code().unwrap().unwrap();
            assert_eq!((code.n(), code.k()), (e.n, e.k));
            assert!(code.minimum_distance(&budget).unwrap() >= e.d);
        }
    }
}
