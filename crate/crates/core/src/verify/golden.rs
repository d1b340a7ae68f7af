//! Published reference values, embedded verbatim and replayed through two
//! independent routes: the closed-form threshold family and brute-force
//! membership counting.

use std::time::Instant;

use serde::Serialize;

use super::{i, CheckResult, Tally};
use crate::coinproblem::{best_family_point, count_lattice_3var, count_representable_upto};
use crate::floorsum::{floor_sum_fast, floor_sum_naive, FloorSumQuery};
use crate::CoprimePair;

/// Published `(alpha, k, N0(29, 23; k))` rows for `alpha = 1, 3, ..., 27`.
pub const PUBLISHED_THRESHOLD_TABLE: [(u64, i64, u64); 14] = [
    (1, -1, 0),
    (3, 49, 4),
    (5, 101, 12),
    (7, 153, 24),
    (9, 205, 40),
    (11, 228, 48),
    (13, 280, 70),
    (15, 332, 96),
    (17, 384, 126),
    (19, 436, 160),
    (21, 459, 176),
    (23, 511, 216),
    (25, 563, 260),
    (27, 615, 308),
];

/// One row of the `(29, 23)` table, computed both ways next to the published
/// values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdRow {
    pub alpha: u64,
    pub beta: i64,
    /// Threshold from the closed form.
    pub k: i64,
    /// Count from the closed form.
    pub n0: u64,
    /// `N0(29, 23; k)` by counting representable integers up to `k`.
    pub n0_counted: u64,
    pub published_k: i64,
    pub published_n0: u64,
}

impl ThresholdRow {
    pub fn matches_published(&self) -> bool {
        self.k == self.published_k
            && self.n0 == self.published_n0
            && self.n0_counted == self.published_n0
    }
}

fn table_pair() -> CoprimePair {
    CoprimePair::new(29, 23).expect("29 and 23 are coprime")
}

pub fn threshold_table_rows() -> Vec<ThresholdRow> {
    let p = table_pair();
    PUBLISHED_THRESHOLD_TABLE
        .iter()
        .map(|&(alpha, published_k, published_n0)| {
            let point = best_family_point(p, alpha).expect("alpha is odd and below 29");
            ThresholdRow {
                alpha,
                beta: point.beta,
                k: point.k,
                n0: point.n0,
                n0_counted: count_representable_upto(p, point.k),
                published_k,
                published_n0,
            }
        })
        .collect()
}

/// Compares every published row with the closed form (`k` and `N0`) and with
/// brute-force counting at the published `k`.
pub fn reproduce_threshold_table() -> CheckResult {
    let start = Instant::now();
    let p = table_pair();
    let mut t = Tally::default();
    for row in threshold_table_rows() {
        let inputs = [("a", 29), ("b", 23), ("alpha", i(row.alpha))];
        t.check(&inputs, row.published_k, row.k);
        t.check(&inputs, row.published_n0, row.n0);
        t.check(&inputs, row.published_n0, count_representable_upto(p, row.published_k));
        t.check(&inputs, row.n0, row.n0_counted);
    }
    finish("threshold_table_29_23", t, start)
}

/// `S(29, 23, 8) = 24`, `S(23, 4, 18) = 21` and
/// `N0(29, 23; 257) = 15 + 24 + 21 = 60`.
pub fn reproduce_worked_example() -> CheckResult {
    let start = Instant::now();
    let p = table_pair();
    let mut t = Tally::default();
    for (a, b, d, published) in [(29u64, 23u64, 8u64, 24u128), (23, 4, 18, 21)] {
        let q = FloorSumQuery::new(a, b, d).expect("in range");
        let inputs = [("a", i(a)), ("b", i(b)), ("d", i(d))];
        t.check(&inputs, published, floor_sum_fast(q).value);
        t.check(&inputs, published, floor_sum_naive(q).value);
    }
    let inputs = [("a", 29), ("b", 23), ("k", 257)];
    let composed = 15 + 24 + 21;
    t.check(&inputs, 60u64, composed);
    t.check(&inputs, 60u64, count_representable_upto(p, 257));
    t.check(&inputs, 60u64, count_lattice_3var(p, 257));
    finish("worked_example_29_23_257", t, start)
}

fn finish(id: &str, mut t: Tally, start: Instant) -> CheckResult {
    t.failures.sort();
    CheckResult {
        check_id: id.to_string(),
        cases_run: t.cases,
        failures: t.failures,
        elapsed: start.elapsed(),
    }
}
