//! Grid sweeps that replay every identity of the toolkit against brute-force
//! oracles.
//!
//! A check never panics or returns early on a counterexample: each violated
//! case is recorded as a [`Failure`] with its full inputs, and the sweep keeps
//! going. Grid points are evaluated in parallel; failures are sorted by their
//! inputs afterwards, so identical [`GridSpec`]s give identical results
//! (apart from [`CheckResult::elapsed`]).

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::arith::gcd;
use crate::{Error, Result};

mod golden;
mod identities;
mod symbols;

pub use golden::{
    reproduce_threshold_table, reproduce_worked_example, threshold_table_rows, ThresholdRow,
    PUBLISHED_THRESHOLD_TABLE,
};
pub use identities::{
    check_coin_suite, check_equivalence_chain, check_floor_sum_fast_vs_naive,
    check_gauss_reciprocity, check_generalized_reciprocity, check_half_index_reciprocity,
    check_lemma_chain, check_sylvester_sums, check_uniqueness_below_period,
};
pub use symbols::{
    check_eisenstein_vs_definition, check_gauss_lemma, check_jacobi_reciprocity,
    check_jacobi_suite, check_parity_lemmas,
};

/// Parameter grid for a sweep: pairs `(a, b)` with `1 <= a <= a_max`,
/// `1 <= b <= b_max`, optionally restricted to odd or coprime pairs.
/// `seed` and `sample_count` drive the seeded large-parameter samples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub a_max: u64,
    pub b_max: u64,
    pub odd_only: bool,
    pub coprime_only: bool,
    pub seed: u64,
    pub sample_count: u64,
}

impl GridSpec {
    pub fn new(a_max: u64, b_max: u64) -> Result<Self> {
        for (name, value) in [("a_max", a_max), ("b_max", b_max)] {
            if !(2..=crate::MAX_INPUT).contains(&value) {
                return Err(Error::out_of_range(name, value, "between 2 and 2^31 - 1"));
            }
        }
        Ok(Self {
            a_max,
            b_max,
            ..Self::default()
        })
    }

    pub fn odd_only(mut self, odd_only: bool) -> Self {
        self.odd_only = odd_only;
        self
    }

    pub fn coprime_only(mut self, coprime_only: bool) -> Self {
        self.coprime_only = coprime_only;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn sample_count(mut self, sample_count: u64) -> Self {
        self.sample_count = sample_count;
        self
    }

    /// Grid pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        (1..=self.a_max)
            .flat_map(|a| (1..=self.b_max).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.odd_only || (a % 2 == 1 && b % 2 == 1))
            .filter(|&(a, b)| !self.coprime_only || gcd(a, b) == 1)
            .collect()
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            a_max: 60,
            b_max: 60,
            odd_only: false,
            coprime_only: true,
            seed: 0x5eed,
            sample_count: 200,
        }
    }
}

/// Named integer inputs of one case, in the order they were given.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inputs(pub Vec<(&'static str, i64)>);

impl Serialize for Inputs {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in &self.0 {
            map.serialize_entry(name, value)?;
        }
        map.end()
    }
}

impl fmt::Display for Inputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub inputs: Inputs,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Same result with the timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed: Duration::ZERO,
            ..self.clone()
        }
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(CheckResult::passed)
}

/// Which group of checks [`run_suite`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    /// Floor-sum reciprocity, representability and the threshold counts.
    Frobenius,
    Jacobi,
}

pub fn run_suite(suite: Suite, grid: &GridSpec) -> Vec<CheckResult> {
    let mut results = Vec::new();
    if matches!(suite, Suite::All | Suite::Frobenius) {
        results.extend(check_equivalence_chain(grid));
        results.extend(check_lemma_chain(grid));
        results.extend(check_coin_suite(grid));
        results.push(reproduce_threshold_table());
        results.push(reproduce_worked_example());
    }
    if matches!(suite, Suite::All | Suite::Jacobi) {
        results.extend(check_jacobi_suite(grid));
    }
    results
}

/// Per-worker accumulator of cases and failures.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    cases: u64,
    failures: Vec<Failure>,
}

impl Tally {
    pub(crate) fn check<T: PartialEq + fmt::Display>(
        &mut self,
        inputs: &[(&'static str, i64)],
        expected: T,
        actual: T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.fail(inputs, expected.to_string(), actual.to_string());
        }
    }

    /// Like [`Tally::check`], recording a rejected computation as a failure.
    pub(crate) fn check_ok<T: PartialEq + fmt::Display>(
        &mut self,
        inputs: &[(&'static str, i64)],
        expected: T,
        actual: Result<T>,
    ) {
        match actual {
            Ok(actual) => self.check(inputs, expected, actual),
            Err(e) => {
                self.cases += 1;
                self.fail(inputs, expected.to_string(), format!("error: {e}"));
            }
        }
    }

    pub(crate) fn check_bound(&mut self, inputs: &[(&'static str, i64)], value: u32, bound: u32) {
        self.cases += 1;
        if value > bound {
            self.fail(inputs, format!("<= {bound}"), value.to_string());
        }
    }

    fn fail(&mut self, inputs: &[(&'static str, i64)], expected: String, actual: String) {
        self.failures.push(Failure {
            inputs: Inputs(inputs.to_vec()),
            expected,
            actual,
        });
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs `check` over every item in parallel and folds the tallies.
pub(crate) fn sweep<T, F>(check_id: &str, items: &[T], check: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T, &mut Tally) + Sync,
{
    let start = Instant::now();
    let tally = items
        .par_iter()
        .map(|item| {
            let mut tally = Tally::default();
            check(item, &mut tally);
            tally
        })
        .reduce(Tally::default, Tally::merge);
    let mut failures = tally.failures;
    failures.sort();
    CheckResult {
        check_id: check_id.to_string(),
        cases_run: tally.cases,
        failures,
        elapsed: start.elapsed(),
    }
}

pub(crate) fn i(x: u64) -> i64 {
    x as i64
}
