use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{i, sweep, CheckResult, GridSpec, Tally};
use crate::arith::{gcd, is_prime};
use crate::coinproblem::{
    best_family, count_lattice_3var, count_representable_upto, half_range_threshold,
    is_representable, nonrepresentable_set, representation_count, representation_count_by_search,
    rep_count_shift_check, sylvester_square_sum, sylvester_sum, sylvester_sum_power,
};
use crate::floorsum::{
    floor_sum_fast_traced, floor_sum_naive, gauss_residual, reciprocity_residual, step_bound,
    strong_residual, FloorSumQuery,
};
use crate::CoprimePair;

/// Term-by-term `S(a, b, d)` as a signed value.
fn naive(a: u64, b: u64, d: u64) -> i128 {
    floor_sum_naive(FloorSumQuery::new(a, b, d).expect("grid inputs in range")).value as i128
}

fn pair(a: u64, b: u64) -> CoprimePair {
    CoprimePair::new(a, b).expect("grid pair is coprime")
}

fn coprime_pairs(grid: &GridSpec) -> Vec<(u64, u64)> {
    grid.pairs()
        .into_iter()
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect()
}

/// Coprime pairs with `b < a`, the ordering the threshold family needs.
fn ordered_pairs(grid: &GridSpec) -> Vec<(u64, u64)> {
    coprime_pairs(grid)
        .into_iter()
        .filter(|&(a, b)| b < a)
        .collect()
}

pub fn check_gauss_reciprocity(max: u64) -> CheckResult {
    let pairs: Vec<(u64, u64)> = (1..=max)
        .step_by(2)
        .flat_map(|p| (1..=max).step_by(2).map(move |q| (p, q)))
        .filter(|&(p, q)| p != q && gcd(p, q) == 1)
        .collect();
    gauss_reciprocity(&pairs)
}

fn gauss_reciprocity(pairs: &[(u64, u64)]) -> CheckResult {
    sweep("gauss_reciprocity", pairs, |&(p, q), t| {
        t.check_ok(&[("p", i(p)), ("q", i(q))], 0, gauss_residual(p, q));
    })
}

pub fn check_half_index_reciprocity(max: u64) -> CheckResult {
    let pairs: Vec<(u64, u64)> = (1..=max)
        .flat_map(|a| (1..=max).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    half_index_reciprocity(&pairs)
}

fn half_index_reciprocity(pairs: &[(u64, u64)]) -> CheckResult {
    sweep("half_index_reciprocity", pairs, |&(a, b), t| {
        t.check_ok(&[("a", i(a)), ("b", i(b))], 0, strong_residual(a, b));
    })
}

/// Every valid `(a, b, d)` with `a <= a_max`: `1 <= b < a`, `1 <= d < a`,
/// `gcd(a, b) = 1`.
pub fn check_generalized_reciprocity(a_max: u64) -> CheckResult {
    let pairs: Vec<(u64, u64)> = (2..=a_max)
        .flat_map(|a| (1..a).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    generalized_reciprocity("generalized_reciprocity", &pairs)
}

fn generalized_reciprocity(id: &str, pairs: &[(u64, u64)]) -> CheckResult {
    sweep(id, pairs, |&(a, b), t| {
        for d in 1..a {
            t.check_ok(
                &[("a", i(a)), ("b", i(b)), ("d", i(d))],
                0,
                reciprocity_residual(a, b, d),
            );
        }
    })
}

/// Fast floor sums against term-by-term prefix sums for every
/// `a <= a_max, b <= b_max, d <= d_max` (b and d from 0), with the step
/// counter held to [`step_bound`]; then `samples` seeded cases with `a, b` up
/// to `10^9` and `d` up to `10^5`.
pub fn check_floor_sum_fast_vs_naive(
    a_max: u64,
    b_max: u64,
    d_max: u64,
    samples: u64,
    seed: u64,
) -> CheckResult {
    let mut cases: Vec<(u64, u64, Option<u64>)> = (1..=a_max)
        .flat_map(|a| (0..=b_max).map(move |b| (a, b, None)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = rng.gen_range(1..=1_000_000_000);
        let b = rng.gen_range(0..=1_000_000_000);
        let d = rng.gen_range(0..=100_000);
        cases.push((a, b, Some(d)));
    }
    sweep("floor_sum_fast_vs_naive", &cases, |&(a, b, sampled), t| {
        let bound = step_bound(a, b);
        let compare = |d: u64, expected: u128, t: &mut Tally| {
            let (sum, trace) = floor_sum_fast_traced(FloorSumQuery::new(a, b, d).expect("in range"));
            let inputs = [("a", i(a)), ("b", i(b)), ("d", i(d))];
            t.check(&inputs, expected, sum.value);
            t.check_bound(&inputs, trace.steps, bound);
        };
        match sampled {
            Some(d) => {
                let expected = floor_sum_naive(FloorSumQuery::new(a, b, d).expect("in range")).value;
                compare(d, expected, t);
            }
            None => {
                let mut prefix = 0u128;
                for d in 0..=d_max {
                    prefix += (d as u128 * b as u128) / a as u128;
                    compare(d, prefix, t);
                }
            }
        }
    })
}

/// Gauss reciprocity, the half-index and generalised reciprocity identities,
/// the gap-count identities tying `N0` to the floor sums, Sylvester's count,
/// and fast-vs-naive floor sums.
pub fn check_equivalence_chain(grid: &GridSpec) -> Vec<CheckResult> {
    let coprime = coprime_pairs(grid);
    let odd_distinct: Vec<(u64, u64)> = coprime
        .iter()
        .copied()
        .filter(|&(a, b)| a % 2 == 1 && b % 2 == 1 && a != b)
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let mut sampled = Vec::new();
    while (sampled.len() as u64) < grid.sample_count {
        let a = rng.gen_range(3..=100_000u64);
        let b = rng.gen_range(1..a);
        if gcd(a, b) == 1 {
            sampled.push((a, b, rng.gen_range(1..a)));
        }
    }

    vec![
        gauss_reciprocity(&odd_distinct),
        half_index_reciprocity(&coprime),
        generalized_reciprocity("generalized_reciprocity", &ordered_pairs(grid)),
        sweep("generalized_reciprocity_sampled", &sampled, |&(a, b, d), t| {
            t.check_ok(
                &[("a", i(a)), ("b", i(b)), ("d", i(d))],
                0,
                reciprocity_residual(a, b, d),
            );
        }),
        sweep("gap_count_floor_identity", &coprime, |&(a, b), t| {
            let gaps = nonrepresentable_set(pair(a, b)).len() as i128;
            let (ha, hb) = ((a / 2) as i128, (b / 2) as i128);
            let (a_, b_) = (a as i128, b as i128);
            let lhs = gaps + 2 * (naive(a, b, a / 2) + naive(b, a, b / 2));
            t.check(&[("a", i(a)), ("b", i(b))], (a_ - 1) * hb + (b_ - 1) * ha, lhs);
        }),
        sweep("parity_case_identity", &coprime, |&(a, b), t| {
            let (ha, hb) = ((a / 2) as i128, (b / 2) as i128);
            let (a_, b_) = (a as i128, b as i128);
            t.check(
                &[("a", i(a)), ("b", i(b))],
                (a_ - 1) * (b_ - 1) / 2 + 2 * ha * hb,
                (a_ - 1) * hb + (b_ - 1) * ha,
            );
        }),
        sweep("sylvester_gap_count", &coprime, |&(a, b), t| {
            let count = nonrepresentable_set(pair(a, b)).len() as u64;
            t.check(&[("a", i(a)), ("b", i(b))], (a - 1) * (b - 1) / 2, count);
        }),
        sweep(
            "sylvester_gap_count_primes",
            &odd_distinct
                .iter()
                .copied()
                .filter(|&(p, q)| is_prime(p) && is_prime(q))
                .collect::<Vec<_>>(),
            |&(p, q), t| {
                let count = nonrepresentable_set(pair(p, q)).len() as u64;
                t.check(&[("p", i(p)), ("q", i(q))], (p - 1) * (q - 1) / 2, count);
            },
        ),
        check_floor_sum_fast_vs_naive(
            grid.a_max,
            grid.b_max,
            grid.a_max.max(grid.b_max),
            grid.sample_count,
            grid.seed,
        ),
    ]
}

/// The three-variable lattice counts and the threshold counts built on them,
/// each compared with `count_lattice_3var` or `count_representable_upto`.
pub fn check_lemma_chain(grid: &GridSpec) -> Vec<CheckResult> {
    let coprime = coprime_pairs(grid);
    let ordered = ordered_pairs(grid);

    vec![
        sweep("half_lattice_count", &coprime, |&(a, b), t| {
            let total = b * (a / 2);
            let expected = (a / 2) as i128 + 1 + naive(a, b, a / 2);
            t.check(
                &[("a", i(a)), ("b", i(b)), ("N", i(total))],
                expected,
                count_lattice_3var(pair(a, b), total) as i128,
            );
        }),
        sweep("gap_lattice_count", &coprime, |&(a, b), t| {
            let total = a * (b / 2) + b * (a / 2);
            let gaps = nonrepresentable_set(pair(a, b)).len() as i128;
            t.check(
                &[("a", i(a)), ("b", i(b)), ("N", i(total))],
                total as i128 + 1 - gaps,
                count_lattice_3var(pair(a, b), total) as i128,
            );
        }),
        sweep("floor_lattice_count", &coprime, |&(a, b), t| {
            let total = a * (b / 2) + b * (a / 2);
            let expected = 2 * (naive(a, b, a / 2) + naive(b, a, b / 2))
                + (a / 2) as i128
                + (b / 2) as i128
                + 1;
            t.check(
                &[("a", i(a)), ("b", i(b)), ("N", i(total))],
                expected,
                count_lattice_3var(pair(a, b), total) as i128,
            );
        }),
        sweep("shifted_threshold_lattice_count", &ordered, |&(a, b), t| {
            let p = pair(a, b);
            let sylvester = ((a - 1) * (b - 1) / 2) as i128;
            for d in (a / 2 + 1)..a {
                let k = b * d / a;
                if k == 0 {
                    continue;
                }
                let total = b * d + a * k;
                let n0 = count_representable_upto(p, total as i64 - (a * b) as i64) as i128;
                t.check(
                    &[("a", i(a)), ("b", i(b)), ("d", i(d))],
                    total as i128 + 1 - sylvester + n0,
                    count_lattice_3var(p, total) as i128,
                );
            }
        }),
        sweep("generalized_lattice_count", &ordered, |&(a, b), t| {
            let p = pair(a, b);
            for d in 1..a {
                let k = b * d / a;
                if k == 0 {
                    continue;
                }
                let expected = 2 * (naive(a, b, d) + naive(b, a, k)) + d as i128 + k as i128 + 1;
                t.check(
                    &[("a", i(a)), ("b", i(b)), ("d", i(d))],
                    expected,
                    count_lattice_3var(p, b * d + a * k) as i128,
                );
            }
        }),
        sweep("threshold_floor_identity", &ordered, |&(a, b), t| {
            let p = pair(a, b);
            let (a_, b_) = (a as i128, b as i128);
            for d in (a / 2 + 1)..a {
                let k = b * d / a;
                if k == 0 {
                    continue;
                }
                let (d_, k_) = (d as i128, k as i128);
                let expected = 2 * (naive(a, b, d) + naive(b, a, k) - d_ * k_)
                    + (2 * d_ - a_ + 1) * (2 * k_ - b_ + 1) / 2;
                let threshold = (b * d + a * k) as i64 - (a * b) as i64;
                t.check(
                    &[("a", i(a)), ("b", i(b)), ("d", i(d))],
                    expected,
                    count_representable_upto(p, threshold) as i128,
                );
            }
        }),
        sweep("threshold_closed_form", &ordered, |&(a, b), t| {
            let p = pair(a, b);
            for d in (a / 2 + 1)..a {
                let inputs = [("a", i(a)), ("b", i(b)), ("d", i(d))];
                match half_range_threshold(p, d) {
                    Ok((k, n0)) => t.check(&inputs, count_representable_upto(p, k), n0),
                    Err(e) => t.check(&inputs, "ok".to_string(), format!("error: {e}")),
                }
            }
        }),
        sweep("best_family", &ordered, |&(a, b), t| {
            let p = pair(a, b);
            for point in best_family(p).expect("ordered pair") {
                let inputs = [("a", i(a)), ("b", i(b)), ("alpha", i(point.alpha))];
                t.check(&inputs, count_representable_upto(p, point.k), point.n0);
                t.check(&inputs, true, point.beta >= -1);
            }
        }),
    ]
}

/// `representation_count(n) <= 1` for every `n < ab`, cross-checked with the
/// double-loop search.
pub fn check_uniqueness_below_period(max: u64) -> CheckResult {
    let pairs: Vec<(u64, u64)> = (1..=max)
        .flat_map(|a| (1..=max).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    uniqueness_below_period(&pairs)
}

fn uniqueness_below_period(pairs: &[(u64, u64)]) -> CheckResult {
    sweep("uniqueness_below_period", pairs, |&(a, b), t| {
        let p = pair(a, b);
        for n in 0..a * b {
            let count = representation_count(p, n).count;
            let inputs = [("a", i(a)), ("b", i(b)), ("n", i(n))];
            t.check(&inputs, true, count <= 1);
            t.check(&inputs, representation_count_by_search(p, n), count);
        }
    })
}

/// Closed-form gap count, gap sum and squared-gap sum against enumeration, for
/// coprime `2 <= a, b <= max`.
pub fn check_sylvester_sums(max: u64) -> Vec<CheckResult> {
    let pairs: Vec<(u64, u64)> = (2..=max)
        .flat_map(|a| (2..=max).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    sylvester_sums(&pairs)
}

fn sylvester_sums(pairs: &[(u64, u64)]) -> Vec<CheckResult> {
    vec![
        sweep("sylvester_gap_count", pairs, |&(a, b), t| {
            let count = nonrepresentable_set(pair(a, b)).len() as u64;
            t.check(&[("a", i(a)), ("b", i(b))], (a - 1) * (b - 1) / 2, count);
        }),
        sweep("sylvester_sum_closed_form", pairs, |&(a, b), t| {
            let enumerated: u128 = nonrepresentable_set(pair(a, b)).gaps.iter().map(|&g| g as u128).sum();
            t.check(
                &[("a", i(a)), ("b", i(b))],
                sylvester_sum(pair(a, b)),
                enumerated.into(),
            );
        }),
        sweep("sylvester_square_sum_closed_form", pairs, |&(a, b), t| {
            t.check(
                &[("a", i(a)), ("b", i(b))],
                sylvester_square_sum(pair(a, b)),
                sylvester_sum_power(pair(a, b), 2),
            );
        }),
    ]
}

/// Representability against exhaustive search, threshold counts, the
/// denumerant shift, uniqueness below `ab`, the lattice bridge, the Sylvester
/// sums and gap symmetry.
pub fn check_coin_suite(grid: &GridSpec) -> Vec<CheckResult> {
    let coprime = coprime_pairs(grid);
    let at_least_two: Vec<(u64, u64)> = coprime
        .iter()
        .copied()
        .filter(|&(a, b)| a >= 2 && b >= 2)
        .collect();

    let mut results = vec![
        sweep("representation_count_vs_search", &coprime, |&(a, b), t| {
            let p = pair(a, b);
            for n in 0..=a * b {
                let search = representation_count_by_search(p, n);
                let inputs = [("a", i(a)), ("b", i(b)), ("n", i(n))];
                t.check(&inputs, search, representation_count(p, n).count);
                t.check(&inputs, search > 0, is_representable(p, n));
            }
        }),
        sweep("threshold_count_vs_search", &coprime, |&(a, b), t| {
            let p = pair(a, b);
            let top = a * b;
            // every k on small pairs, about 64 evenly spaced k otherwise
            let stride = (top / 64).max(1);
            let mut running = 0u64;
            t.check(&[("a", i(a)), ("b", i(b)), ("k", -1)], 0, count_representable_upto(p, -1));
            for k in 0..=top {
                if representation_count_by_search(p, k) > 0 {
                    running += 1;
                }
                if k % stride == 0 || k == top {
                    t.check(
                        &[("a", i(a)), ("b", i(b)), ("k", i(k))],
                        running,
                        count_representable_upto(p, k as i64),
                    );
                }
            }
        }),
        uniqueness_below_period(&coprime),
        sweep("denumerant_shift", &coprime, |&(a, b), t| {
            let p = pair(a, b);
            for n in 0..=2 * a * b {
                t.check(&[("a", i(a)), ("b", i(b)), ("n", i(n))], true, rep_count_shift_check(p, n));
            }
        }),
        sweep("lattice_uniqueness_bridge", &coprime, |&(a, b), t| {
            let p = pair(a, b);
            let (mut with_multiplicity, mut distinct) = (0u64, 0u64);
            for k in 0..a * b {
                let count = representation_count(p, k).count;
                with_multiplicity += count;
                distinct += u64::from(count >= 1);
                let lattice = count_lattice_3var(p, k);
                let inputs = [("a", i(a)), ("b", i(b)), ("k", i(k))];
                t.check(&inputs, with_multiplicity, lattice);
                t.check(&inputs, distinct, lattice);
            }
        }),
        sweep("gap_symmetry", &at_least_two, |&(a, b), t| {
            let set = nonrepresentable_set(pair(a, b));
            let f = a * b - a - b;
            t.check(&[("a", i(a)), ("b", i(b))], f as i64, set.max().map_or(-1, |m| m as i64));
            for n in 0..=f {
                t.check(
                    &[("a", i(a)), ("b", i(b)), ("n", i(n))],
                    !set.contains(f - n),
                    set.contains(n),
                );
            }
        }),
    ];
    // the gap count itself is already part of the equivalence chain
    results.extend(sylvester_sums(&at_least_two).into_iter().skip(1));
    results
}
