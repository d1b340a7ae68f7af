use super::{i, sweep, CheckResult, GridSpec};
use crate::arith::{gcd, is_prime};
use crate::jacobi::{
    composite_modulus_residual, folded_residue_residual, gauss_lemma_count, jacobi_by_definition,
    jacobi_eisenstein, jacobi_reciprocity_check, legendre_euler, product_multiplier_residual,
    SymbolValue,
};

fn odds(max: u64) -> impl Iterator<Item = u64> + Clone {
    (1..=max).step_by(2)
}

/// Floor-sum symbol against the factorisation oracle, for every odd `b <= b_max`
/// and odd `a < 2b` coprime to it. Also checks periodicity in `a` with period `2b`.
pub fn check_eisenstein_vs_definition(b_max: u64) -> Vec<CheckResult> {
    let pairs: Vec<(u64, u64)> = odds(b_max)
        .flat_map(|b| (1..2 * b).step_by(2).map(move |a| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    vec![
        sweep("eisenstein_vs_definition", &pairs, |&(a, b), t| {
            t.check_ok(
                &[("a", i(a)), ("b", i(b))],
                jacobi_by_definition(a as i64, b).expect("odd modulus"),
                jacobi_eisenstein(a, b),
            );
        }),
        sweep("eisenstein_periodicity", &pairs, |&(a, b), t| {
            t.check_ok(
                &[("a", i(a)), ("b", i(b))],
                jacobi_eisenstein(a, b).expect("odd coprime"),
                jacobi_eisenstein(a + 2 * b, b),
            );
        }),
    ]
}

/// The two parity congruences and the folding step, over odd `a <= a_max` and
/// odd `b, c <= bc_max` coprime to `a`.
pub fn check_parity_lemmas(a_max: u64, bc_max: u64) -> Vec<CheckResult> {
    let triples: Vec<(u64, u64, u64)> = odds(a_max)
        .flat_map(|a| odds(bc_max).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .flat_map(|(a, b)| odds(bc_max).map(move |c| (a, b, c)))
        .filter(|&(a, _, c)| gcd(a, c) == 1)
        .collect();
    let inputs = |a, b, c| [("a", i(a)), ("b", i(b)), ("c", i(c))];
    vec![
        sweep("composite_modulus_parity", &triples, |&(a, b, c), t| {
            t.check_ok(&inputs(a, b, c), 0, composite_modulus_residual(a, b, c));
        }),
        sweep("product_multiplier_parity", &triples, |&(a, b, c), t| {
            t.check_ok(&inputs(a, b, c), 0, product_multiplier_residual(a, b, c));
        }),
        sweep("folded_residue_parity", &triples, |&(a, b, c), t| {
            t.check_ok(&inputs(a, b, c), 0, folded_residue_residual(a, b, c));
        }),
    ]
}

pub fn check_jacobi_reciprocity(a_max: u64, b_max: u64) -> CheckResult {
    let pairs: Vec<(u64, u64)> = odds(a_max)
        .flat_map(|a| odds(b_max).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect();
    sweep("jacobi_reciprocity", &pairs, |&(a, b), t| {
        t.check_ok(&[("a", i(a)), ("b", i(b))], true, jacobi_reciprocity_check(a, b));
    })
}

/// `(-1)^n = (a/p)` with `n` Gauss' residue count, for odd primes `p <= p_max`
/// and `1 <= a < p`.
pub fn check_gauss_lemma(p_max: u64) -> CheckResult {
    let cases: Vec<(u64, u64)> = (3..=p_max)
        .filter(|&p| is_prime(p))
        .flat_map(|p| (1..p).map(move |a| (a, p)))
        .collect();
    sweep("gauss_lemma", &cases, |&(a, p), t| {
        t.check_ok(
            &[("a", i(a)), ("p", i(p))],
            legendre_euler(a as i64, p).expect("odd prime"),
            gauss_lemma_count(a, p).map(|n| SymbolValue::from_parity(n as u128)),
        );
    })
}

/// Symbol-level multiplicativity in the numerator, by the definition oracle.
fn check_numerator_multiplicativity(b_max: u64) -> CheckResult {
    let cases: Vec<(u64, u64, u64)> = odds(b_max)
        .flat_map(|b| odds(15).flat_map(move |x| odds(15).map(move |y| (b, x, y))))
        .collect();
    sweep("numerator_multiplicativity", &cases, |&(b, x, y), t| {
        let symbol = |a: u64| jacobi_by_definition(a as i64, b).expect("odd modulus");
        t.check(
            &[("b", i(b)), ("x", i(x)), ("y", i(y))],
            symbol(x) * symbol(y),
            symbol(x * y),
        );
    })
}

/// Jacobi checks on the grid: odd `b <= b_max` for the symbol comparisons,
/// odd `a <= a_max` with odd `b, c <= b_max` for the parity congruences, odd
/// coprime pairs for reciprocity, and primes up to `max(a_max, b_max)` for
/// Gauss' Lemma.
pub fn check_jacobi_suite(grid: &GridSpec) -> Vec<CheckResult> {
    let mut results = check_eisenstein_vs_definition(grid.b_max);
    results.extend(check_parity_lemmas(grid.a_max, grid.b_max));
    results.push(check_jacobi_reciprocity(grid.a_max, grid.b_max));
    results.push(check_gauss_lemma(grid.a_max.max(grid.b_max)));
    results.push(check_numerator_multiplicativity(grid.b_max));
    results
}
