//! Representability of integers as `a*x + b*y` with `x, y >= 0`.
//!
//! Everything here is parameterised by a [`CoprimePair`]. Counting conventions:
//!
//! - `N(a, b; n)` ([`representation_count`]) counts pairs `(x, y)`;
//! - `N0(a, b; k)` ([`count_representable_upto`]) counts representable
//!   integers in `[0, k]`, zero included, and is 0 for negative `k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::arith::{gcd, mod_inverse};
use crate::{CoprimePair, Error, Result};

/// Number of nonnegative solutions `(x, y)` of `a*x + b*y = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepCount {
    pub n: u64,
    pub count: u64,
}

/// All nonrepresentable nonnegative integers of a pair, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonRepSet {
    pub pair: CoprimePair,
    pub gaps: Vec<u64>,
}

impl NonRepSet {
    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }
}

/// One member of the closed-form threshold family parameterised by `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BestFamilyPoint {
    pub alpha: u64,
    pub beta: i64,
    /// Threshold `(b*alpha + a*beta) / 2`; negative only when `beta = -1`.
    pub k: i64,
    /// `N0(a, b; k) = (alpha + 1)(beta + 1) / 2`.
    pub n0: u64,
}

/// Reduced exact rational. Displays as `p/q`, or `p` when `q = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let denominator = denominator.into();
        if denominator.is_zero() {
            return Err(Error::Precondition("rational with zero denominator".into()));
        }
        Ok(Self(BigRational::new(numerator.into(), denominator)))
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("'{s}' is not a rational of the form p or p/q"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        Self::new(num, den)
    }
}

/// `a*b - a - b`; negative when either coin is 1.
pub fn frobenius_number(p: CoprimePair) -> i64 {
    let (a, b) = (p.a() as i64, p.b() as i64);
    a * b - a - b
}

/// Smallest `x >= 0` with `a*x ≡ n (mod b)`.
fn least_x(p: CoprimePair, n: u64) -> u64 {
    let inv = mod_inverse(p.a(), p.b()).expect("pair is coprime");
    ((n % p.b()) as u128 * inv as u128 % p.b() as u128) as u64
}

/// Constant-time membership test via the least admissible `x`.
pub fn is_representable(p: CoprimePair, n: u64) -> bool {
    p.a() as u128 * least_x(p, n) as u128 <= n as u128
}

pub fn representation_count(p: CoprimePair, n: u64) -> RepCount {
    let used = p.a() as u128 * least_x(p, n) as u128;
    let count = if used <= n as u128 {
        ((n as u128 - used) / (p.a() as u128 * p.b() as u128) + 1) as u64
    } else {
        0
    };
    RepCount { n, count }
}

/// Checks `N(a, b; n + ab) = N(a, b; n) + 1`.
pub fn rep_count_shift_check(p: CoprimePair, n: u64) -> bool {
    let period = p.a() * p.b();
    representation_count(p, n + period).count == representation_count(p, n).count + 1
}

/// `N0(a, b; k)`, by testing every `n` in `[0, k]`.
pub fn count_representable_upto(p: CoprimePair, k: i64) -> u64 {
    if k < 0 {
        return 0;
    }
    (0..=k as u64).filter(|&n| is_representable(p, n)).count() as u64
}

/// Number of `(x, y, z) >= 0` with `a*x + b*y + z = total`.
pub fn count_lattice_3var(p: CoprimePair, total: u64) -> u64 {
    let (a, b) = (p.a(), p.b());
    (0..=total / a).map(|x| (total - a * x) / b + 1).sum()
}

fn require_b_below_a(p: CoprimePair) -> Result<()> {
    if p.b() >= p.a() {
        return Err(Error::Precondition(format!(
            "need b < a, got a = {}, b = {}",
            p.a(),
            p.b()
        )));
    }
    Ok(())
}

/// The closed-form threshold family: for `0 < alpha < a` with
/// `alpha ≡ a (mod 2)` and `beta = 2*floor(b(alpha + a) / 2a) - b`,
/// `N0(a, b; (b*alpha + a*beta)/2) = (alpha + 1)(beta + 1)/2`.
pub fn best_family_point(p: CoprimePair, alpha: u64) -> Result<BestFamilyPoint> {
    require_b_below_a(p)?;
    let (a, b) = (p.a() as i64, p.b() as i64);
    if alpha == 0 || alpha as i64 >= a {
        return Err(Error::out_of_range("alpha", alpha, format!("0 < alpha < {a}")));
    }
    if (alpha as i64 - a) % 2 != 0 {
        return Err(Error::Precondition(format!(
            "alpha = {alpha} must have the same parity as a = {a}"
        )));
    }
    let alpha_i = alpha as i64;
    let beta = 2 * ((b * (alpha_i + a)) / (2 * a)) - b;
    debug_assert!(beta >= -1);
    let k = (b * alpha_i + a * beta) / 2;
    let n0 = ((alpha_i + 1) * (beta + 1) / 2) as u64;
    Ok(BestFamilyPoint {
        alpha,
        beta,
        k,
        n0,
    })
}

/// Every member of the family for this pair, in increasing `alpha`.
pub fn best_family(p: CoprimePair) -> Result<Vec<BestFamilyPoint>> {
    require_b_below_a(p)?;
    let start = if p.a() % 2 == 0 { 2 } else { 1 };
    (start..p.a())
        .step_by(2)
        .map(|alpha| best_family_point(p, alpha))
        .collect()
}

/// For `a/2 < d < a` and `K = floor(b*d / a)`, returns the threshold
/// `k = b*d + a*K - a*b` and `N0(a, b; k) = (2d - a + 1)(2K - b + 1)/2`.
///
/// This is [`best_family_point`] indexed by `d = (alpha + a)/2`.
pub fn half_range_threshold(p: CoprimePair, d: u64) -> Result<(i64, u64)> {
    require_b_below_a(p)?;
    let (a, b) = (p.a() as i64, p.b() as i64);
    let d_i = d as i64;
    if 2 * d_i <= a || d_i >= a {
        return Err(Error::out_of_range("d", d, format!("{a}/2 < d < {a}")));
    }
    let big_k = b * d_i / a;
    let k = b * d_i + a * big_k - a * b;
    let n0 = (2 * d_i - a + 1) * (2 * big_k - b + 1) / 2;
    Ok((k, n0 as u64))
}

pub fn nonrepresentable_set(p: CoprimePair) -> NonRepSet {
    let frobenius = frobenius_number(p);
    let gaps = if frobenius < 0 {
        Vec::new()
    } else {
        (0..=frobenius as u64)
            .filter(|&n| !is_representable(p, n))
            .collect()
    };
    NonRepSet { pair: p, gaps }
}

/// Closed form of the gap count, `(a-1)(b-1)/2`.
pub fn gap_count(p: CoprimePair) -> u64 {
    (p.a() - 1) * (p.b() - 1) / 2
}

/// Sum of the gaps, closed form `(a-1)(b-1)(2ab - a - b - 1)/12`.
pub fn sylvester_sum(p: CoprimePair) -> BigUint {
    let (a, b) = (BigUint::from(p.a()), BigUint::from(p.b()));
    let one = BigUint::one();
    let two = BigUint::from(2u8);
    let factor = &two * &a * &b - &a - &b - &one;
    (&a - &one) * (&b - &one) * factor / BigUint::from(12u8)
}

/// Sum of squared gaps, closed form `(a-1)(b-1)ab(ab - a - b)/12`.
/// Zero when either coin is 1.
pub fn sylvester_square_sum(p: CoprimePair) -> BigUint {
    if p.a() == 1 || p.b() == 1 {
        return BigUint::zero();
    }
    let (a, b) = (BigUint::from(p.a()), BigUint::from(p.b()));
    let one = BigUint::one();
    let ab = &a * &b;
    (&a - &one) * (&b - &one) * &ab * (&ab - &a - &b) / BigUint::from(12u8)
}

/// `S_m(a, b) = sum of n^m over the gaps`, by enumeration.
pub fn sylvester_sum_power(p: CoprimePair, m: u32) -> BigUint {
    nonrepresentable_set(p)
        .gaps
        .iter()
        .map(|&n| Pow::pow(BigUint::from(n), m))
        .sum()
}

/// `sum of lambda^(n-1) * n^m over the gaps`, exactly, by enumeration.
pub fn weighted_sylvester_sum(
    p: CoprimePair,
    lambda: &ExactRational,
    m: u32,
) -> Result<ExactRational> {
    if lambda.is_zero() {
        return Err(Error::Precondition("lambda must be nonzero".into()));
    }
    let lambda = lambda.as_ratio();
    let mut total = BigRational::zero();
    // lambda^(n - 1), advanced gap to gap; 0 is never a gap so n >= 1
    let mut weight = BigRational::one();
    let mut exponent = 0u64;
    for &n in &nonrepresentable_set(p).gaps {
        let step = n - 1 - exponent;
        weight *= num_traits::pow(lambda.clone(), step as usize);
        exponent = n - 1;
        let term = BigRational::from_integer(Pow::pow(BigInt::from(n), m));
        total += &weight * term;
    }
    Ok(ExactRational(total))
}

/// Brute-force double-loop denumerant; the oracle for [`representation_count`].
pub fn representation_count_by_search(p: CoprimePair, n: u64) -> u64 {
    let (a, b) = (p.a(), p.b());
    (0..=n / a).filter(|&x| (n - a * x) % b == 0).count() as u64
}

/// True when `(a, b)` satisfies the preconditions of [`best_family_point`].
pub fn admits_family(a: u64, b: u64) -> bool {
    b >= 1 && b < a && gcd(a, b) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(a: u64, b: u64) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    fn coprime_pairs(max: u64) -> impl Iterator<Item = CoprimePair> {
        (1..=max).flat_map(move |a| (1..=max).filter_map(move |b| CoprimePair::new(a, b).ok()))
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_number(pair(29, 23)), 615);
        assert_eq!(frobenius_number(pair(1, 1)), -1);
        assert_eq!(frobenius_number(pair(2, 3)), 1);
    }

    #[test]
    fn representability_examples() {
        let p = pair(29, 23);
        assert!(!is_representable(p, 49));
        assert!(is_representable(p, 0));
        assert!(is_representable(p, 616));
        assert!(!is_representable(p, 615));
        let below_50: Vec<u64> = (0..=49).filter(|&n| is_representable(p, n)).collect();
        assert_eq!(below_50, vec![0, 23, 29, 46]);
        assert!((0..100).all(|n| is_representable(pair(1, 7), n)));
        assert!((0..100).all(|n| is_representable(pair(7, 1), n)));
    }

    #[test]
    fn representation_count_examples() {
        assert_eq!(representation_count(pair(29, 23), 667).count, 2);
        assert_eq!(representation_count(pair(29, 23), 1).count, 0);
        assert_eq!(representation_count(pair(2, 3), 6).count, 2);
        assert_eq!(representation_count(pair(1, 1), 5).count, 6);
    }

    #[test]
    fn shift_examples() {
        assert!(rep_count_shift_check(pair(29, 23), 0));
        assert!(rep_count_shift_check(pair(2, 3), 1));
        assert!(rep_count_shift_check(pair(5, 7), 23));
    }

    #[test]
    fn threshold_count_examples() {
        let p = pair(29, 23);
        assert_eq!(count_representable_upto(p, 257), 60);
        assert_eq!(count_representable_upto(p, -1), 0);
        assert_eq!(count_representable_upto(p, 615), 308);
        assert_eq!(count_representable_upto(p, i64::MIN), 0);
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(count_lattice_3var(pair(29, 23), 0), 1);
        assert_eq!(count_lattice_3var(pair(2, 3), 6), 7);
        // brute-force golden value; equals N0(29, 23; 257) since 257 < 29 * 23
        assert_eq!(count_lattice_3var(pair(29, 23), 257), 60);
    }

    #[test]
    fn family_examples() {
        let p = pair(29, 23);
        let top = best_family_point(p, 27).unwrap();
        assert_eq!((top.beta, top.k, top.n0), (21, 615, 308));
        let bottom = best_family_point(p, 1).unwrap();
        assert_eq!((bottom.beta, bottom.n0), (-1, 0));
        assert_eq!(bottom.k, -3);
        let mid = best_family_point(p, 11).unwrap();
        assert_eq!((mid.beta, mid.k, mid.n0), (7, 228, 48));
        assert_eq!(best_family(p).unwrap().len(), 14);
    }

    #[test]
    fn family_preconditions() {
        let p = pair(29, 23);
        assert!(best_family_point(p, 2).is_err());
        assert!(best_family_point(p, 0).is_err());
        assert!(best_family_point(p, 29).is_err());
        assert!(best_family_point(pair(23, 29), 3).is_err());
        assert!(half_range_threshold(p, 14).is_err());
        assert!(half_range_threshold(p, 29).is_err());
    }

    #[test]
    fn half_range_examples() {
        let p = pair(29, 23);
        assert_eq!(half_range_threshold(p, 28).unwrap(), (615, 308));
        let low = best_family_point(p, 1).unwrap();
        assert_eq!(half_range_threshold(p, 15).unwrap(), (low.k, low.n0));
        let (k, n0) = half_range_threshold(p, 20).unwrap();
        assert_eq!((k, n0), (228, 48));
        assert_eq!(n0, count_representable_upto(p, k));
    }

    #[test]
    fn gap_set_examples() {
        assert_eq!(nonrepresentable_set(pair(2, 3)).gaps, vec![1]);
        assert_eq!(nonrepresentable_set(pair(3, 5)).gaps, vec![1, 2, 4, 7]);
        let big = nonrepresentable_set(pair(29, 23));
        assert_eq!(big.len(), 308);
        assert_eq!(big.max(), Some(615));
        assert!(nonrepresentable_set(pair(1, 9)).is_empty());
        assert!(nonrepresentable_set(pair(1, 1)).is_empty());
    }

    #[test]
    fn sylvester_sum_examples() {
        assert_eq!(sylvester_sum(pair(2, 3)), BigUint::from(1u8));
        assert_eq!(sylvester_sum(pair(3, 5)), BigUint::from(14u8));
        let gaps: u64 = nonrepresentable_set(pair(29, 23)).gaps.iter().sum();
        assert_eq!(sylvester_sum(pair(29, 23)), BigUint::from(gaps));
        assert_eq!(sylvester_sum(pair(1, 5)), BigUint::zero());
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(sylvester_sum_power(pair(3, 5), 2), BigUint::from(70u8));
        assert_eq!(sylvester_sum_power(pair(2, 3), 0), BigUint::one());
        let expected = BigUint::from(28u64 * 22 * 667 * 615 / 12);
        assert_eq!(sylvester_sum_power(pair(29, 23), 2), expected);
        assert_eq!(sylvester_square_sum(pair(29, 23)), expected);
        assert_eq!(sylvester_sum_power(pair(1, 4), 3), BigUint::zero());
    }

    #[test]
    fn weighted_sum_examples() {
        let one = ExactRational::integer(1);
        assert_eq!(
            weighted_sylvester_sum(pair(3, 5), &one, 1).unwrap(),
            ExactRational::integer(14)
        );
        assert_eq!(
            weighted_sylvester_sum(pair(2, 3), &ExactRational::integer(2), 0).unwrap(),
            ExactRational::integer(1)
        );
        let half = ExactRational::new(1, 2).unwrap();
        let got = weighted_sylvester_sum(pair(3, 5), &half, 0).unwrap();
        // 1 + 1/2 + 1/8 + 1/64
        assert_eq!(got, ExactRational::new(64 + 32 + 8 + 1, 64).unwrap());
        assert_eq!(got.to_string(), "105/64");
        assert!(weighted_sylvester_sum(pair(3, 5), &ExactRational::integer(0), 1).is_err());
    }

    #[test]
    fn weighted_sum_with_unit_weight_is_power_sum() {
        let one = ExactRational::integer(1);
        for p in coprime_pairs(25) {
            for m in 0..4 {
                let weighted = weighted_sylvester_sum(p, &one, m).unwrap();
                let plain = BigInt::from(sylvester_sum_power(p, m));
                assert_eq!(weighted, ExactRational::integer(plain), "{p:?} m = {m}");
            }
        }
    }

    #[test]
    fn rational_parsing() {
        assert_eq!("3/6".parse::<ExactRational>().unwrap(), ExactRational::new(1, 2).unwrap());
        assert_eq!("-4".parse::<ExactRational>().unwrap(), ExactRational::integer(-4));
        assert_eq!("2/-4".parse::<ExactRational>().unwrap().to_string(), "-1/2");
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("x".parse::<ExactRational>().is_err());
    }

    #[test]
    fn membership_and_counts_match_search() {
        for p in coprime_pairs(60) {
            let ab = p.a() * p.b();
            // the threshold count is O(k) itself; compare it at every k only on small pairs
            let stride = if p.a().max(p.b()) <= 20 { 1 } else { 97 };
            let mut running = 0;
            for n in 0..=ab {
                let search = representation_count_by_search(p, n);
                assert_eq!(representation_count(p, n).count, search, "{p:?} n = {n}");
                assert_eq!(is_representable(p, n), search > 0);
                if search > 0 {
                    running += 1;
                }
                if n % stride == 0 || n == ab {
                    assert_eq!(count_representable_upto(p, n as i64), running);
                }
                if n < ab {
                    assert!(search <= 1);
                }
            }
        }
    }

    #[test]
    fn family_matches_threshold_count() {
        for a in 2..=80u64 {
            for b in (1..a).filter(|&b| gcd(a, b) == 1) {
                let p = pair(a, b);
                for point in best_family(p).unwrap() {
                    assert!(point.beta >= -1);
                    assert_eq!(point.n0, count_representable_upto(p, point.k), "{p:?} {point:?}");
                }
            }
        }
    }

    #[test]
    fn gap_structure() {
        for p in coprime_pairs(40) {
            let set = nonrepresentable_set(p);
            assert_eq!(set.len() as u64, gap_count(p));
            let f = frobenius_number(p);
            if p.a() >= 2 && p.b() >= 2 {
                assert_eq!(set.max(), Some(f as u64));
                for n in 0..=f as u64 {
                    assert_ne!(set.contains(n), set.contains(f as u64 - n), "{p:?} n = {n}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn shift_adds_one_representation(a in 1u64..=40, b in 1u64..=40, n in 0u64..=3200) {
            prop_assume!(gcd(a, b) == 1);
            prop_assert!(rep_count_shift_check(pair(a, b), n));
        }

        #[test]
        fn lattice_count_accumulates_denumerants(a in 1u64..=30, b in 1u64..=30, seed in 0u64..=10_000) {
            prop_assume!(gcd(a, b) == 1);
            let p = pair(a, b);
            let total = seed % (a * b);
            let by_denumerant: u64 = (0..=total).map(|n| representation_count(p, n).count).sum();
            prop_assert_eq!(count_lattice_3var(p, total), by_denumerant);
            prop_assert_eq!(count_lattice_3var(p, total), count_representable_upto(p, total as i64));
        }
    }
}
