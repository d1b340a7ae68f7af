//! Homogeneous floor sums `S(a, b, d) = sum_{i=1}^{d} floor(i*b / a)`.
//!
//! [`floor_sum_fast`] evaluates the sum in a logarithmic number of steps by
//! alternating the division algorithm with the reciprocity identity
//!
//! ```text
//! S(a, b, d) + S(b, a, K) = d*K,   K = floor(b*d / a),   b < a, d < a, gcd(a, b) = 1
//! ```
//!
//! Each step applies, in this order:
//!
//! 1. multiplier reduction: `b = q*a + r` contributes `q * d(d+1)/2`;
//! 2. index reduction: whole periods of length `a` are stripped using
//!    `floor((i + a)*b / a) = b + floor(i*b / a)`;
//! 3. the swap `S(a, b, d) = d*K - S(b, a, K)`.
//!
//! The loop stops when `b`, `d` or `K` reaches zero, at which point the
//! remaining sum is empty or identically zero.
//!
//! The residual operations evaluate both sides of an identity with
//! [`floor_sum_naive`] so that the identity under test is never used to
//! compute its own left-hand side.

use crate::arith::{check_input, gcd};
use crate::{Error, Result};

/// The triple `(a, b, d)` of a floor sum: modulus, multiplier and number of
/// terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FloorSumQuery {
    modulus: u64,
    multiplier: u64,
    terms: u64,
}

impl FloorSumQuery {
    pub fn new(modulus: u64, multiplier: u64, terms: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::out_of_range("a", 0, "a modulus of at least 1"));
        }
        check_input("a", modulus)?;
        check_input("b", multiplier)?;
        check_input("d", terms)?;
        Ok(Self {
            modulus,
            multiplier,
            terms,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    /// `floor(b*d / a)`, the upper index of the reciprocal sum.
    pub fn reciprocal_terms(&self) -> u64 {
        (self.multiplier as u128 * self.terms as u128 / self.modulus as u128) as u64
    }
}

/// An evaluated floor sum. Under the input contract the value is below
/// `2^93`, so `u128` holds it exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FloorSum {
    pub query: FloorSumQuery,
    pub value: u128,
}

/// Step count of one [`floor_sum_fast_traced`] evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Trace {
    pub steps: u32,
}

/// Term-by-term summation, `O(d)`.
pub fn floor_sum_naive(q: FloorSumQuery) -> FloorSum {
    let a = q.modulus as u128;
    let b = q.multiplier as u128;
    let value = (1..=q.terms as u128).map(|i| i * b / a).sum();
    FloorSum { query: q, value }
}

pub fn floor_sum_fast(q: FloorSumQuery) -> FloorSum {
    floor_sum_fast_traced(q).0
}

/// [`floor_sum_fast`] together with the number of reduction steps taken.
pub fn floor_sum_fast_traced(q: FloorSumQuery) -> (FloorSum, Trace) {
    let mut trace = Trace::default();
    let g = gcd(q.modulus, q.multiplier).max(1);
    let mut a = (q.modulus / g) as i128;
    let mut b = (q.multiplier / g) as i128;
    let mut d = q.terms as i128;
    let mut acc = 0i128;
    let mut sign = 1i128;

    while b != 0 && d != 0 {
        trace.steps += 1;

        if b >= a {
            acc += sign * (b / a) * (d * (d + 1) / 2);
            b %= a;
            if b == 0 {
                break;
            }
        }

        if d >= a {
            let (periods, rest) = (d / a, d % a);
            // sum over one full period i = 1..=a, valid since gcd(a, b) = 1
            let period = (a - 1) * (b - 1) / 2 + b;
            acc += sign * (a * b * (periods * (periods - 1) / 2) + periods * period + rest * periods * b);
            d = rest;
            if d == 0 {
                break;
            }
        }

        let k = b * d / a;
        if k == 0 {
            break;
        }
        acc += sign * d * k;
        sign = -sign;
        (a, b, d) = (b, a, k);
    }

    debug_assert!(acc >= 0);
    (
        FloorSum {
            query: q,
            value: acc as u128,
        },
        trace,
    )
}

/// Convenience wrapper: validated fast evaluation of `S(a, b, d)`.
pub fn floor_sum(a: u64, b: u64, d: u64) -> Result<u128> {
    FloorSumQuery::new(a, b, d).map(|q| floor_sum_fast(q).value)
}

/// Upper bound on [`Trace::steps`] for a query with these parameters:
/// `3 * (floor(log2(max(a, b))) + 1)`.
pub fn step_bound(a: u64, b: u64) -> u32 {
    3 * (a.max(b).max(1).ilog2() + 1)
}

fn naive(a: u64, b: u64, d: u64) -> i128 {
    let q = FloorSumQuery {
        modulus: a,
        multiplier: b,
        terms: d,
    };
    floor_sum_naive(q).value as i128
}

fn require_coprime(a: u64, b: u64) -> Result<()> {
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime { a, b, gcd: g });
    }
    Ok(())
}

/// `S(a, b, d) + S(b, a, K) - d*K` with `K = floor(b*d / a)`; zero whenever
/// `1 <= b < a`, `1 <= d < a` and `gcd(a, b) = 1`.
///
/// Both sums are evaluated term by term, so this costs `O(a)`.
pub fn reciprocity_residual(a: u64, b: u64, d: u64) -> Result<i128> {
    let q = FloorSumQuery::new(a, b, d)?;
    if b == 0 || b >= a {
        return Err(Error::Precondition(format!("need 1 <= b < a, got a = {a}, b = {b}")));
    }
    if d == 0 || d >= a {
        return Err(Error::Precondition(format!("need 1 <= d < a, got a = {a}, d = {d}")));
    }
    require_coprime(a, b)?;
    let k = q.reciprocal_terms();
    Ok(naive(a, b, d) + naive(b, a, k) - d as i128 * k as i128)
}

/// `S(a, b, floor(a/2)) + S(b, a, floor(b/2)) - floor(a/2)*floor(b/2)`; zero for
/// every coprime pair.
pub fn strong_residual(a: u64, b: u64) -> Result<i128> {
    if a == 0 || b == 0 {
        return Err(Error::Precondition("a and b must be positive".into()));
    }
    FloorSumQuery::new(a, b, a / 2)?;
    FloorSumQuery::new(b, a, b / 2)?;
    require_coprime(a, b)?;
    let (ha, hb) = (a / 2, b / 2);
    Ok(naive(a, b, ha) + naive(b, a, hb) - ha as i128 * hb as i128)
}

/// `S(p, q, (p-1)/2) + S(q, p, (q-1)/2) - (p-1)(q-1)/4`; zero for distinct odd
/// coprime `p`, `q` (primes or not).
pub fn gauss_residual(p: u64, q: u64) -> Result<i128> {
    crate::arith::require_odd("p", p)?;
    crate::arith::require_odd("q", q)?;
    if p == q {
        return Err(Error::Precondition(format!("p and q must be distinct, both are {p}")));
    }
    FloorSumQuery::new(p, q, p / 2)?;
    FloorSumQuery::new(q, p, q / 2)?;
    require_coprime(p, q)?;
    let rhs = ((p - 1) as i128 * (q - 1) as i128) / 4;
    Ok(naive(p, q, (p - 1) / 2) + naive(q, p, (q - 1) / 2) - rhs)
}
