//! Legendre and Jacobi symbols.
//!
//! The production path, [`jacobi_eisenstein`], reads the symbol off the parity
//! of a single floor sum:
//!
//! ```text
//! (a/b) = (-1)^S(b, a, (b-1)/2)      for odd positive coprime a, b
//! ```
//!
//! [`legendre_euler`] and [`jacobi_by_definition`] (prime factorisation plus
//! Euler's criterion) serve as oracles, together with Gauss' residue count.

use std::ops::Mul;

use crate::arith::{factorize, gcd, is_prime, pow_mod, require_odd};
use crate::floorsum::{floor_sum_fast, FloorSumQuery};
use crate::{Error, OddCoprimePair, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl SymbolValue {
    pub fn value(self) -> i8 {
        match self {
            SymbolValue::MinusOne => -1,
            SymbolValue::Zero => 0,
            SymbolValue::PlusOne => 1,
        }
    }

    /// `(-1)^exponent`, from the exponent's parity.
    pub fn from_parity(exponent: u128) -> Self {
        if exponent % 2 == 0 {
            SymbolValue::PlusOne
        } else {
            SymbolValue::MinusOne
        }
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;

    fn mul(self, rhs: SymbolValue) -> SymbolValue {
        match self.value() * rhs.value() {
            1 => SymbolValue::PlusOne,
            -1 => SymbolValue::MinusOne,
            _ => SymbolValue::Zero,
        }
    }
}

impl std::fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime { value: p });
    }
    Ok(())
}

/// Legendre symbol by Euler's criterion, `a^((p-1)/2) mod p`.
pub fn legendre_euler(a: i64, p: u64) -> Result<SymbolValue> {
    require_odd_prime(p)?;
    let residue = (a as i128).rem_euclid(p as i128) as u64;
    Ok(match pow_mod(residue, (p - 1) / 2, p)? {
        0 => SymbolValue::Zero,
        1 => SymbolValue::PlusOne,
        _ => SymbolValue::MinusOne,
    })
}

/// Jacobi symbol as the product of Legendre symbols over the factorisation
/// of `b`, with multiplicity. `(a/1) = 1`.
pub fn jacobi_by_definition(a: i64, b: u64) -> Result<SymbolValue> {
    require_odd("b", b)?;
    factorize(b)?
        .into_iter()
        .try_fold(SymbolValue::PlusOne, |acc, (p, r)| {
            let symbol = legendre_euler(a, p)?;
            Ok((0..r).fold(acc, |acc, _| acc * symbol))
        })
}

/// Jacobi symbol `(a/b)` as `(-1)^S(b, a, (b-1)/2)`.
pub fn jacobi_eisenstein(a: u64, b: u64) -> Result<SymbolValue> {
    let pair = OddCoprimePair::new(a, b)?;
    let q = FloorSumQuery::new(pair.b(), pair.a(), (pair.b() - 1) / 2)?;
    Ok(SymbolValue::from_parity(floor_sum_fast(q).value))
}

/// Number of `i` in `1..=(p-1)/2` whose least positive residue `i*a mod p`
/// exceeds `p/2`.
pub fn gauss_lemma_count(a: u64, p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    if a % p == 0 {
        return Err(Error::NotCoprime { a, b: p, gcd: p });
    }
    let a = a % p;
    Ok((1..=(p - 1) / 2)
        .filter(|&i| 2 * (i as u128 * a as u128 % p as u128) > p as u128)
        .count() as u64)
}

fn odd_triple(a: u64, b: u64, c: u64) -> Result<()> {
    require_odd("a", a)?;
    require_odd("b", b)?;
    require_odd("c", c)?;
    for (name, x) in [("b", b), ("c", c)] {
        let g = gcd(a, x);
        if g != 1 {
            return Err(Error::Precondition(format!(
                "{name} = {x} must be coprime to a = {a} (gcd is {g})"
            )));
        }
    }
    Ok(())
}

fn half_sum(modulus: u64, multiplier: u64) -> Result<u128> {
    let q = FloorSumQuery::new(modulus, multiplier, (modulus - 1) / 2)?;
    Ok(floor_sum_fast(q).value)
}

/// Parity of `S(a, bc, h) - S(a, b, h) - S(a, c, h)` with `h = (a-1)/2`:
/// multiplying the numerator multiplies the symbol. Always 0.
pub fn product_multiplier_residual(a: u64, b: u64, c: u64) -> Result<u8> {
    odd_triple(a, b, c)?;
    let bc = b.checked_mul(c).ok_or_else(|| Error::out_of_range("b*c", b as i128 * c as i128, "at most 2^31 - 1"))?;
    let parity = half_sum(a, bc)? + half_sum(a, b)? + half_sum(a, c)?;
    Ok((parity % 2) as u8)
}

/// Parity of `S(bc, a, (bc-1)/2) - S(b, a, (b-1)/2) - S(c, a, (c-1)/2)`:
/// the floor-sum exponent is additive over the factors of an odd modulus.
/// Always 0.
pub fn composite_modulus_residual(a: u64, b: u64, c: u64) -> Result<u8> {
    odd_triple(a, b, c)?;
    let bc = b.checked_mul(c).ok_or_else(|| Error::out_of_range("b*c", b as i128 * c as i128, "at most 2^31 - 1"))?;
    let parity = half_sum(bc, a)? + half_sum(b, a)? + half_sum(c, a)?;
    Ok((parity % 2) as u8)
}

/// The key reduction inside [`product_multiplier_residual`]: with
/// `c_i = i*c mod a`, `sum floor(b*c_i / a) ≡ sum floor(i*b / a) (mod 2)` over
/// `i = 1..=(a-1)/2`, because `min(c_i, a - c_i)` permutes `1..=(a-1)/2` and
/// reflecting `c_i` flips the floor by the even amount `b - 1 - 2*floor(..)`.
/// Returns the parity of the difference; always 0.
pub fn folded_residue_residual(a: u64, b: u64, c: u64) -> Result<u8> {
    odd_triple(a, b, c)?;
    let half = (a - 1) / 2;
    let (a, b, c) = (a as u128, b as u128, c as u128);
    let folded: u128 = (1..=half as u128).map(|i| b * (i * c % a) / a).sum();
    let direct: u128 = (1..=half as u128).map(|i| i * b / a).sum();
    Ok(((folded + direct) % 2) as u8)
}

/// `(a/b)(b/a) = (-1)^((a-1)(b-1)/4)`, both symbols by [`jacobi_eisenstein`].
pub fn jacobi_reciprocity_check(a: u64, b: u64) -> Result<bool> {
    let lhs = jacobi_eisenstein(a, b)? * jacobi_eisenstein(b, a)?;
    let rhs = SymbolValue::from_parity(((a - 1) as u128 * (b - 1) as u128) / 4);
    Ok(lhs == rhs)
}
