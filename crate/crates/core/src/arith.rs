//! Integer primitives shared by every other module.
//!
//! User-facing parameters are accepted up to [`MAX_INPUT`] (`2^31 - 1`), so
//! products of two parameters fit in `u64`/`i64` and every floor sum over the
//! supported range fits in `u128`. Quantities that grow faster than that
//! (power sums over the gaps) use `num-bigint`.

use crate::{Error, Result};

/// Largest accepted value for any user-facing parameter.
pub const MAX_INPUT: u64 = (1 << 31) - 1;

pub(crate) fn check_input(name: &'static str, value: u64) -> Result<u64> {
    if value > MAX_INPUT {
        return Err(Error::out_of_range(name, value, format!("at most {MAX_INPUT}")));
    }
    Ok(value)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn extended_gcd(a: u64, b: u64) -> Result<(u64, i128, i128)> {
    if a == 0 && b == 0 {
        return Err(Error::Precondition(
            "extended_gcd is undefined for (0, 0)".into(),
        ));
    }
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_x, mut x) = (1i128, 0i128);
    let (mut old_y, mut y) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    Ok((old_r as u64, old_x, old_y))
}

/// Inverse of `a` modulo `m`, in `[0, m)`. By convention the inverse modulo 1
/// is 0.
pub fn mod_inverse(a: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::out_of_range("m", 0, "a modulus of at least 1"));
    }
    if m == 1 {
        return Ok(0);
    }
    let (g, x, _) = extended_gcd(a % m, m)?;
    if g != 1 {
        return Err(Error::NotCoprime { a, b: m, gcd: g });
    }
    Ok(x.rem_euclid(m as i128) as u64)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::out_of_range("m", 0, "a modulus of at least 1"));
    }
    let mut result = 1 % m;
    let mut base = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    Ok(result)
}

// These bases make the strong-pseudoprime test deterministic for all of u64.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin over the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n).expect("n >= 2");
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorisation by trial division; primes in increasing order.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::out_of_range("n", 0, "at least 1"));
    }
    let mut factors = Vec::new();
    let mut push = |n: &mut u64, p: u64| {
        let mut r = 0;
        while *n % p == 0 {
            *n /= p;
            r += 1;
        }
        if r > 0 {
            factors.push((p, r));
        }
    };
    push(&mut n, 2);
    let mut p = 3;
    while p * p <= n {
        push(&mut n, p);
        p += 2;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Ok(factors)
}

/// A validated pair of positive coprime integers, each at most [`MAX_INPUT`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoprimePair {
    a: u64,
    b: u64,
}

impl CoprimePair {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 {
            return Err(Error::out_of_range("a", 0, "a positive integer"));
        }
        if b == 0 {
            return Err(Error::out_of_range("b", 0, "a positive integer"));
        }
        check_input("a", a)?;
        check_input("b", b)?;
        let g = gcd(a, b);
        if g != 1 {
            return Err(Error::NotCoprime { a, b, gcd: g });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn swapped(&self) -> Self {
        Self { a: self.b, b: self.a }
    }
}

/// A [`CoprimePair`] whose members are both odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddCoprimePair(CoprimePair);

impl OddCoprimePair {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        require_odd("a", a)?;
        require_odd("b", b)?;
        CoprimePair::new(a, b).map(Self)
    }

    pub fn a(&self) -> u64 {
        self.0.a
    }

    pub fn b(&self) -> u64 {
        self.0.b
    }

    pub fn pair(&self) -> CoprimePair {
        self.0
    }
}

pub(crate) fn require_odd(name: &'static str, value: u64) -> Result<u64> {
    if value % 2 == 0 {
        return Err(Error::NotOdd { name, value });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(29, 23), 1);
        assert_eq!(gcd(1288, 58), 2);
        assert_eq!(gcd(0, 0), 0);
    }

    #[test]
    fn extended_gcd_examples() {
        let (g, x, y) = extended_gcd(1, 1).unwrap();
        assert_eq!(g, 1);
        assert!((x, y) == (1, 0) || (x, y) == (0, 1));

        let (g, x, y) = extended_gcd(29, 23).unwrap();
        assert_eq!(g, 1);
        assert_eq!(29 * x + 23 * y, 1);
        assert_eq!((x, y), (4, -5));

        assert_eq!(extended_gcd(6, 4).unwrap(), (2, 1, -1));
        assert!(extended_gcd(0, 0).is_err());
        assert_eq!(extended_gcd(0, 5).unwrap().0, 5);
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(1, 5).unwrap(), 1);
        assert_eq!(mod_inverse(23, 29).unwrap(), 24);
        // 29 * 4 = 116 = 5 * 23 + 1
        assert_eq!(mod_inverse(29, 23).unwrap(), 4);
        assert_eq!(mod_inverse(7, 1).unwrap(), 0);
        assert!(matches!(
            mod_inverse(6, 4),
            Err(Error::NotCoprime { gcd: 2, .. })
        ));
        assert!(mod_inverse(3, 0).is_err());
    }

    #[test]
    fn pow_mod_examples() {
        assert_eq!(pow_mod(2, 0, 7).unwrap(), 1);
        assert_eq!(pow_mod(3, 3, 7).unwrap(), 6);
        assert_eq!(pow_mod(2, 3, 5).unwrap(), 3);
        assert_eq!(pow_mod(5, 0, 1).unwrap(), 0);
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        for m in 1..=1000u64 {
            for base in (0..=200u64).step_by(7) {
                let mut naive = 1 % m;
                for exp in 0..=200u64 {
                    assert_eq!(pow_mod(base, exp, m).unwrap(), naive, "{base}^{exp} mod {m}");
                    naive = naive * base % m;
                }
            }
        }
    }

    #[test]
    fn primality_examples() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(is_prime(29));
        assert!(!is_prime(561));
        assert!(is_prime(1_000_000_007));
        assert!(is_prime(MAX_INPUT));
        // strong pseudoprime to bases 2, 3, 5 and 7
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(1).unwrap(), vec![]);
        assert_eq!(factorize(667).unwrap(), vec![(23, 1), (29, 1)]);
        assert_eq!(factorize(675).unwrap(), vec![(3, 3), (5, 2)]);
        assert_eq!(factorize(MAX_INPUT).unwrap(), vec![(MAX_INPUT, 1)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn pair_validation() {
        assert!(CoprimePair::new(29, 23).is_ok());
        assert!(CoprimePair::new(1, 1).is_ok());
        assert_eq!(
            CoprimePair::new(6, 4),
            Err(Error::NotCoprime { a: 6, b: 4, gcd: 2 })
        );
        assert!(CoprimePair::new(0, 3).is_err());
        assert!(CoprimePair::new(MAX_INPUT + 1, 1).is_err());
        assert!(OddCoprimePair::new(9, 25).is_ok());
        assert!(matches!(
            OddCoprimePair::new(8, 25),
            Err(Error::NotOdd { name: "a", .. })
        ));
        assert!(OddCoprimePair::new(9, 15).is_err());
    }

    proptest! {
        #[test]
        fn gcd_divides_and_certificate_reconstructs(a in 0u64..=MAX_INPUT, b in 0u64..=MAX_INPUT) {
            let g = gcd(a, b);
            if g != 0 {
                prop_assert_eq!(a % g, 0);
                prop_assert_eq!(b % g, 0);
            }
            if a != 0 || b != 0 {
                let (eg, x, y) = extended_gcd(a, b).unwrap();
                prop_assert_eq!(eg, g);
                prop_assert_eq!(a as i128 * x + b as i128 * y, g as i128);
            }
        }

        #[test]
        fn inverse_is_an_inverse(a in 1u64..=MAX_INPUT, m in 1u64..=MAX_INPUT) {
            prop_assume!(gcd(a, m) == 1);
            let inv = mod_inverse(a, m).unwrap();
            prop_assert!(inv < m);
            prop_assert_eq!((a as u128 * inv as u128 % m as u128) as u64, 1 % m);
        }

        #[test]
        fn factorization_round_trips(n in 1u64..=MAX_INPUT) {
            let factors = factorize(n).unwrap();
            let mut product = 1u64;
            let mut last = 1;
            for &(p, r) in &factors {
                prop_assert!(p > last);
                prop_assert!(is_prime(p));
                last = p;
                product *= p.pow(r);
            }
            prop_assert_eq!(product, n);
        }
    }
}
