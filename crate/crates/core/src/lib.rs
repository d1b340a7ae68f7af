//! Exact arithmetic for the two-coin Frobenius problem and floor-function
//! reciprocity.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: gcd machinery, modular arithmetic, primality and the
//!   validated [`CoprimePair`] parameter object.
//! - [`floorsum`]: `S(a, b, d) = sum_{i=1}^{d} floor(i*b/a)`, by brute force and
//!   by a Euclid-like reciprocity recurrence.
//! - [`coinproblem`]: representability, denumerants, threshold counts
//!   `N0(a, b; k)` and Sylvester-type sums over the gaps.
//! - [`jacobi`]: Legendre and Jacobi symbols, with the floor-sum (Eisenstein)
//!   evaluation as the production path.
//! - [`verify`]: grid sweeps replaying every identity against brute-force
//!   oracles, producing structured [`verify::CheckResult`]s.
//!
//! All functions are pure; inputs are plain integers or immutable value types.

pub mod arith;
pub mod coinproblem;
mod error;
pub mod floorsum;
pub mod jacobi;
pub mod verify;

pub use arith::{CoprimePair, OddCoprimePair, MAX_INPUT};
pub use coinproblem::{BestFamilyPoint, ExactRational, NonRepSet, RepCount};
pub use error::{Error, Result};
pub use floorsum::{FloorSum, FloorSumQuery};
pub use jacobi::SymbolValue;
