//! Exact arithmetic substrate: big rationals, Gaussian rationals, sparse
//! multivariate polynomials, univariate quotient rings and integer matrices.

mod gauss;
mod intmatrix;
mod multipoly;
mod unipoly;

pub use gauss::GaussRat;
pub use intmatrix::{int_rank, IntMatrix, RankReport};
pub use multipoly::{Coeff, MultiPoly};
pub use unipoly::{QuotElem, UniPoly};

use num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator
/// (maintained by the backing implementation).
pub type Rat = num_rational::BigRational;

/// Integer rational constructor.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction constructor, `n/d`.
pub fn ratf(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact conversion to `i64`; panics if the value is not a small integer.
pub fn rat_to_i64(r: &Rat) -> i64 {
    assert!(r.is_integer(), "expected integer, got {r}");
    let v = r.to_integer();
    i64::try_from(v).expect("integer out of i64 range")
}
