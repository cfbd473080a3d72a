//! Exact-arithmetic workbench for Maschke's octic surface `S`, the Calabi-Yau
//! double octic `X`, and their quotients.
//!
//! Everything here recomputes, from first principles, the numbers attached to
//! these varieties: group decomposition data, Lefschetz/Chenevert traces,
//! point counts over finite fields, Frobenius trace tables, the Hecke
//! character of `Q(sqrt(-15))`, the lattice of the 352 lines on `S`, and a
//! collection of exact polynomial identities. No floating point is used
//! anywhere; all checks are exact integer or rational identities.

pub mod algebra;
pub mod counting;
pub mod ffield;
pub mod fixtures;
pub mod grouprep;
pub mod hecke;
pub mod lefschetz;
pub mod nslattice;
pub mod tangent;
pub mod traceformula;
pub mod varieties;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("bad reduction: prime {0} must be > 5")]
    BadPrime(u64),
    #[error("extension degree {0} out of range 1..=4")]
    BadDegree(u32),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group closure exceeded bound of {0} elements")]
    ClosureExceeded(usize),
    #[error("variable `{0}` missing from substitution assignment")]
    MissingVariable(String),
    #[error("division by polynomial with non-invertible leading coefficient")]
    BadLeadingCoeff,
    #[error("non-integral value in {0}: {1}")]
    NonIntegral(&'static str, String),
    #[error("Weil bound violated for {target}: |{value}| > {bound} at q={q}")]
    WeilBound {
        target: &'static str,
        value: i64,
        bound: i64,
        q: u64,
    },
    #[error("inconsistent counts: {0}")]
    Inconsistent(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
