//! Exact computational arithmetic for supersingular polynomials over prime
//! fields and their analogues for the Fricke groups of level 2, 3, 5 and 7.
//!
//! The crate computes the supersingular polynomial ss_p(X) of a prime p, the
//! Fricke supersingular polynomials ss_p^(N*)(Y) for N in {2, 3, 5, 7} by two
//! independent methods, and machine-checks the resultant congruences, degree
//! formulas, splitting-prime statements, class polynomial factorizations and
//! isogeny parametrizations that tie them together.  All arithmetic is exact:
//! 64-bit prime fields, their quadratic extensions, big-integer polynomials
//! and CRT-reconstructed resultants.  Nothing is floating point.

pub mod arith;
pub mod bipoly;
pub mod data;
pub mod engine;
pub mod factor;
pub mod field;
pub mod identities;
pub mod intpoly;
pub mod poly;
pub mod resultant;
pub mod verify;

use thiserror::Error;

/// Errors surfaced by construction, divisibility and rationality checks.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} does not fit below 2^62")]
    ModulusTooLarge(u64),
    #[error("level must be 2, 3, 5 or 7, got {0}")]
    BadLevel(u64),
    #[error("prime {p} is not admissible at level {level}: {why}")]
    BadPrime { level: u8, p: u64, why: &'static str },
    #[error("prime {0} is below the supported range (need p >= 5)")]
    SmallPrime(u64),
    #[error("the field with 2 elements has no supported quadratic extension here")]
    NoQuadraticExtension,
    #[error("curve discriminant is zero, so there is no j-invariant")]
    SingularCurve,
    #[error("division left a nonzero remainder (degree {num_deg} by degree {den_deg})")]
    NonExactDivision { num_deg: usize, den_deg: usize },
    #[error("polynomial is not the square of a polynomial")]
    NotASquare,
    #[error("root product is not rational over the base prime field")]
    RationalityFailure,
    #[error("data record problem: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// First point of disagreement between a computed value and an expected one,
/// reported by identity checks and congruence verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Coefficient index (or a check-specific position) where the sides differ.
    pub index: usize,
    pub expected: String,
    pub actual: String,
}
