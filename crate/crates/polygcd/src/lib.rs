//! Exact gcd computation for polynomials over the integers.
//!
//! The core routine reduces a pair of polynomials modulo a single large prime,
//! computes their gcd over the prime field with the Euclidean algorithm, and
//! lifts a suitable scalar multiple of that modular gcd back to `Z[x]`.
//! Landau-Mignotte coefficient bounds certify how large the prime must be, and
//! a primorial count of the possible prime divisors of a resultant bounds how
//! many retries can ever be needed. Refinements use one or several small
//! auxiliary primes to pin down the divisor degree first, which shrinks the
//! main prime dramatically.
//!
//! Everything is integer-exact: bounds are certified ceilings, square roots
//! are integer square roots, and no floating point appears anywhere.

pub mod arith;
pub mod bench;
pub mod bounds;
pub mod cli;
pub mod gcdalgs;
pub mod modpoly;
pub mod parser;
pub mod polyz;
pub mod reconstruct;
pub mod sylvester;

/// Errors shared across the crate.
///
/// `Parse` reports bad textual input; every other variant is a domain error,
/// i.e. a precondition violation of an otherwise total operation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdBothZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("modulus must be at least 2")]
    ModulusTooSmall,
    #[error("modulus 2 admits no symmetric residue range")]
    NoSymmetricRange,
    #[error("operands have different moduli")]
    ModulusMismatch,
    #[error("residue has no inverse modulo the given prime")]
    NotInvertible,
    #[error("operation requires nonconstant polynomials")]
    ConstantInput,
    #[error("auxiliary prime must be prime and must not divide the gcd of the leading coefficients")]
    BadAuxiliaryPrime,
    #[error("prime retry cap exceeded; this indicates an internal error")]
    RetryCapExceeded,
    #[error("first polynomial must have degree at least that of the second")]
    DegreeOrder,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}
