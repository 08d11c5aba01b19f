//! Certified integer ceilings for every coefficient and resultant bound the
//! gcd algorithms rely on, plus the primorial prime-count derived from them.
//!
//! Each function returns an integer that is greater than or equal to the
//! exact real value of the underlying formula, so prime thresholds computed
//! from these values are never undershot.

use num_integer::Integer;
use num_traits::{Pow, Signed};

use crate::arith::{ceil_div, ceil_sqrt, primorial_k, Int};
use crate::polyz::IntPoly;
use crate::Error;

/// All bounds computed for a pair of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Ceiling of the divisor-coefficient bound for the first polynomial.
    pub nf: Int,
    /// Ceiling of the divisor-coefficient bound for the second polynomial.
    pub ng: Int,
    /// Ceiling of the common-divisor coefficient bound for the pair.
    pub nfg: Int,
    /// Ceiling of the cofactor-resultant magnitude bound.
    pub afg: Int,
    /// Largest k such that the product of the first k primes is at most `afg`.
    pub k: u64,
    /// Modular gcd degree measured at auxiliary primes, when an algorithm
    /// recorded one.
    pub s_deg: Option<usize>,
    /// Ceiling of the sharpened coefficient bound using `s_deg`, when set.
    pub m_bound: Option<Int>,
}

/// Upper bound on the absolute coefficients of any integer divisor of `f`:
/// the ceiling of `2^(n-1) * sqrt(norm_sq(f))` for `n = deg f`.
pub fn bound_single(f: &IntPoly) -> Result<Int, Error> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let norm = f.norm_sq();
    if n == 0 {
        // 2^(n-1) degenerates to the exact rational 1/2.
        Ok(ceil_div(&ceil_sqrt(&norm), &Int::from(2)))
    } else {
        Ok(ceil_sqrt(&(Int::from(4).pow(n - 1) * norm)))
    }
}

fn bound_with_exponent(f: &IntPoly, g: &IntPoly, s: usize) -> Result<Int, Error> {
    let a0 = f.leading_coeff()?.abs();
    let b0 = g.leading_coeff()?.abs();
    let w = a0.gcd(&b0);
    let nf = f.norm_sq();
    let ng = g.norm_sq();
    // min(sqrt(nf)/a0, sqrt(ng)/b0) decided exactly on squares.
    let (norm, lead) = if &nf * &b0 * &b0 <= &ng * &a0 * &a0 {
        (nf, a0)
    } else {
        (ng, b0)
    };
    let inner = Int::from(4).pow(s) * &w * &w * norm;
    Ok(ceil_div(&ceil_sqrt(&inner), &lead))
}

/// Upper bound on the absolute coefficients of any common divisor of `f` and
/// `g`: the ceiling of `2^min(n,m) * gcd(a0, b0) * min(|f|/|a0|, |g|/|b0|)`
/// where `|.|` is the Euclidean coefficient norm and `a0`, `b0` the leading
/// coefficients.
pub fn bound_pair(f: &IntPoly, g: &IntPoly) -> Result<Int, Error> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    bound_with_exponent(f, g, n.min(m))
}

/// The common-divisor bound with the degree exponent replaced by a known
/// bound `s` on the divisor degree. With `s = min(n, m)` this reproduces
/// [`bound_pair`] exactly.
pub fn bound_aux(f: &IntPoly, g: &IntPoly, s: usize) -> Result<Int, Error> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    bound_with_exponent(f, g, s)
}

/// Hadamard-style upper bound on the absolute resultant of the cofactors
/// `f/d`, `g/d` for any common divisor `d`: the ceiling of
/// `sqrt((n+1)^m (m+1)^n) * Nf^m * Ng^n`.
pub fn bound_resultant(f: &IntPoly, g: &IntPoly) -> Result<Int, Error> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 || m == 0 {
        return Err(Error::ConstantInput);
    }
    let nf_sq = Int::from(4).pow(n - 1) * f.norm_sq();
    let ng_sq = Int::from(4).pow(m - 1) * g.norm_sq();
    let inner = Int::from(n as u64 + 1).pow(m)
        * Int::from(m as u64 + 1).pow(n)
        * nf_sq.pow(m)
        * ng_sq.pow(n);
    Ok(ceil_sqrt(&inner))
}

/// Evaluates every bound for the pair and the prime count `k` derived from
/// the resultant bound. Requires both inputs nonconstant.
pub fn full_report(f: &IntPoly, g: &IntPoly) -> Result<BoundReport, Error> {
    let afg = bound_resultant(f, g)?;
    let k = primorial_k(&afg);
    Ok(BoundReport {
        nf: bound_single(f)?,
        ng: bound_single(g)?,
        nfg: bound_pair(f, g)?,
        afg,
        k,
        s_deg: None,
        m_bound: None,
    })
}
