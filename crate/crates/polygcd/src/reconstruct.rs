//! Lifting a modular image back to an integer polynomial through the
//! symmetric residue range (-p/2, p/2).

use crate::arith::Int;
use crate::modpoly::ModPoly;
use crate::polyz::IntPoly;
use crate::Error;

/// Lifts each residue `b` to `b` when `2b < p` and to `b - p` otherwise.
///
/// The caller must choose the modulus larger than twice any true coefficient
/// magnitude for the lift to recover the original polynomial; the modulus 2
/// has no symmetric range and is rejected.
pub fn reconstruct_poly(dp: &ModPoly) -> Result<IntPoly, Error> {
    let p = dp.modulus();
    if *p == Int::from(2) {
        return Err(Error::NoSymmetricRange);
    }
    let coeffs = dp
        .coeffs()
        .iter()
        .map(|b| if b + b < *p { b.clone() } else { b - p })
        .collect();
    Ok(IntPoly::from_coeffs(coeffs))
}
