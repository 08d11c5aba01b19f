//! Modular reduction of integers and polynomials, and Euclidean arithmetic
//! over Z_p[x] for prime p.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Int;
use crate::polyz::IntPoly;
use crate::Error;

/// Polynomial over Z_p with its modulus attached.
///
/// All residues lie in `[0, p)`; the highest stored coefficient is nonzero
/// except for the zero polynomial. Binary operations require equal moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPoly {
    modulus: Int,
    coeffs: Vec<Int>,
}

impl ModPoly {
    fn new(modulus: Int, mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ModPoly { modulus, coeffs }
    }

    pub fn zero(modulus: Int) -> Self {
        ModPoly {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn modulus(&self) -> &Int {
        &self.modulus
    }

    /// Residues in ascending-exponent order.
    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero residue; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Residue of the highest power, if any.
    pub fn leading_coeff(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn add(&self, other: &ModPoly) -> Result<ModPoly, Error> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch);
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + other.coeff(i)).mod_floor(&self.modulus))
            .collect();
        Ok(ModPoly::new(self.modulus.clone(), coeffs))
    }

    pub fn mul(&self, other: &ModPoly) -> Result<ModPoly, Error> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(ModPoly::zero(self.modulus.clone()));
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        for c in &mut coeffs {
            *c = c.mod_floor(&self.modulus);
        }
        Ok(ModPoly::new(self.modulus.clone(), coeffs))
    }
}

/// The unique representative of `a` mod `p` in `[0, p)`.
pub fn reduce_int(a: &Int, p: &Int) -> Result<Int, Error> {
    if *p < Int::from(2) {
        return Err(Error::ModulusTooSmall);
    }
    Ok(a.mod_floor(p))
}

/// Coefficient-wise reduction of an integer polynomial; the degree drops when
/// the modulus divides high coefficients.
pub fn reduce_poly(f: &IntPoly, p: &Int) -> Result<ModPoly, Error> {
    if *p < Int::from(2) {
        return Err(Error::ModulusTooSmall);
    }
    let coeffs = f.coeffs().iter().map(|c| c.mod_floor(p)).collect();
    Ok(ModPoly::new(p.clone(), coeffs))
}

/// Multiplicative inverse of `a` modulo the prime `p`.
pub fn mod_inverse(a: &Int, p: &Int) -> Result<Int, Error> {
    let a = reduce_int(a, p)?;
    if a.is_zero() {
        return Err(Error::NotInvertible);
    }
    let ext = a.extended_gcd(p);
    if !ext.gcd.is_one() {
        return Err(Error::NotInvertible);
    }
    Ok(ext.x.mod_floor(p))
}

/// Long division in Z_p[x]: returns `(q, r)` with `f = q*g + r` and either
/// `r = 0` or `deg r < deg g`.
pub fn divrem_mod(f: &ModPoly, g: &ModPoly) -> Result<(ModPoly, ModPoly), Error> {
    if f.modulus != g.modulus {
        return Err(Error::ModulusMismatch);
    }
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let p = f.modulus.clone();
    let g_deg = g.coeffs.len() - 1;
    let g_lead_inv = mod_inverse(g.leading_coeff().expect("nonzero divisor"), &p)?;
    let mut rem = f.coeffs.clone();
    let mut quot = vec![Int::zero(); f.coeffs.len().saturating_sub(g_deg)];
    loop {
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        if rem.len() <= g_deg {
            break;
        }
        let r_deg = rem.len() - 1;
        let c = (rem[r_deg].clone() * &g_lead_inv).mod_floor(&p);
        let shift = r_deg - g_deg;
        for (j, b) in g.coeffs.iter().enumerate() {
            let sub = &c * b;
            rem[shift + j] = (&rem[shift + j] - sub).mod_floor(&p);
        }
        quot[shift] = c;
    }
    Ok((ModPoly::new(p.clone(), quot), ModPoly::new(p, rem)))
}

/// Monic gcd of two polynomials over Z_p, computed as the last nonzero
/// remainder of the classical remainder sequence.
pub fn euclid_gcd_mod(f: &ModPoly, g: &ModPoly) -> Result<ModPoly, Error> {
    if f.modulus != g.modulus {
        return Err(Error::ModulusMismatch);
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::GcdBothZero);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = divrem_mod(&a, &b)?;
        a = b;
        b = r;
    }
    let inv = mod_inverse(a.leading_coeff().expect("nonzero"), &a.modulus)?;
    Ok(scale_mod(&a, &inv))
}

/// Coefficient-wise product with the residue `t`.
pub fn scale_mod(e: &ModPoly, t: &Int) -> ModPoly {
    debug_assert!(!t.is_negative() && *t < e.modulus);
    let coeffs = e
        .coeffs
        .iter()
        .map(|c| (c * t).mod_floor(&e.modulus))
        .collect();
    ModPoly::new(e.modulus.clone(), coeffs)
}
