//! Dense polynomials over the integers: ring arithmetic, sign-carrying
//! content and primitive part, norms, and exact division.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::Int;
use crate::Error;

/// Polynomial with arbitrary-precision integer coefficients.
///
/// Index `i` of the coefficient vector holds the coefficient of `x^i`. The
/// highest stored coefficient is nonzero; the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    /// Builds a polynomial from coefficients in ascending-exponent order,
    /// trimming high zeros.
    pub fn from_coeffs(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers, ascending exponents.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::from(1))
    }

    pub fn constant(c: Int) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients in ascending-exponent order; empty for zero.
    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored range.
    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    /// Highest exponent with a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the highest power.
    pub fn leading_coeff(&self) -> Result<Int, Error> {
        self.coeffs.last().cloned().ok_or(Error::ZeroPolynomial)
    }

    /// Gcd of all coefficients, carrying the sign of the leading coefficient.
    pub fn content(&self) -> Result<Int, Error> {
        let lead = self.leading_coeff()?;
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if lead.is_negative() {
            g = -g;
        }
        Ok(g)
    }

    /// The polynomial divided by its content. The leading coefficient of the
    /// result is positive.
    pub fn primitive_part(&self) -> Result<IntPoly, Error> {
        let cont = self.content()?;
        Ok(IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &cont).collect(),
        })
    }

    /// Sum of squared coefficients.
    pub fn norm_sq(&self) -> Int {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Largest absolute coefficient; zero for the zero polynomial.
    pub fn height(&self) -> Int {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Int::zero)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Coefficient-wise product with a scalar.
    pub fn scale(&self, c: &Int) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Quotient `q` with `self = d * q` over the integers, or `None` when no
    /// such quotient exists.
    pub fn divide_exact(&self, d: &IntPoly) -> Result<Option<IntPoly>, Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d_deg = d.coeffs.len() - 1;
        let d_lead = d.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); self.coeffs.len().saturating_sub(d_deg)];
        loop {
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            let Some(r_deg) = rem.len().checked_sub(1) else {
                return Ok(Some(IntPoly::from_coeffs(quot)));
            };
            if r_deg < d_deg {
                return Ok(None);
            }
            let (c, leftover) = rem[r_deg].div_rem(d_lead);
            if !leftover.is_zero() {
                return Ok(None);
            }
            let shift = r_deg - d_deg;
            for (j, b) in d.coeffs.iter().enumerate() {
                let sub = &c * b;
                rem[shift + j] -= sub;
            }
            quot[shift] = c;
        }
    }
}
