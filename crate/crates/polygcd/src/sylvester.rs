//! Sylvester matrices and exact resultants via fraction-free elimination.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::Int;
use crate::polyz::IntPoly;
use crate::Error;

/// Row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.entries[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// The (n+m) x (n+m) matrix of shifted coefficient rows: m rows carry the
/// coefficients of f, n rows those of g, each in descending-exponent order.
pub fn sylvester_matrix(f: &IntPoly, g: &IntPoly) -> Result<IntMatrix, Error> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 && m == 0 {
        return Err(Error::ConstantInput);
    }
    let size = n + m;
    let mut mat = IntMatrix::zeros(size, size);
    for i in 0..m {
        for j in 0..=n {
            *mat.entry_mut(i, i + j) = f.coeff(n - j);
        }
    }
    for i in 0..n {
        for j in 0..=m {
            *mat.entry_mut(m + i, i + j) = g.coeff(m - j);
        }
    }
    Ok(mat)
}

/// Exact resultant of two polynomials, the determinant of their Sylvester
/// matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<Int, Error> {
    Ok(det_bareiss(&sylvester_matrix(f, g)?))
}

/// Entry-wise reduction to residues in `[0, p)`.
pub fn reduce_matrix(a: &IntMatrix, p: &Int) -> Result<IntMatrix, Error> {
    if *p < Int::from(2) {
        return Err(Error::ModulusTooSmall);
    }
    Ok(IntMatrix {
        rows: a.rows,
        cols: a.cols,
        entries: a.entries.iter().map(|e| e.mod_floor(p)).collect(),
    })
}

/// Determinant by Bareiss fraction-free elimination: every interior division
/// is exact, so intermediate entries stay polynomial-sized.
pub(crate) fn det_bareiss(a: &IntMatrix) -> Int {
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let n = a.rows;
    if n == 0 {
        return Int::one();
    }
    let mut m = a.clone();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m.entry(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m.entry(i, k).is_zero()) else {
                return Int::zero();
            };
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m.entry(k, k) * m.entry(i, j) - m.entry(i, k) * m.entry(k, j);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                *m.entry_mut(i, j) = q;
            }
            *m.entry_mut(i, k) = Int::zero();
        }
        prev = m.entry(k, k).clone();
    }
    let det = m.entry(n - 1, n - 1).clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant over Z_p by Gaussian elimination, reduced to `[0, p)`.
/// Independent of the fraction-free path; kept as a cross-check for tests.
#[cfg(test)]
pub(crate) fn det_mod(a: &IntMatrix, p: &Int) -> Int {
    use crate::modpoly::mod_inverse;
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let n = a.rows;
    let mut m = reduce_matrix(a, p).expect("modulus checked by caller");
    let mut det = Int::one();
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&i| !m.entry(i, k).is_zero()) else {
            return Int::zero();
        };
        if pivot_row != k {
            m.swap_rows(k, pivot_row);
            det = -det;
        }
        let pivot = m.entry(k, k).clone();
        det = (det * &pivot).mod_floor(p);
        let inv = mod_inverse(&pivot, p).expect("nonzero pivot modulo a prime");
        for i in k + 1..n {
            let factor = (m.entry(i, k) * &inv).mod_floor(p);
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                let sub = &factor * m.entry(k, j);
                *m.entry_mut(i, j) = (m.entry(i, j) - sub).mod_floor(p);
            }
        }
    }
    det.mod_floor(p)
}
