//! Text form of integer polynomials in one variable `x`.
//!
//! The grammar accepts sums of terms `[±][coefficient][*][x[^exponent]]` with
//! arbitrary-precision coefficients, terms in any order, repeated exponents
//! summed, and insignificant whitespace. The printer emits the canonical
//! compact descending form, e.g. `x^2+2x+1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Int;
use crate::polyz::IntPoly;
use crate::Error;

/// Exponents above this are rejected so a typo cannot demand an absurd
/// allocation.
const MAX_EXPONENT: usize = 1_000_000;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn digits(&mut self) -> &'a [u8] {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.bytes[start..self.pos]
    }
}

/// Parses the textual form of a polynomial.
///
/// Positions in errors are byte offsets into the input.
pub fn parse_poly(text: &str) -> Result<IntPoly, Error> {
    let mut sc = Scanner::new(text);
    let mut coeffs: Vec<Int> = Vec::new();
    sc.skip_ws();
    let mut sign = match sc.peek() {
        Some(b'+') => {
            sc.bump();
            1
        }
        Some(b'-') => {
            sc.bump();
            -1
        }
        _ => 1,
    };
    loop {
        sc.skip_ws();
        let (coeff, exponent) = term(&mut sc)?;
        let signed = if sign < 0 { -coeff } else { coeff };
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, Int::zero());
        }
        coeffs[exponent] += signed;
        sc.skip_ws();
        sign = match sc.peek() {
            Some(b'+') => {
                sc.bump();
                1
            }
            Some(b'-') => {
                sc.bump();
                -1
            }
            Some(_) => return Err(sc.error("expected '+' or '-' between terms")),
            None => break,
        };
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// One `[coefficient][*][x[^exponent]]` term; the sign is handled by the
/// caller.
fn term(sc: &mut Scanner) -> Result<(Int, usize), Error> {
    match sc.peek() {
        Some(b) if b.is_ascii_digit() => {
            let digits = sc.digits();
            let coeff = BigInt::parse_bytes(digits, 10).expect("ascii digits");
            sc.skip_ws();
            if sc.peek() == Some(b'*') {
                sc.bump();
                sc.skip_ws();
                if sc.peek() != Some(b'x') {
                    return Err(sc.error("expected 'x' after '*'"));
                }
            }
            if sc.peek() == Some(b'x') {
                let exponent = variable(sc)?;
                Ok((coeff, exponent))
            } else {
                Ok((coeff, 0))
            }
        }
        Some(b'x') => {
            let exponent = variable(sc)?;
            Ok((Int::one(), exponent))
        }
        _ => Err(sc.error("expected a term")),
    }
}

/// `x` with an optional caret exponent; returns the exponent.
fn variable(sc: &mut Scanner) -> Result<usize, Error> {
    sc.bump();
    let save = sc.pos;
    sc.skip_ws();
    if sc.peek() != Some(b'^') {
        sc.pos = save;
        return Ok(1);
    }
    sc.bump();
    sc.skip_ws();
    let digits = sc.digits();
    if digits.is_empty() {
        return Err(sc.error("expected a nonnegative integer exponent"));
    }
    let exponent: usize = std::str::from_utf8(digits)
        .expect("ascii digits")
        .parse()
        .map_err(|_| sc.error("exponent out of range"))?;
    if exponent > MAX_EXPONENT {
        return Err(sc.error("exponent out of range"));
    }
    Ok(exponent)
}

/// Prints the canonical compact descending form: coefficient 1 and exponent
/// 1 markers omitted, `0` for the zero polynomial.
pub fn format_poly(f: &IntPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (exponent, coeff) in f.coeffs().iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        if out.is_empty() {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push('-');
        } else {
            out.push('+');
        }
        let magnitude = coeff.abs();
        if exponent == 0 {
            out.push_str(&magnitude.to_string());
        } else {
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
            }
            out.push('x');
            if exponent > 1 {
                out.push_str(&format!("^{}", exponent));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos_of(err: Error) -> usize {
        match err {
            Error::Parse { position, .. } => position,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_known_polynomials() {
        let f = parse_poly("x^8+x^6-3x^4-3x^3+8x^2+2x-5").unwrap();
        assert_eq!(f, IntPoly::from_i64(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]));
        let g = parse_poly("21 - 9x - 4x^2 + 5x^4 + 3x^6").unwrap();
        assert_eq!(g, IntPoly::from_i64(&[21, -9, -4, 0, 5, 0, 3]));
        assert_eq!(parse_poly("0").unwrap(), IntPoly::zero());
        assert_eq!(parse_poly("3").unwrap(), IntPoly::from_i64(&[3]));
        assert_eq!(parse_poly("-x").unwrap(), IntPoly::from_i64(&[0, -1]));
        assert_eq!(parse_poly("x").unwrap(), IntPoly::from_i64(&[0, 1]));
        assert_eq!(parse_poly(" + x ").unwrap(), IntPoly::from_i64(&[0, 1]));
        assert_eq!(
            parse_poly("2*x^3 + 4 * x + 1").unwrap(),
            IntPoly::from_i64(&[1, 4, 0, 2])
        );
        assert_eq!(
            parse_poly("12x^2+24x+12").unwrap(),
            IntPoly::from_i64(&[12, 24, 12])
        );
    }

    #[test]
    fn repeated_exponents_sum() {
        assert_eq!(parse_poly("x+x").unwrap(), IntPoly::from_i64(&[0, 2]));
        assert_eq!(parse_poly("x^2-x^2").unwrap(), IntPoly::zero());
        assert_eq!(
            parse_poly("1+x+1+x^0").unwrap(),
            IntPoly::from_i64(&[3, 1])
        );
    }

    #[test]
    fn big_coefficients_round_trip() {
        let text = "123456789012345678901234567890x^2-98765432109876543210";
        let f = parse_poly(text).unwrap();
        assert_eq!(format_poly(&f), text);
    }

    #[test]
    fn rejects_with_positions() {
        assert_eq!(pos_of(parse_poly("").unwrap_err()), 0);
        assert_eq!(pos_of(parse_poly("   ").unwrap_err()), 3);
        assert_eq!(pos_of(parse_poly("x^").unwrap_err()), 2);
        assert_eq!(pos_of(parse_poly("x^-2").unwrap_err()), 2);
        assert_eq!(pos_of(parse_poly("2**x").unwrap_err()), 2);
        assert_eq!(pos_of(parse_poly("x + ").unwrap_err()), 4);
        assert_eq!(pos_of(parse_poly("3y").unwrap_err()), 1);
        assert_eq!(pos_of(parse_poly("2+-3").unwrap_err()), 2);
        assert_eq!(pos_of(parse_poly("x*2").unwrap_err()), 1);
        assert_eq!(pos_of(parse_poly("x^9999999999999999999999").unwrap_err()), 24);
        assert_eq!(pos_of(parse_poly("x^2000000").unwrap_err()), 9);
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(
            format_poly(&IntPoly::from_i64(&[-5, 2, 8, -3, -3, 0, 1, 0, 1])),
            "x^8+x^6-3x^4-3x^3+8x^2+2x-5"
        );
        assert_eq!(format_poly(&IntPoly::from_i64(&[4, 4])), "4x+4");
        assert_eq!(format_poly(&IntPoly::from_i64(&[-1])), "-1");
        assert_eq!(format_poly(&IntPoly::zero()), "0");
        assert_eq!(format_poly(&IntPoly::from_i64(&[0, -1])), "-x");
        assert_eq!(format_poly(&IntPoly::from_i64(&[0, 0, 1])), "x^2");
        assert_eq!(format_poly(&IntPoly::from_i64(&[0, 0, -2])), "-2x^2");
        assert_eq!(format_poly(&IntPoly::from_i64(&[7])), "7");
    }

    #[test]
    fn round_trip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20240901);
        for _ in 0..1000 {
            let degree = rng.random_range(0..9_usize);
            let coeffs: Vec<Int> = (0..=degree)
                .map(|_| Int::from(rng.random_range(-999_i64..1000)))
                .collect();
            let f = IntPoly::from_coeffs(coeffs);
            assert_eq!(parse_poly(&format_poly(&f)).unwrap(), f);
        }
    }
}
