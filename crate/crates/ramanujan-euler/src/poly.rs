//! Polynomials over the integers.
//!
//! Coefficients are arbitrary-precision, stored lowest-degree first.
//! Evaluation is available in three flavors: `f64` (fast, for grids),
//! exact rational (for certified witnesses), and exact integer.
//!
//! The text syntax is plain: integer coefficients, `^` powers, no
//! parentheses. Examples: `x^2-2`, `x-5`, `2x^3 - 4x + 1`, `-x^4+3x^2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    /// `coeffs[i]` multiplies `x^i`; the top entry is nonzero unless the
    /// polynomial is zero, in which case `coeffs == [0]`.
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from coefficients (lowest first), trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("coeffs nonempty")
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Horner evaluation in `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }

    /// Exact Horner evaluation over the rationals.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact Horner evaluation over the integers.
    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return parse_err(input, "empty input");
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            // Sign.
            let mut sign = BigInt::one();
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            if pos >= bytes.len() {
                return parse_err(input, "dangling sign");
            }
            // Optional integer coefficient.
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff = if pos > digits_start {
                let text = &compact[digits_start..pos];
                sign * text.parse::<BigInt>().expect("ascii digits")
            } else {
                sign
            };
            // Optional variable with optional exponent.
            let power = if pos < bytes.len() && bytes[pos] == b'x' {
                pos += 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let exp_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == exp_start {
                        return parse_err(input, "missing exponent after '^'");
                    }
                    match compact[exp_start..pos].parse::<usize>() {
                        Ok(e) => e,
                        Err(_) => return parse_err(input, "exponent out of range"),
                    }
                } else {
                    1
                }
            } else {
                if pos == digits_start {
                    return parse_err(input, &format!("unexpected character at offset {pos}"));
                }
                0
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += coeff;
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

fn parse_err(input: &str, reason: &str) -> Result<IntPolynomial, Error> {
    Err(Error::PolynomialParse {
        input: input.to_string(),
        reason: reason.to_string(),
    })
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match power {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if power == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
