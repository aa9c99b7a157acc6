//! Exact arithmetic foundation: arbitrary-precision rationals, cyclotomic
//! field elements, univariate polynomials over them, and sparse multivariate
//! polynomials over the rationals.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function, so values can be shared freely between verification tasks.

mod cyclotomic;
mod multipoly;
mod unipoly;

pub use cyclotomic::Cyclotomic;
pub use multipoly::{MultiPoly, VarAssignment};
pub use unipoly::{cyclotomic_polynomial, UniPoly};

use num::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Exact division was requested but the divisor does not divide exactly.
    #[error("division is not exact: remainder {0}")]
    InexactDivision(String),
    /// Division by the zero polynomial or zero element.
    #[error("division by zero")]
    DivisionByZero,
    /// Root multiplicity of the zero polynomial is undefined.
    #[error("root multiplicity of the zero polynomial is undefined")]
    ZeroPolynomial,
    /// Operands have incompatible shapes (variable sets, lengths, ...).
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// A string failed to parse as the requested exact value.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Shorthand for `Rational` from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Parses a rational from `p` or `p/q` form.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<num::BigInt>()
            .map(Rational::from_integer)
            .map_err(|e| ExactError::Parse(format!("{s:?}: {e}"))),
        Some((p, q)) => {
            let p = p
                .trim()
                .parse::<num::BigInt>()
                .map_err(|e| ExactError::Parse(format!("{s:?}: {e}")))?;
            let q = q
                .trim()
                .parse::<num::BigInt>()
                .map_err(|e| ExactError::Parse(format!("{s:?}: {e}")))?;
            if q == num::BigInt::from(0) {
                return Err(ExactError::Parse(format!("{s:?}: zero denominator")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if num::One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Euler's totient of `n`.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_format() {
        assert_eq!(format_rational(&parse_rational("3/6").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("-4/2").unwrap()), "-2");
        assert_eq!(format_rational(&rat(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn phi_small_values() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &v) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u32 + 1), v);
        }
    }
}
