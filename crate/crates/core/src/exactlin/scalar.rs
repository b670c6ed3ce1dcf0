use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarParseError {
    #[error("empty scalar")]
    Empty,
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("not a rational number: {0:?}")]
    Invalid(String),
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with optional sign on `p`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let valid = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    match text.split_once('/') {
        None => {
            if !valid(text) {
                return Err(ScalarParseError::Invalid(text.to_string()));
            }
            let n = BigInt::from_str(text).map_err(|_| ScalarParseError::Invalid(text.into()))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            if !valid(num) || den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ScalarParseError::Invalid(text.to_string()));
            }
            let n = BigInt::from_str(num).map_err(|_| ScalarParseError::Invalid(text.into()))?;
            let d = BigInt::from_str(den).map_err(|_| ScalarParseError::Invalid(text.into()))?;
            if d.is_zero() {
                return Err(ScalarParseError::ZeroDenominator(text.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(format_scalar(&frac(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(0)), "0");
        assert!(matches!(parse_scalar("1/0"), Err(ScalarParseError::ZeroDenominator(_))));
        assert!(matches!(parse_scalar("1/-2"), Err(ScalarParseError::Invalid(_))));
        assert!(matches!(parse_scalar("x"), Err(ScalarParseError::Invalid(_))));
        assert!(matches!(parse_scalar(""), Err(ScalarParseError::Empty)));
    }

    #[test]
    fn canonical_form_after_arithmetic() {
        let a = frac(1, 6) + frac(1, 3);
        assert_eq!(a, frac(1, 2));
        assert_eq!(a.denom(), &BigInt::from(2));
        let z = frac(1, 2) - frac(2, 4);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
    }
}
