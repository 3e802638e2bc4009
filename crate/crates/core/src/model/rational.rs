use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `numer / denom`, reduced. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses an integer (`"-3"`) or a fraction (`"4/8"`) into reduced form.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let malformed = || Error::MalformedRational(text.to_string());
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        s.parse::<BigInt>().map_err(|_| malformed())
    };
    match trimmed.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(trimmed)?)),
        Some((p, q)) => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(Error::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" 6/-4 ").unwrap(), rat(-3, 2));
        let big = parse_rational("123456789012345678901234567890/2").unwrap();
        assert_eq!(big.to_string(), "61728394506172839450617283945");
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            parse_rational("1/0"),
            Err(Error::ZeroDenominator("1/0".into()))
        );
        for bad in ["", "abc", "1/", "/2", "1.5", "1/2/3", "--1", "0x10"] {
            assert!(
                matches!(parse_rational(bad), Err(Error::MalformedRational(_))),
                "{bad:?} should be malformed"
            );
        }
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(rat(4, 8).to_string(), "1/2");
        assert_eq!(rat(-6, 3).to_string(), "-2");
        assert_eq!(rat(3, -9).to_string(), "-1/3");
    }
}
