//! Arbitrary-precision rationals and the helpers the rest of the crate
//! shares for parsing, printing and clearing denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number. `num-rational` keeps it reduced with a positive
/// denominator, and its `Display` is already the canonical `p/q` form
/// (denominator omitted when it is one).
pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
    let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

/// Parses a comma-separated list of rationals, checking its length.
pub fn parse_rational_list(s: &str, expected: usize) -> Result<Vec<Rational>> {
    let values = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
    if values.len() != expected {
        return Err(Error::Parse(format!(
            "expected {expected} comma-separated rationals, got {}",
            values.len()
        )));
    }
    Ok(values)
}

/// Scales a rational vector to coprime integers whose first nonzero entry is
/// positive. Returns `None` for the zero vector.
pub fn primitive_integer_vector(values: &[Rational]) -> Option<Vec<BigInt>> {
    let first = values.iter().find(|v| !v.is_zero())?;
    let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let negate = first.is_negative();
    for v in &mut ints {
        *v = &*v / &g;
        if negate {
            *v = -&*v;
        }
    }
    Some(ints)
}

/// Integer square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let n = value.numer().sqrt();
    let d = value.denom().sqrt();
    if &(&n * &n) == value.numer() && &(&d * &d) == value.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
        assert_eq!(int(5).to_string(), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn list_parsing_checks_length() {
        assert_eq!(parse_rational_list("2,3,4,5", 4).unwrap()[3], int(5));
        assert!(parse_rational_list("2,3", 4).is_err());
    }

    #[test]
    fn primitive_vector_normalizes_sign_and_content() {
        let v = primitive_integer_vector(&[int(0), rat(-1, 2), int(3)]).unwrap();
        assert_eq!(v, vec![BigInt::from(0), BigInt::from(1), BigInt::from(-6)]);
        assert!(primitive_integer_vector(&[int(0), int(0)]).is_none());
    }

    #[test]
    fn sqrt_of_squares_only() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }
}
