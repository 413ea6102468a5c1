use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`; panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Decimal notation is rejected on purpose.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Exact square root of a rational, if it has one.
pub fn rational_sqrt(d: &Rational) -> Option<Rational> {
    if d.is_negative() {
        return None;
    }
    let p = d.numer();
    let q = d.denom();
    let sp = p.sqrt();
    if &(&sp * &sp) != p {
        return None;
    }
    let sq = q.sqrt();
    if &(&sq * &sq) != q {
        return None;
    }
    Some(Rational::new(sp, sq))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational(" 2/-4 ").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn rejects_decimals_and_zero_denominator() {
        assert!(matches!(parse_rational("0.5"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational("1e3"), Err(Error::Parse(_))));
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(ratio(6, -4).to_string(), "-3/2");
        assert_eq!(int(7).to_string(), "7");
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&ratio(4, 3)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }
}
