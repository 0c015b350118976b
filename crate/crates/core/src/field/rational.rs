//! Arbitrary-precision rationals. `Rational` is `num_rational::BigRational`,
//! which already keeps gcd-reduced form with a positive denominator.

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "a", "a/b", "-a/b".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-5/4").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("4/6").unwrap().to_string(), "2/3");
        assert!(parse_rational("1/0").is_none());
    }
}
