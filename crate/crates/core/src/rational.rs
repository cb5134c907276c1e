//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `"p/q"` with `q > 0`, lowest terms; integers print as `"p"`.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(
            s.parse::<BigInt>().map_err(|_| bad())?,
        )),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_is_canonical() {
        assert_eq!(format(&frac(6, -4)), "-3/2");
        assert_eq!(format(&frac(4, 2)), "2");
        assert_eq!(format(&int(0)), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["3/2", "-7", "0", "-1/3"] {
            assert_eq!(format(&parse(s).unwrap()), s);
        }
        assert_eq!(parse("4/6").unwrap(), frac(2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
