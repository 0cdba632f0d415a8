//! Exact rational parameters (γ, μ, d, ...).

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

#[must_use]
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Parses `"1/48"`, `"0.02"`, `"3"` or `"-1.5"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse {
        line: 1,
        column: 1,
        message: format!("not a rational number: {s:?}"),
    };
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    if frac_part.len() > 15 {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let num: i64 = if digits.is_empty() { 0 } else { digits.parse().map_err(|_| bad())? };
    let den = 10i64.pow(frac_part.len() as u32);
    let r = Rational::new(num, den);
    Ok(if neg { -r } else { r })
}

#[must_use]
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// ⌈r·n⌉ for non-negative r.
#[must_use]
pub fn ceil_times(r: &Rational, n: usize) -> i64 {
    let x = *r * Rational::from_integer(n as i64);
    x.ceil().to_integer()
}

/// Whether the integer `value` is at least `r·n`.
#[must_use]
pub fn at_least(value: i64, r: &Rational, n: usize) -> bool {
    Rational::from_integer(value) >= *r * Rational::from_integer(n as i64)
}

#[must_use]
pub fn is_positive(r: &Rational) -> bool {
    *r > Rational::zero()
}

#[must_use]
pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Rational approximation of a float with a bounded denominator, used only
/// for CLI convenience when a parameter arrives as a float.
#[must_use]
pub fn from_f64(x: f64) -> Rational {
    let den = 1_000_000i64;
    let num = (x * den as f64).round() as i64;
    let g = num.gcd(&den);
    Rational::new(num / g.max(1), den / g.max(1))
}

pub mod serde_str {
    //! Serialize rationals as `"p/q"` strings.
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            S(String),
            F(f64),
        }
        match Raw::deserialize(d)? {
            Raw::S(s) => parse_rational(&s).map_err(serde::de::Error::custom),
            Raw::F(x) => Ok(super::from_f64(x)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("1/48").unwrap(), rat(1, 48));
        assert_eq!(parse_rational("0.02").unwrap(), rat(1, 50));
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn ceil_and_compare() {
        assert_eq!(ceil_times(&rat(1, 6), 6), 1);
        assert_eq!(ceil_times(&rat(1, 10), 20), 2);
        assert_eq!(ceil_times(&rat(1, 10), 21), 3);
        assert!(at_least(10, &rat(5, 6), 12));
        assert!(!at_least(9, &rat(5, 6), 12));
    }

    #[test]
    fn formatting_round_trips() {
        for r in [rat(1, 48), rat(3, 1), rat(-2, 7)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
