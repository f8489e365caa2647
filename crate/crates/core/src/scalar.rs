//! Scalar abstraction shared by every geometric type in the crate.
//!
//! All decision procedures are written against [`Scalar`]. Instantiated with
//! [`BigRational`] they are exact; instantiated with `f64` they are ordinary
//! floating-point evaluations and carry no robustness guarantees.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::Error;

pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// Largest integer not above `self`.
    fn floor_i64(&self) -> i64;

    /// Smallest integer not below `self`.
    fn ceil_i64(&self) -> i64;

    fn to_f64(&self) -> f64;

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn floor_i64(&self) -> i64 {
        self.floor().to_integer().to_i64().expect("coordinate exceeds i64 range")
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil().to_integer().to_i64().expect("coordinate exceeds i64 range")
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }

    fn floor_i64(&self) -> i64 {
        self.floor().to_integer()
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil().to_integer()
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn floor_i64(&self) -> i64 {
        *self
    }

    fn ceil_i64(&self) -> i64 {
        *self
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn floor_i64(&self) -> i64 {
        self.floor() as i64
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil() as i64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn floor_i64(&self) -> i64 {
        self.floor() as i64
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil() as i64
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

pub(crate) fn min_of<T: Scalar>(a: &T, b: &T) -> T {
    if b < a {
        b.clone()
    } else {
        a.clone()
    }
}

pub(crate) fn max_of<T: Scalar>(a: &T, b: &T) -> T {
    if b > a {
        b.clone()
    } else {
        a.clone()
    }
}

/// Build an exact rational `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Render a rational as a terminating decimal when one exists ("0.5", "-3"),
/// and as "num/den" otherwise ("1/3").
pub fn format_rational(r: &BigRational) -> String {
    let den = r.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let (mut twos, mut fives) = (0usize, 0usize);
    let mut rest = den.clone();
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return format!("{}/{}", r.numer(), den);
    }
    let digits = twos.max(fives);
    if digits == 0 {
        return r.numer().to_string();
    }
    let scaled = r * BigRational::from_integer(BigInt::from(10).pow(digits as u32));
    let scaled = scaled.to_integer();
    let neg = scaled.is_negative();
    let mut text = scaled.abs().to_string();
    if text.len() <= digits {
        text = format!("{}{}", "0".repeat(digits + 1 - text.len()), text);
    }
    let (int_part, frac_part) = text.split_at(text.len() - digits);
    let frac_part = frac_part.trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Parse "3", "-0.25", "1/3" or "-7/2" into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let bad = || Error::ParseRational(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str_radix(num.trim(), 10).map_err(|_| bad())?;
        let den = BigInt::from_str_radix(den.trim(), 10).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa = BigInt::from_str_radix(if digits.is_empty() { "0" } else { &digits }, 10)
        .map_err(|_| bad())?;
    let scale = BigInt::from(10).pow(frac_part.len() as u32);
    let value = BigRational::new(mantissa, scale);
    Ok(if neg { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_terminating_decimals() {
        assert_eq!(format_rational(&ratio(1, 2)), "0.5");
        assert_eq!(format_rational(&ratio(-1, 4)), "-0.25");
        assert_eq!(format_rational(&ratio(6, 2)), "3");
        assert_eq!(format_rational(&ratio(1, 3)), "1/3");
        assert_eq!(format_rational(&ratio(-7, 6)), "-7/6");
        assert_eq!(format_rational(&ratio(3, 80)), "0.0375");
        assert_eq!(format_rational(&ratio(0, 5)), "0");
    }

    #[test]
    fn parses_both_notations() {
        assert_eq!(parse_rational("0.5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational("1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_rational("4/-8").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("12").unwrap(), ratio(12, 1));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(ratio(-1, 2).floor_i64(), -1);
        assert_eq!(ratio(-1, 2).ceil_i64(), 0);
        assert_eq!(ratio(7, 2).floor_i64(), 3);
        assert_eq!(Rational64::new(7, 2).ceil_i64(), 4);
        assert_eq!(2.5f64.floor_i64(), 2);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn text_round_trip(num in -100_000i64..100_000, den in 1i64..2_000) {
                let r = ratio(num, den);
                prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
            }
        }
    }
}
