use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational numbers. Always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// A commutative integral domain with exact division.
///
/// All polynomial machinery in this crate (pseudo-remainders, subresultants,
/// Bareiss elimination) is written against this trait so the same code runs
/// over `Q`, `Q[s]` and `Q[s, Z1, ..]`.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Returns `self / other` when the quotient exists in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn from_int(n: i64) -> Self {
        rat(n)
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/d` with optional sign.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Renders a rational as a decimal with `digits` significant digits.
pub fn rational_to_decimal(q: &Rational, digits: usize) -> String {
    if Zero::is_zero(q) {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let a = q.abs();
    // scale so that the integer part has exactly `digits` digits
    let ten = BigInt::from(10);
    let mut exp10: i64 = 0;
    let mut scaled = a.clone();
    let lower = Rational::from_integer(ten.pow(digits as u32 - 1));
    let upper = Rational::from_integer(ten.pow(digits as u32));
    while scaled < lower {
        scaled *= Rational::from_integer(ten.clone());
        exp10 -= 1;
    }
    while scaled >= upper {
        scaled /= Rational::from_integer(ten.clone());
        exp10 += 1;
    }
    let mut mantissa = scaled.round().to_integer();
    if mantissa == ten.pow(digits as u32) {
        mantissa /= &ten;
        exp10 += 1;
    }
    let digits_str = mantissa.to_string();
    // value = mantissa * 10^exp10
    let s = if exp10 >= 0 {
        format!("{}{}", digits_str, "0".repeat(exp10 as usize))
    } else {
        let shift = (-exp10) as usize;
        if shift >= digits_str.len() {
            format!("0.{}{}", "0".repeat(shift - digits_str.len()), digits_str)
        } else {
            let (i, f) = digits_str.split_at(digits_str.len() - shift);
            format!("{i}.{f}")
        }
    };
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if neg {
        format!("-{s}")
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_canonical() {
        let q = ratio(4, -6);
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert_eq!(fmt_rational(&q), "-2/3");
        assert_eq!(fmt_rational(&rat(0)), "0");
    }

    #[test]
    fn parse_and_pow() {
        assert_eq!(parse_rational("-3/9"), Some(ratio(-1, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(ratio(2, 3).pow(3), ratio(8, 27));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&ratio(1, 3), 5), "0.33333");
        assert_eq!(rational_to_decimal(&ratio(-1, 5), 12), "-0.2");
        assert_eq!(rational_to_decimal(&rat(1234), 3), "1230");
        assert_eq!(rational_to_decimal(&rat(0), 3), "0");
        assert_eq!(rational_to_decimal(&ratio(2, 3), 2), "0.67");
    }
}
