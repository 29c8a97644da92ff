//! Arbitrary-precision integers and rationals, the scalar type of the
//! whole crate.
//!
//! `Rational` is backed by [`num_rational::BigRational`], which keeps
//! every value fully reduced with a positive denominator and represents
//! zero uniquely as `0/1`. Values are immutable and all operations are
//! pure, so they may be shared between threads freely.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    DivisionByZero,
    Malformed(String),
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::DivisionByZero => write!(f, "division by zero"),
            ArithError::Malformed(s) => write!(f, "malformed rational: {s}"),
        }
    }
}

impl std::error::Error for ArithError {}

/// Builds the reduced, sign-normalized fraction `p/q`.
pub fn make_rational(p: Integer, q: Integer) -> Result<Rational, ArithError> {
    if q.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(Rational::new(p, q))
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, ArithError> {
    if b.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(a / b)
}

/// Shorthand for the integer `n` as a rational.
pub fn from_int(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

/// `base^exp` for any integer exponent; negative exponents invert.
///
/// Panics when asked for a negative power of zero.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let mut sq = if exp < 0 {
        assert!(!base.is_zero(), "negative power of zero");
        acc.clone() / base
    } else {
        base.clone()
    };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        sq = &sq * &sq;
        e >>= 1;
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> Integer {
    let mut acc = Integer::one();
    for k in 2..=n {
        acc *= Integer::from(k);
    }
    acc
}

/// Strict `"p/q"` form, denominator always present. This is the wire
/// form used in JSON output.
pub fn fraction_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

///// Human-facing form: integers render without the `/1`.
pub fn display_str(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fraction_str(r)
    }
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let p = Integer::from_str(num.trim()).map_err(|_| ArithError::Malformed(s.to_string()))?;
    let q = match den {
        Some(d) => Integer::from_str(d.trim()).map_err(|_| ArithError::Malformed(s.to_string()))?,
        None => Integer::one(),
    };
    make_rational(p, q)
}

///// Checks the representation invariants: positive denominator, fully
/// reduced, zero stored as `0/1`.
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer as _;
    r.denom().is_positive()
        && r.numer().gcd(r.denom()).is_one()
        && (!r.numer().is_zero() || r.denom().is_one())
}
