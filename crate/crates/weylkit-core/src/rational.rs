//! Exact rational scalars plus a few arbitrary-precision helpers.

use crate::error::AlgError;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Rational from an integer pair. Panics only on `d == 0` (programmer error).
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `k!` as a big integer.
pub fn factorial(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Renders a rational without a trailing `/1`.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `"-3"`, `"3/4"`, or `"-3/4"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, AlgError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| AlgError::Parse(format_parse("integer", num)))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| AlgError::Parse(format_parse("integer", d)))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(AlgError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

fn format_parse(what: &str, got: &str) -> String {
    let mut m = String::from("expected ");
    m.push_str(what);
    m.push_str(", got `");
    m.push_str(got);
    m.push('`');
    m
}

/// `r^k` for a possibly negative exponent; errors on `0^k` with `k < 0`.
pub fn rational_pow(r: &Rational, k: i64) -> Result<Rational, AlgError> {
    if r.is_zero() && k < 0 {
        return Err(AlgError::PoleAtZero);
    }
    if r.is_zero() && k == 0 {
        return Ok(Rational::one());
    }
    let mut acc = Rational::one();
    let base = if k >= 0 { r.clone() } else { r.recip() };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    Ok(acc)
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}

/// Converts an exact integer rational to `usize`; errors otherwise.
pub fn to_usize(r: &Rational) -> Result<usize, AlgError> {
    if !r.denom().is_one() || r.numer().is_negative() {
        return Err(AlgError::Invalid(
            "expected a nonnegative integer value".into(),
        ));
    }
    let digits = r.numer().to_string();
    digits
        .parse()
        .map_err(|_| AlgError::Invalid("integer too large for usize".into()))
}

/// Converts integers to a rational vector.
pub fn rat_vec(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat_int(x)).collect()
}
