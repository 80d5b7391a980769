//! Deterministic decimal rendering of exact and floating values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};

use crate::scalar::{f64_to_rational, Rational, Scalar};

pub const DEFAULT_DIGITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    HalfEven,
    /// Toward negative infinity.
    Floor,
    /// Toward positive infinity.
    Ceil,
}

fn pow10(e: u32) -> BigInt {
    Pow::pow(BigInt::from(10), e)
}

/// Rounds `r * 10^shift` to an integer.
fn round_scaled(r: &Rational, shift: i64, mode: Rounding) -> BigInt {
    let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
    if shift >= 0 {
        num *= pow10(shift as u32);
    } else {
        den *= pow10((-shift) as u32);
    }
    let (q, rem) = num.div_mod_floor(&den);
    if rem.is_zero() {
        return q;
    }
    match mode {
        Rounding::Floor => q,
        Rounding::Ceil => q + 1,
        Rounding::HalfEven => {
            let twice: BigInt = rem * 2;
            if twice < den || (twice == den && q.is_even()) {
                q
            } else {
                q + 1
            }
        }
    }
}

fn place_point(m: &BigInt, decimals: i64) -> String {
    let negative = m.is_negative();
    let mut digits = m.abs().to_string();
    let body = if decimals <= 0 {
        digits.push_str(&"0".repeat((-decimals) as usize));
        digits
    } else {
        let d = decimals as usize;
        if digits.len() <= d {
            digits = format!("{}{digits}", "0".repeat(d + 1 - digits.len()));
        }
        let split = digits.len() - d;
        format!("{}.{}", &digits[..split], &digits[split..])
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Fixed-point rendering with `decimals` digits after the point.
pub fn fixed(r: &Rational, decimals: u32, mode: Rounding) -> String {
    place_point(&round_scaled(r, i64::from(decimals), mode), i64::from(decimals))
}

/// Decimal exponent `e` with `10^e <= |r| < 10^(e+1)`.
fn decimal_exponent(r: &Rational) -> i64 {
    let a = r.abs();
    let bits = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let ten_pow = |e: i64| -> Rational {
        if e >= 0 {
            Rational::from_integer(pow10(e as u32))
        } else {
            Rational::new(BigInt::from(1), pow10((-e) as u32))
        }
    };
    while ten_pow(e) > a {
        e -= 1;
    }
    while ten_pow(e + 1) <= a {
        e += 1;
    }
    e
}

/// Rendering with `digits` significant digits. Positional notation is used
/// for decimal exponents in `[-5, 15)`, scientific notation otherwise.
pub fn significant(r: &Rational, digits: u32, mode: Rounding) -> String {
    let digits = digits.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let mut e = decimal_exponent(r);
    let mut shift = i64::from(digits) - 1 - e;
    let mut m = round_scaled(r, shift, mode);
    if m.abs() >= pow10(digits) {
        e += 1;
        shift -= 1;
        m = round_scaled(r, shift, mode);
    }
    if (-5..15).contains(&e) {
        place_point(&m, shift)
    } else {
        let mantissa = place_point(&m, i64::from(digits) - 1);
        format!("{mantissa}e{e}")
    }
}

/// Exact decimal text when `r` has a terminating expansion, e.g. `-0.49`.
pub fn terminating(r: &Rational) -> Option<String> {
    let mut den = r.denom().clone();
    for p in [BigInt::from(2), BigInt::from(5)] {
        while den.is_multiple_of(&p) {
            den /= &p;
        }
    }
    if den != BigInt::from(1) {
        return None;
    }
    let mut shift = 0;
    while !round_scaled(r, shift, Rounding::Floor).eq(&round_scaled(r, shift, Rounding::Ceil)) {
        shift += 1;
    }
    Some(place_point(&round_scaled(r, shift, Rounding::Floor), shift))
}

pub fn significant_f64(x: f64, digits: u32, mode: Rounding) -> String {
    match f64_to_rational(x) {
        Some(r) => significant(&r, digits, mode),
        None => non_finite(x),
    }
}

pub fn fixed_f64(x: f64, decimals: u32, mode: Rounding) -> String {
    match f64_to_rational(x) {
        Some(r) => fixed(&r, decimals, mode),
        None => non_finite(x),
    }
}

fn non_finite(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

/// Renders any scalar; exact values are rounded from their exact expansion.
pub fn scalar<T: Scalar>(x: &T, digits: u32, mode: Rounding) -> String {
    match exact_of(x) {
        Some(r) => significant(&r, digits, mode),
        None => significant_f64(x.to_f64(), digits, mode),
    }
}

fn exact_of<T: Scalar>(x: &T) -> Option<Rational> {
    (x as &dyn std::any::Any).downcast_ref::<Rational>().cloned()
}
