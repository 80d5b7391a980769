//! Numeric back ends: exact big rationals and 64-bit floats.
//!
//! Every algebraic routine in the crate is generic over [`Scalar`], so the
//! same code runs exactly when the parameters are rational and in floating
//! point otherwise.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Significant decimal digits carried by exact k-th roots before outward rounding.
pub const ROOT_DIGITS: u32 = 30;

pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// True for the exact rational back end.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Sums the terms; the float back end uses compensated accumulation.
    fn sum_terms<I: IntoIterator<Item = Self>>(terms: I) -> Self;

    /// A value no smaller than the real `k`-th root of a positive `self`.
    fn root_upper(&self, k: u32) -> Self;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn from_usize(v: usize) -> Self {
        Self::from_int(v as i64)
    }

    fn is_positive_value(&self) -> bool {
        *self > Self::zero()
    }

    fn powu(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sum_terms<I: IntoIterator<Item = Self>>(terms: I) -> Self {
        // Neumaier's variant of Kahan summation.
        let mut sum = 0.0_f64;
        let mut comp = 0.0_f64;
        for x in terms {
            let t = sum + x;
            if sum.abs() >= x.abs() {
                comp += (sum - t) + x;
            } else {
                comp += (x - t) + sum;
            }
            sum = t;
        }
        sum + comp
    }

    fn root_upper(&self, k: u32) -> Self {
        if k == 1 {
            return *self;
        }
        let kf = f64::from(k);
        let mut r = self.powf(1.0 / kf);
        let rk1 = r.powi(k as i32 - 1);
        r -= (r * rk1 - self) / (kf * rk1);
        r * (1.0 + 4.0 * f64::EPSILON)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sum_terms<I: IntoIterator<Item = Self>>(terms: I) -> Self {
        terms.into_iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    fn root_upper(&self, k: u32) -> Self {
        rational_root_upper(self, k)
    }
}

/// Upper k-th root of a positive rational with about [`ROOT_DIGITS`]
/// significant digits. Perfect powers are returned exactly.
pub fn rational_root_upper(r: &Rational, k: u32) -> Rational {
    assert!(r.is_positive(), "root of non-positive rational");
    if k == 1 {
        return r.clone();
    }
    let (num, den) = (r.numer(), r.denom());
    let rn = num.nth_root(k);
    let rd = den.nth_root(k);
    if Pow::pow(&rn, k) == *num && Pow::pow(&rd, k) == *den {
        return Rational::new(rn, rd);
    }

    let est_log10 = (num.bits() as f64 - den.bits() as f64) * std::f64::consts::LOG10_2 / f64::from(k);
    let decimals = (i64::from(ROOT_DIGITS) + 2 - est_log10.floor() as i64).max(0) as u32;
    let scale = Pow::pow(BigInt::from(10), decimals);
    let scaled = num * Pow::pow(&scale, k);
    let (q, rem) = scaled.div_rem(den);
    let m = if rem.is_zero() { q } else { q + 1 };
    let mut root = m.nth_root(k);
    if Pow::pow(&root, k) < m {
        root += 1;
    }
    Rational::new(root, scale)
}

/// Exact rational value of a finite float.
pub fn f64_to_rational(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Largest float not above `r`.
pub fn to_f64_down(r: &Rational) -> f64 {
    let mut f = Scalar::to_f64(r);
    if !f.is_finite() {
        return f;
    }
    while f64_to_rational(f).is_some_and(|q| q > *r) {
        f = f.next_down();
    }
    f
}

/// Smallest float not below `r`.
pub fn to_f64_up(r: &Rational) -> f64 {
    let mut f = Scalar::to_f64(r);
    if !f.is_finite() {
        return f;
    }
    while f64_to_rational(f).is_some_and(|q| q < *r) {
        f = f.next_up();
    }
    f
}

/// Parses `p/q`, an integer, or a decimal literal (optionally with an
/// exponent) into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }

    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = BigInt::from_str(&digits).map_err(|_| bad())?;
    if negative {
        value = -value;
    }
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        Rational::from_integer(value * Pow::pow(&ten, shift as u32))
    } else {
        Rational::new(value, Pow::pow(&ten, (-shift) as u32))
    })
}

/// A user-supplied parameter: exact when written as `p/q` (or when exact
/// mode is requested), floating otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum Number {
    Exact(Rational),
    Float(f64),
}

impl Number {
    /// Parses with the default rule: `p/q` is exact, anything else is a float.
    pub fn parse(s: &str) -> Result<Self> {
        if s.contains('/') {
            parse_rational(s).map(Number::Exact)
        } else {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not a number: {s:?}")))?;
            if !v.is_finite() {
                return Err(Error::Parse(format!("not a finite number: {s:?}")));
            }
            Ok(Number::Float(v))
        }
    }

    /// Parses every accepted spelling as an exact rational.
    pub fn parse_exact(s: &str) -> Result<Self> {
        parse_rational(s).map(Number::Exact)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Number::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(r) => Scalar::to_f64(r),
            Number::Float(x) => *x,
        }
    }

    /// Exact value; floats convert through their binary expansion.
    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            Number::Exact(r) => Some(r.clone()),
            Number::Float(x) => f64_to_rational(*x),
        }
    }
}

impl FromStr for Number {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Number::parse(s)
    }
}

/// `p/q` text of a rational, or just `p` for integers.
pub fn rational_text(r: &Rational) -> String {
    if r.denom() == &BigInt::one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
