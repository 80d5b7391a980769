//! Exact checks of the polynomial identities behind the Jacobi bounds.
//!
//! With `a = α + 1`, `b = β + 1` fixed rationals, every side is a polynomial
//! in `t` with rational coefficients; the identities must hold
//! coefficient-wise with zero residual.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rational_text, Rational, Scalar};

/// Polynomial in `t`, coefficients in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct TPoly(pub Vec<Rational>);

impl TPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly(coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        TPoly::new(vec![c])
    }

    /// `t + c`.
    pub fn linear(c: Rational) -> Self {
        TPoly::new(vec![c, Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

impl Add for &TPoly {
    type Output = TPoly;

    fn add(self, rhs: &TPoly) -> TPoly {
        let len = self.0.len().max(rhs.0.len());
        TPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &TPoly {
    type Output = TPoly;

    fn sub(self, rhs: &TPoly) -> TPoly {
        let len = self.0.len().max(rhs.0.len());
        TPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;

    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            for (j, y) in rhs.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        TPoly::new(out)
    }
}

fn int(v: i64) -> Rational {
    Rational::from_int(v)
}

pub fn q2_poly(a: &Rational, b: &Rational) -> TPoly {
    TPoly::new(vec![
        a * a * (a + b) * (a + b + int(1)),
        a * (int(2) * a + int(3) * b),
        int(2),
    ])
}

pub fn q3_poly(a: &Rational, b: &Rational) -> TPoly {
    let a2 = a * a;
    let a3 = &a2 * a;
    let b2 = b * b;
    TPoly::new(vec![
        &a3 * (a + int(1)) * (a + b) * (a + b + int(1)) * (a + b + int(2)),
        &a2 * (int(3) * &a3 + int(9) * &a2 * b + int(6) * a * &b2 + int(6) * &a2 + int(15) * a * b
            + int(7) * &b2
            + int(2) * a
            + int(4) * b),
        int(2) * a * (int(3) * &a2 + int(5) * a * b + int(4) * a + int(6) * b),
        int(5) * a + int(6),
    ])
}

pub fn r2_poly(a: &Rational, b: &Rational) -> TPoly {
    let a2 = a * a;
    let a3 = &a2 * a;
    let b2 = b * b;
    TPoly::new(vec![
        &a2 * (a + b) * (a + b + int(1)) * (int(6) * &a2 + a * b + int(18) * a + int(12)),
        a * (int(3) * &a3 + int(14) * &a2 * b + int(6) * a * &b2 + int(3) * &a2 + int(27) * a * b
            + int(6) * &b2
            - int(6) * a
            + int(6) * b),
        int(6) * &a2 + int(5) * a * b + int(12) * a + int(6) * b,
    ])
}

pub fn s2_poly(a: &Rational, b: &Rational) -> TPoly {
    TPoly::new(vec![
        a * (a + b) * (a + b + int(1)) * (int(4) * a - b + int(4)),
        int(2) * a * a + int(6) * a * b - b * b - int(2) * a + int(2) * b,
        int(4),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `2 q3 - (5a+6)(t + ab/3) q2 = (a/3) r2`.
    R2Identity,
    /// `2 q3 - (5a+6)(t + ab/2) q2 = (1/2) a² (a+2) s2`.
    S2Identity,
}

impl Identity {
    pub fn label(self) -> &'static str {
        match self {
            Identity::R2Identity => "R2_IDENTITY",
            Identity::S2Identity => "S2_IDENTITY",
        }
    }
}

/// Exact positivity of a quadratic on a half-line `t >= t_min`.
#[derive(Debug, Clone, PartialEq)]
pub struct PositivityCheck {
    pub hypothesis: &'static str,
    /// Whether the hypothesis can hold for these `(a, b)`.
    pub applicable: bool,
    pub t_min: Rational,
    /// Minimum over `[t_min, ∞)`.
    pub min_value: Rational,
    /// Degrees `n` whose `t = n(n+a+b-1)` satisfies the hypothesis and were evaluated.
    pub degrees_checked: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProofIdentityReport {
    pub identity: Identity,
    pub a: Rational,
    pub b: Rational,
    /// Coefficients of `lhs - rhs`; empty when the identity holds.
    pub residual_coeffs: Vec<Rational>,
    /// Smallest minimum over all applicable positivity checks.
    pub positivity_witness: Rational,
    pub checks: Vec<PositivityCheck>,
}

/// Degrees at which positivity is also sampled directly.
const SAMPLE_DEGREES: std::ops::RangeInclusive<usize> = 4..=40;

/// `n (n + a + b - 1)`.
pub fn t_of(n: usize, a: &Rational, b: &Rational) -> Rational {
    let n = Rational::from_usize(n);
    &n * (&n + a + b - int(1))
}

/// Minimum of a quadratic with positive leading coefficient on `[t_min, ∞)`.
fn min_on_half_line(p: &TPoly, t_min: &Rational) -> Rational {
    let lead = p.coeff(2);
    if lead > Rational::zero() {
        let vertex = -p.coeff(1) / (int(2) * lead);
        if vertex > *t_min {
            return p.eval(&vertex);
        }
    }
    p.eval(t_min)
}

fn positivity(
    p: &TPoly,
    hypothesis: &'static str,
    applicable: bool,
    t_min: Rational,
    degree_ok: impl Fn(usize) -> bool,
    a: &Rational,
    b: &Rational,
) -> Result<PositivityCheck> {
    let min_value = min_on_half_line(p, &t_min);
    let mut degrees_checked = Vec::new();
    if applicable {
        if min_value <= Rational::zero() {
            return Err(Error::IdentityViolation(format!(
                "quadratic not positive for {hypothesis} at a = {}, b = {}",
                rational_text(a),
                rational_text(b)
            )));
        }
        for n in SAMPLE_DEGREES.filter(|&n| degree_ok(n)) {
            let t = t_of(n, a, b);
            if t < t_min || p.eval(&t) <= Rational::zero() {
                return Err(Error::IdentityViolation(format!(
                    "{hypothesis}: degree {n} violates the hypothesis range or positivity at a = {}, b = {}",
                    rational_text(a),
                    rational_text(b)
                )));
            }
            degrees_checked.push(n);
        }
    }
    Ok(PositivityCheck { hypothesis, applicable, t_min, min_value, degrees_checked })
}

fn check_params(a: &Rational, b: &Rational) -> Result<()> {
    if *a <= Rational::zero() || *b <= Rational::zero() {
        return Err(Error::Domain("a and b must be positive".into()));
    }
    Ok(())
}

fn lhs(a: &Rational, b: &Rational, shift: Rational) -> TPoly {
    let q2 = q2_poly(a, b);
    let q3 = q3_poly(a, b);
    let factor = TPoly::linear(shift).scale(&(int(5) * a + int(6)));
    &q3.scale(&int(2)) - &(&factor * &q2)
}

fn residual_report(identity: Identity, a: &Rational, b: &Rational, residual: TPoly) -> Result<Vec<Rational>> {
    if residual.is_zero() {
        Ok(residual.0)
    } else {
        Err(Error::IdentityViolation(format!(
            "{} residual {:?} at a = {}, b = {}",
            identity.label(),
            residual.0.iter().map(rational_text).collect::<Vec<_>>(),
            rational_text(a),
            rational_text(b)
        )))
    }
}

pub fn verify_identity_r2(a: &Rational, b: &Rational) -> Result<ProofIdentityReport> {
    check_params(a, b)?;
    let r2 = r2_poly(a, b);
    let residual = &lhs(a, b, a * b / int(3)) - &r2.scale(&(a / int(3)));
    let residual_coeffs = residual_report(Identity::R2Identity, a, b, residual)?;
    // t = n(n + a + b - 1) > n(n - 1) >= 12 for n >= 4.
    let check = positivity(&r2, "t >= 12 (n >= 4)", true, int(12), |_| true, a, b)?;
    Ok(ProofIdentityReport {
        identity: Identity::R2Identity,
        a: a.clone(),
        b: b.clone(),
        residual_coeffs,
        positivity_witness: check.min_value.clone(),
        checks: vec![check],
    })
}

pub fn verify_identity_s2(a: &Rational, b: &Rational) -> Result<ProofIdentityReport> {
    check_params(a, b)?;
    let s2 = s2_poly(a, b);
    let half = Rational::new(1.into(), 2.into());
    let residual = &lhs(a, b, a * b / int(2)) - &s2.scale(&(&half * a * a * (a + int(2))));
    let residual_coeffs = residual_report(Identity::S2Identity, a, b, residual)?;

    let small_beta = *b <= int(4) * a + int(4);
    let first = positivity(
        &s2,
        "b <= 4a + 4 and t >= 4(a + b + 3)",
        small_beta,
        int(4) * (a + b + int(3)),
        |_| true,
        a,
        b,
    )?;
    let second = positivity(
        &s2,
        "n >= max{4, a + b + 1}, t >= 2(a + b)(a + b + 1)",
        true,
        int(2) * (a + b) * (a + b + int(1)),
        |n| Rational::from_usize(n) >= a + b + int(1),
        a,
        b,
    )?;
    let witness = [&first, &second]
        .iter()
        .filter(|c| c.applicable)
        .map(|c| c.min_value.clone())
        .min()
        .expect("second hypothesis always applies");
    Ok(ProofIdentityReport {
        identity: Identity::S2Identity,
        a: a.clone(),
        b: b.clone(),
        residual_coeffs,
        positivity_witness: witness,
        checks: vec![first, second],
    })
}
