//! Classical orthogonal polynomials and the transformed monic polynomial
//! whose zeros are `z_i = 2 / (1 - x_in)`.

use num_traits::One;

use crate::error::{domain, Result};
use crate::scalar::{f64_to_rational, Rational, Scalar};

/// Float-path guard: `alpha + 1` below this is rejected as ill-conditioned.
pub const FLOAT_DEGENERACY_GAP: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct JacobiParams<T> {
    pub alpha: T,
    pub beta: T,
    pub n: usize,
}

impl<T: Scalar> JacobiParams<T> {
    pub fn new(n: usize, alpha: T, beta: T) -> Result<Self> {
        if n == 0 {
            return domain("degree must be at least 1");
        }
        check_above(&alpha, -1, "alpha")?;
        check_above(&beta, -1, "beta")?;
        if !T::EXACT && alpha.to_f64() + 1.0 < FLOAT_DEGENERACY_GAP {
            return domain(format!(
                "alpha = {} is within {FLOAT_DEGENERACY_GAP:e} of -1; use exact rational input",
                alpha.to_f64()
            ));
        }
        Ok(JacobiParams { alpha, beta, n })
    }

    /// `a = alpha + 1`.
    pub fn a(&self) -> T {
        self.alpha.clone() + T::one()
    }

    /// `b = beta + 1`.
    pub fn b(&self) -> T {
        self.beta.clone() + T::one()
    }

    /// `t = n (n + alpha + beta + 1)`.
    pub fn t(&self) -> T {
        let n = T::from_usize(self.n);
        n.clone() * (n + self.alpha.clone() + self.beta.clone() + T::one())
    }

    /// The same polynomial with `alpha` and `beta` exchanged, i.e. the
    /// reflection `x -> -x`.
    pub fn swapped(&self) -> Self {
        JacobiParams { alpha: self.beta.clone(), beta: self.alpha.clone(), n: self.n }
    }

    pub fn to_f64(&self) -> JacobiParams<f64> {
        JacobiParams { alpha: self.alpha.to_f64(), beta: self.beta.to_f64(), n: self.n }
    }

    /// Same weights, another degree (no validation of `n`).
    pub fn with_degree(&self, n: usize) -> Self {
        JacobiParams { alpha: self.alpha.clone(), beta: self.beta.clone(), n }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GegenbauerParams<T> {
    pub lambda: T,
    pub n: usize,
}

impl<T: Scalar> GegenbauerParams<T> {
    pub fn new(n: usize, lambda: T) -> Result<Self> {
        if n == 0 {
            return domain("degree must be at least 1");
        }
        if lambda.clone() + T::ratio(1, 2) <= T::zero() {
            return domain(format!("lambda = {} must exceed -1/2", lambda.to_f64()));
        }
        Ok(GegenbauerParams { lambda, n })
    }

    pub fn to_f64(&self) -> GegenbauerParams<f64> {
        GegenbauerParams { lambda: self.lambda.to_f64(), n: self.n }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreParams<T> {
    pub alpha: T,
    pub n: usize,
}

impl<T: Scalar> LaguerreParams<T> {
    pub fn new(n: usize, alpha: T) -> Result<Self> {
        if n == 0 {
            return domain("degree must be at least 1");
        }
        check_above(&alpha, -1, "alpha")?;
        Ok(LaguerreParams { alpha, n })
    }

    pub fn to_f64(&self) -> LaguerreParams<f64> {
        LaguerreParams { alpha: self.alpha.to_f64(), n: self.n }
    }
}

fn check_above<T: Scalar>(v: &T, bound: i64, name: &str) -> Result<()> {
    if v.to_f64().is_nan() || *v <= T::from_int(bound) {
        return domain(format!("{name} = {} must exceed {bound}", v.to_f64()));
    }
    Ok(())
}

/// `P_n^(lambda)` has the zeros of `P_n^(alpha, alpha)` with `alpha = lambda - 1/2`.
pub fn gegenbauer_as_jacobi<T: Scalar>(g: &GegenbauerParams<T>) -> Result<JacobiParams<T>> {
    let alpha = g.lambda.clone() - T::ratio(1, 2);
    JacobiParams::new(g.n, alpha.clone(), alpha)
}

/// Rising factorial `(x)_k` by repeated multiplication.
pub fn pochhammer<T: Scalar>(x: &T, k: usize) -> T {
    (0..k).fold(T::one(), |acc, i| acc * (x.clone() + T::from_usize(i)))
}

/// Monic polynomial `z^n - b_1 z^(n-1) + b_2 z^(n-2) - ...` whose zeros are
/// `2 / (1 - x_in(alpha, beta))`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedPoly<T> {
    pub n: usize,
    /// `b_1 ..= b_n`.
    pub coeffs: Vec<T>,
    pub a: T,
    pub b: T,
    pub t: T,
}

impl<T: Scalar> TransformedPoly<T> {
    /// `b_i` for `1 <= i <= n`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        if i == 0 {
            T::one()
        } else {
            self.coeffs.get(i - 1).cloned().unwrap_or_else(T::zero)
        }
    }

    /// Coefficients in the monic-polynomial convention, highest degree first:
    /// `[1, -b_1, b_2, -b_3, ...]`.
    pub fn signed_coeffs(&self) -> Vec<T> {
        (0..=self.n)
            .map(|i| {
                let c = self.coeff(i);
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }

    /// Horner evaluation at `z`.
    pub fn eval(&self, z: &T) -> T {
        self.signed_coeffs().into_iter().fold(T::zero(), |acc, c| acc * z.clone() + c)
    }
}

/// `b_i = C(n, i) (n + alpha + beta + 1)_i / (alpha + 1)_i`.
pub fn transformed_coeffs<T: Scalar>(p: &JacobiParams<T>) -> TransformedPoly<T> {
    let n = p.n;
    let a = p.a();
    let b = p.b();
    let t = p.t();
    let shift = T::from_usize(n) + p.alpha.clone() + p.beta.clone() + T::one();
    let mut coeffs = Vec::with_capacity(n);
    let mut binom = T::one();
    for i in 1..=n {
        binom = binom * T::from_usize(n + 1 - i) / T::from_usize(i);
        coeffs.push(binom.clone() * pochhammer(&shift, i) / pochhammer(&a, i));
    }
    TransformedPoly { n, coeffs, a, b, t }
}

/// `x = 1 - 2/z`, the inverse of `z = 2/(1 - x)`.
pub fn map_zero_back<T: Scalar>(z: &T) -> Result<T> {
    if *z <= T::zero() {
        return domain(format!("z = {} must be positive", z.to_f64()));
    }
    Ok(T::one() - T::from_int(2) / z.clone())
}

/// Three-term recurrence coefficients `(A_k, B_k, C_k)` with
/// `P_k = (A_k x + B_k) P_{k-1} - C_k P_{k-2}`, valid for `k >= 2`.
fn jacobi_recurrence(k: usize, alpha: f64, beta: f64) -> (f64, f64, f64) {
    let k = k as f64;
    let s = alpha + beta;
    let c = 2.0 * k + s;
    let denom = 2.0 * k * (k + s) * (c - 2.0);
    let lead = (c - 1.0) * c * (c - 2.0) / denom;
    let shift = (c - 1.0) * (alpha * alpha - beta * beta) / denom;
    let back = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c / denom;
    (lead, shift, back)
}

/// Value and derivatives `P^(0..=order)(x)` of `P_n^(alpha, beta)`, obtained
/// by carrying a truncated Taylor jet through the three-term recurrence.
pub fn jacobi_jet(n: usize, alpha: f64, beta: f64, x: f64, order: usize) -> Vec<f64> {
    let mut prev = vec![0.0; order + 1];
    prev[0] = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = vec![0.0; order + 1];
    cur[0] = 0.5 * (alpha + beta + 2.0) * x + 0.5 * (alpha - beta);
    if order >= 1 {
        cur[1] = 0.5 * (alpha + beta + 2.0);
    }
    for k in 2..=n {
        let (lead, shift, back) = jacobi_recurrence(k, alpha, beta);
        let lin = lead * x + shift;
        let mut next = vec![0.0; order + 1];
        for j in 0..=order {
            // Leibniz rule for (lead x + shift) * P_{k-1}.
            let mut v = lin * cur[j] - back * prev[j];
            if j >= 1 {
                v += j as f64 * lead * cur[j - 1];
            }
            next[j] = v;
        }
        prev = cur;
        cur = next;
    }
    cur
}

pub fn jacobi_eval_recurrence<T: Scalar>(p: &JacobiParams<T>, x: f64) -> f64 {
    jacobi_jet(p.n, p.alpha.to_f64(), p.beta.to_f64(), x, 0)[0]
}

/// `P_n^(alpha, beta)(x)` from the terminating hypergeometric series in
/// `(1 - x)/2` with prefactor `(alpha + 1)_n / n!`. The series alternates
/// and cancels badly for large `n`, so it is summed exactly on the binary
/// values of the inputs and rounded once.
pub fn jacobi_hypergeometric(n: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    let exact = |v: f64| f64_to_rational(v).expect("finite input");
    let (alpha, beta, x) = (exact(alpha), exact(beta), exact(x));
    let one = Rational::one();
    let y = (&one - &x) / Rational::from_int(2);
    let nf = Rational::from_usize(n);
    let top = &nf + &alpha + &beta + &one;
    let mut term = one.clone();
    let mut sum = one.clone();
    let mut prefactor = one.clone();
    for k in 0..n {
        let kf = Rational::from_usize(k);
        term = term * (&kf - &nf) * (&top + &kf) / ((&alpha + &one + &kf) * (&kf + &one)) * &y;
        sum += &term;
        prefactor = prefactor * (&alpha + &kf + &one) / (&kf + &one);
    }
    Scalar::to_f64(&(prefactor * sum))
}

pub fn jacobi_eval_hypergeometric<T: Scalar>(p: &JacobiParams<T>, x: f64) -> f64 {
    jacobi_hypergeometric(p.n, p.alpha.to_f64(), p.beta.to_f64(), x)
}

/// Value and first derivative of the series `sum_k c_k y^k` proportional to
/// `P_n^(alpha, beta)(1 - y)`, normalised so that `c_0 = 1`, together with
/// a bound on the rounding error of the value.
pub(crate) fn shifted_series(n: usize, alpha: f64, beta: f64, y: f64) -> (f64, f64, f64) {
    let nf = n as f64;
    let top = nf + alpha + beta + 1.0;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut c = 1.0;
    coeffs.push(c);
    for k in 0..n {
        let kf = k as f64;
        c *= (kf - nf) * (top + kf) / ((alpha + 1.0 + kf) * (kf + 1.0) * 2.0);
        coeffs.push(c);
    }
    let mut value = 0.0;
    let mut deriv = 0.0;
    let mut magnitude = 0.0;
    for &c in coeffs.iter().rev() {
        deriv = deriv * y + value;
        value = value * y + c;
        magnitude = magnitude * y.abs() + c.abs();
    }
    // Each coefficient carries about 5k roundings, Horner another 2 per step.
    let error = 8.0 * (nf + 1.0) * f64::EPSILON * magnitude;
    (value, deriv, error)
}

/// Value and derivatives of `L_n^(alpha)` through its three-term recurrence.
pub fn laguerre_jet(n: usize, alpha: f64, x: f64, order: usize) -> Vec<f64> {
    let mut prev = vec![0.0; order + 1];
    prev[0] = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = vec![0.0; order + 1];
    cur[0] = 1.0 + alpha - x;
    if order >= 1 {
        cur[1] = -1.0;
    }
    for k in 1..n {
        let kf = k as f64;
        let mut next = vec![0.0; order + 1];
        for j in 0..=order {
            let mut v = (2.0 * kf + 1.0 + alpha - x) * cur[j] - (kf + alpha) * prev[j];
            if j >= 1 {
                v -= j as f64 * cur[j - 1];
            }
            next[j] = v / (kf + 1.0);
        }
        prev = cur;
        cur = next;
    }
    cur
}

pub fn laguerre_eval<T: Scalar>(l: &LaguerreParams<T>, x: f64) -> f64 {
    laguerre_jet(l.n, l.alpha.to_f64(), x, 0)[0]
}
