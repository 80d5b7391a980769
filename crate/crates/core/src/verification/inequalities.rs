//! Derivative inequalities for real-rooted polynomials, evaluated on
//! Gegenbauer and Jacobi polynomials.

use crate::error::{domain, Result};
use crate::poly_core::{gegenbauer_as_jacobi, jacobi_jet, GegenbauerParams, JacobiParams};
use crate::scalar::Scalar;
use crate::zero_oracle::gegenbauer_zeros;

/// Slack allowed after normalising by the largest term magnitude.
pub const INEQUALITY_SLACK: f64 = -1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    /// Point of evaluation.
    pub x: f64,
    /// Raw left-hand side.
    pub value: f64,
    /// Left-hand side divided by the largest term magnitude.
    pub normalized: f64,
    pub holds: bool,
}

fn report(x: f64, terms: &[f64]) -> InequalityReport {
    let value = f64::sum_terms(terms.iter().copied());
    let scale = terms.iter().fold(0.0_f64, |m, t| m.max(t.abs()));
    let normalized = if scale > 0.0 { value / scale } else { 0.0 };
    InequalityReport { x, value, normalized, holds: normalized >= INEQUALITY_SLACK }
}

/// `3(n-2) f''(x0)² - 4(n-1) f'(x0) f'''(x0) >= 0` for `f = P_n^(λ)` at its
/// largest zero `x0`.
pub fn laguerre_inequality_check<T: Scalar>(g: &GegenbauerParams<T>) -> Result<InequalityReport> {
    if g.n < 3 {
        return domain("Laguerre's inequality check needs n >= 3");
    }
    let p = gegenbauer_as_jacobi(g)?.to_f64();
    let x0 = gegenbauer_zeros(g)?.largest();
    Ok(laguerre_inequality_at(&p, x0))
}

/// Left-hand side of Laguerre's inequality for `P_n^(α,β)` at `x`.
pub fn laguerre_inequality_at(p: &JacobiParams<f64>, x: f64) -> InequalityReport {
    let n = p.n as f64;
    let d = jacobi_jet(p.n, p.alpha, p.beta, x, 3);
    report(x, &[3.0 * (n - 2.0) * d[2] * d[2], -4.0 * (n - 1.0) * d[1] * d[3]])
}

/// `p! / q!` as a float.
fn factorial_ratio(p: usize, q: usize) -> f64 {
    if p >= q {
        (q + 1..=p).fold(1.0, |acc, i| acc * i as f64)
    } else {
        1.0 / factorial_ratio(q, p)
    }
}

/// `sum_{j=0}^{2m} (-1)^(m+j) C(2m,j) (n-j)!(n-2m+j)! / ((n-m)!(n-2m)!) f^(j)(x) f^(2m-j)(x)`
/// for `f = P_n^(α,β)`; nonnegative for every real `x` when `0 <= 2m <= n`.
pub fn foster_krasikov_check<T: Scalar>(p: &JacobiParams<T>, m: usize, x: f64) -> Result<InequalityReport> {
    let n = p.n;
    if 2 * m > n {
        return domain(format!("need 2m <= n, got m = {m}, n = {n}"));
    }
    let pf = p.to_f64();
    let d = jacobi_jet(n, pf.alpha, pf.beta, x, 2 * m);
    let mut binom = 1.0;
    let terms: Vec<f64> = (0..=2 * m)
        .map(|j| {
            if j > 0 {
                binom = binom * (2 * m + 1 - j) as f64 / j as f64;
            }
            let sign = if (m + j) % 2 == 0 { 1.0 } else { -1.0 };
            let weight = factorial_ratio(n - j, n - m) * factorial_ratio(n - 2 * m + j, n - 2 * m);
            sign * binom * weight * d[j] * d[2 * m - j]
        })
        .collect();
    Ok(report(x, &terms))
}

/// At a zero of `f`, the `m = 2` Foster-Krasikov sum equals this factor
/// times the left-hand side of Laguerre's inequality.
pub fn foster_krasikov_eq14_factor(n: usize) -> f64 {
    2.0 * (n as f64 - 3.0)
}
