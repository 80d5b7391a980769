//! The Laguerre limit `x_1n(α) = lim_{β→∞} (β/2)(1 - x_nn(α, β))`.

use crate::closed_bounds::gupta_muldoon;
use crate::error::{domain, Result};
use crate::poly_core::{JacobiParams, LaguerreParams};
use crate::power_sums::{q2, q3};
use crate::scalar::Scalar;
use crate::zero_oracle::{largest_zero_shifted, laguerre_zeros};

#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    /// Smallest Laguerre zero from the oracle.
    pub target: f64,
    pub betas: Vec<f64>,
    /// `β / z_n` for each β.
    pub estimates: Vec<f64>,
    pub errors: Vec<f64>,
    /// `errors[i] / errors[i + 1]`.
    pub error_ratios: Vec<f64>,
    pub monotone: bool,
    pub final_rel_error: f64,
}

impl LimitReport {
    pub fn converged(&self) -> bool {
        self.monotone && self.final_rel_error < 1e-2
    }
}

/// Evaluates `β / z_n(α, β)` along increasing β and compares with `x_1n(α)`.
pub fn laguerre_limit_check<T: Scalar>(l: &LaguerreParams<T>, betas: &[f64]) -> Result<LimitReport> {
    if betas.is_empty() {
        return domain("need at least one beta");
    }
    if betas.iter().any(|&b| !(b >= 1e2)) || betas.windows(2).any(|w| w[0] >= w[1]) {
        return domain("beta values must be increasing and at least 100");
    }
    let lf = l.to_f64();
    let target = laguerre_zeros(&lf)?.smallest();
    let mut estimates = Vec::with_capacity(betas.len());
    for &beta in betas {
        let p = JacobiParams::new(lf.n, lf.alpha, beta)?;
        let shifted = largest_zero_shifted(&p)?;
        estimates.push(beta / shifted.z);
    }
    let errors: Vec<f64> = estimates.iter().map(|e| (e - target).abs()).collect();
    let error_ratios = errors.windows(2).map(|w| w[0] / w[1]).collect();
    let monotone = errors.windows(2).all(|w| w[1] < w[0]);
    let final_rel_error = errors[errors.len() - 1] / target;
    Ok(LimitReport { target, betas: betas.to_vec(), estimates, errors, error_ratios, monotone, final_rel_error })
}

/// `b q2(t) / q3(t)` with `t = n(n + a + b - 1)`, the quantity whose `b → ∞`
/// limit yields the Laguerre bound.
pub fn scaled_q_ratio<T: Scalar>(n: usize, a: &T, b: &T) -> T {
    let nn = T::from_usize(n);
    let t = nn.clone() * (nn + a.clone() + b.clone() - T::one());
    b.clone() * q2(a, b, &t) / q3(a, b, &t)
}

/// `(2n² + 3an + a²) / ((5a+6)n³ + 2a(5a+6)n² + a²(6a+7)n + a³(a+1))`,
/// the expanded form of the limit.
pub fn q_ratio_limit_expanded<T: Scalar>(n: usize, a: &T) -> T {
    let n = T::from_usize(n);
    let k = |v: i64| T::from_int(v);
    let c = k(5) * a.clone() + k(6);
    let num = k(2) * n.clone() * n.clone() + k(3) * a.clone() * n.clone() + a.clone() * a.clone();
    let den = c.clone() * n.clone().powu(3)
        + k(2) * a.clone() * c * n.clone() * n.clone()
        + a.clone() * a.clone() * (k(6) * a.clone() + k(7)) * n
        + a.clone().powu(3) * (a.clone() + k(1));
    num / den
}

/// Factored form `(2n + a) / ((5a+6)n(n+a) + a²(a+1))` of the same limit.
pub fn q_ratio_limit<T: Scalar>(n: usize, a: &T) -> T {
    let n = T::from_usize(n);
    let k = |v: i64| T::from_int(v);
    (k(2) * n.clone() + a.clone())
        / ((k(5) * a.clone() + k(6)) * n.clone() * (n + a.clone()) + a.clone() * a.clone() * (a.clone() + k(1)))
}

/// `a(a+1)(a+3)` times the limit; reproduces the Gupta-Muldoon bound.
pub fn laguerre_bound_from_limit<T: Scalar>(l: &LaguerreParams<T>) -> T {
    let a = l.alpha.clone() + T::one();
    a.clone() * (a.clone() + T::one()) * (a.clone() + T::from_int(3)) * q_ratio_limit(l.n, &a)
}

/// Convenience: the Gupta-Muldoon value next to its limit-derived form.
pub fn gupta_muldoon_pair<T: Scalar>(l: &LaguerreParams<T>) -> (T, T) {
    (gupta_muldoon(l).value, laguerre_bound_from_limit(l))
}
