//! Euler-Rayleigh bracketing of the largest zero of a positive-rooted
//! polynomial, and the resulting two-sided bounds on `1 - x_nn`.
//!
//! With `l_k = p_k / p_{k-1}` and `u_k = p_k^(1/k)` one has
//! `l_k < z_n < u_k`, the lower sequence increasing and the upper one
//! decreasing to `z_n`. Through `z = 2/(1 - x)` this gives
//! `2 / u_k < 1 - x_nn < 2 p_k / p_{k+1}`.

use crate::error::{domain, Error, Result};
use crate::poly_core::{transformed_coeffs, JacobiParams, TransformedPoly};
use crate::power_sums::newton_power_sums;
use crate::scalar::Scalar;

/// Power used by one-shot bound queries.
pub const DEFAULT_K: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct RayleighBracket<T> {
    /// `l_1 ..= l_K`.
    pub lower_seq: Vec<T>,
    /// `u_1 ..= u_K`, each rounded upward.
    pub upper_seq: Vec<T>,
    pub k_used: usize,
    /// `2 / u_K`, a lower bound on `1 - x_nn`.
    pub lower_1mx: T,
    /// `2 p_K / p_{K+1}`, an upper bound on `1 - x_nn`.
    pub upper_1mx: T,
}

impl<T: Scalar> RayleighBracket<T> {
    /// `(lower, upper)` bounds on `1 - x_nn` at power `k <= k_used`.
    pub fn one_minus_x_at(&self, k: usize) -> (T, T) {
        let two = T::from_int(2);
        let lower = two.clone() / self.upper_seq[k - 1].clone();
        let upper = if k == self.k_used {
            self.upper_1mx.clone()
        } else {
            two / self.lower_seq[k].clone()
        };
        (lower, upper)
    }
}

pub fn rayleigh_sequences<T: Scalar>(poly: &TransformedPoly<T>, k: usize) -> Result<RayleighBracket<T>> {
    if k == 0 {
        return domain("k must be at least 1");
    }
    let ps = newton_power_sums(poly, k + 1);
    if let Some(r) = ps.values.iter().position(|p| !p.is_positive_value()) {
        return Err(Error::Inconsistent(format!(
            "power sum p_{r} = {} is not positive; the polynomial does not have positive zeros",
            ps.values[r].to_f64()
        )));
    }
    let lower_seq: Vec<T> = (1..=k).map(|j| ps.values[j].clone() / ps.values[j - 1].clone()).collect();
    let upper_seq: Vec<T> = (1..=k).map(|j| ps.values[j].root_upper(j as u32)).collect();
    let two = T::from_int(2);
    Ok(RayleighBracket {
        lower_1mx: two.clone() / upper_seq[k - 1].clone(),
        upper_1mx: two * ps.values[k].clone() / ps.values[k + 1].clone(),
        lower_seq,
        upper_seq,
        k_used: k,
    })
}

/// Open interval containing `1 - x_nn(alpha, beta)` at power `k`.
pub fn extreme_zero_bracket<T: Scalar>(p: &JacobiParams<T>, k: usize) -> Result<(T, T)> {
    let bracket = rayleigh_sequences(&transformed_coeffs(p), k)?;
    Ok((bracket.lower_1mx, bracket.upper_1mx))
}

/// Open interval containing `1 + x_1n(alpha, beta)`, from the reflection
/// `P_n^(alpha,beta)(x) = (-1)^n P_n^(beta,alpha)(-x)`.
pub fn smallest_zero_bracket<T: Scalar>(p: &JacobiParams<T>, k: usize) -> Result<(T, T)> {
    extreme_zero_bracket(&p.swapped(), k)
}
