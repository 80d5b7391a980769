//! Power sums of the zeros of a monic polynomial via Newton's identities.

use crate::error::{domain, Result};
use crate::poly_core::TransformedPoly;
use crate::scalar::Scalar;

/// Default largest power computed on the exact path.
pub const DEFAULT_K_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSums<T> {
    /// `p_0 ..= p_K`, with `p_0 = n`.
    pub values: Vec<T>,
    pub degree: usize,
}

impl<T: Scalar> PowerSums<T> {
    pub fn get(&self, k: usize) -> &T {
        &self.values[k]
    }

    pub fn max_power(&self) -> usize {
        self.values.len() - 1
    }
}

/// `p_1 ..= p_k_max` from
/// `p_r + sum_{i=1}^{min(r-1,n)} (-1)^i p_{r-i} b_i + (-1)^r r b_r = 0`,
/// with `b_r = 0` for `r > n`.
pub fn newton_power_sums<T: Scalar>(poly: &TransformedPoly<T>, k_max: usize) -> PowerSums<T> {
    let n = poly.n;
    let mut values = Vec::with_capacity(k_max + 1);
    values.push(T::from_usize(n));
    for r in 1..=k_max {
        let mut terms = Vec::with_capacity(r.min(n) + 1);
        for i in 1..=(r - 1).min(n) {
            let term = values[r - i].clone() * poly.coeff(i);
            // p_r = sum (-1)^(i+1) p_{r-i} b_i - (-1)^r r b_r
            terms.push(if i % 2 == 1 { term } else { -term });
        }
        if r <= n {
            let last = T::from_usize(r) * poly.coeff(r);
            terms.push(if r % 2 == 1 { last } else { -last });
        }
        values.push(T::sum_terms(terms));
    }
    PowerSums { values, degree: n }
}

/// `q_2(t) = 2t^2 + a(2a + 3b)t + a^2(a + b)(a + b + 1)`.
pub fn q2<T: Scalar>(a: &T, b: &T, t: &T) -> T {
    let (a, b, t) = (a.clone(), b.clone(), t.clone());
    let two = T::from_int(2);
    let three = T::from_int(3);
    two.clone() * t.clone() * t.clone()
        + a.clone() * (two * a.clone() + three * b.clone()) * t
        + a.clone() * a.clone() * (a.clone() + b.clone()) * (a + b + T::one())
}

/// `q_3(t)`, the cubic in the closed form of `p_4`.
pub fn q3<T: Scalar>(a: &T, b: &T, t: &T) -> T {
    let (a, b, t) = (a.clone(), b.clone(), t.clone());
    let k = |v: i64| T::from_int(v);
    let ab = a.clone() + b.clone();
    let c3 = k(5) * a.clone() + k(6);
    let c2 = k(2)
        * a.clone()
        * (k(3) * a.clone() * a.clone() + k(5) * a.clone() * b.clone() + k(4) * a.clone() + k(6) * b.clone());
    let c1 = a.clone()
        * a.clone()
        * (k(3) * a.clone().powu(3)
            + k(9) * a.clone() * a.clone() * b.clone()
            + k(6) * a.clone() * b.clone() * b.clone()
            + k(6) * a.clone() * a.clone()
            + k(15) * a.clone() * b.clone()
            + k(7) * b.clone() * b.clone()
            + k(2) * a.clone()
            + k(4) * b.clone());
    let c0 = a.clone().powu(3) * (a + T::one()) * ab.clone() * (ab.clone() + T::one()) * (ab + k(2));
    ((c3 * t.clone() + c2) * t.clone() + c1) * t + c0
}

/// Closed forms of `p_1 ..= p_4` in the variables `a = alpha + 1`,
/// `b = beta + 1`, `t = n(n + alpha + beta + 1)`.
pub fn closed_form_p<T: Scalar>(r: usize, a: &T, b: &T, t: &T) -> Result<T> {
    let one = T::one();
    let ap1 = a.clone() + one.clone();
    match r {
        1 => Ok(t.clone() / a.clone()),
        2 => Ok(t.clone() * (t.clone() + a.clone() * (a.clone() + b.clone()))
            / (a.clone() * a.clone() * ap1)),
        3 => Ok(t.clone() * q2(a, b, t) / (a.clone().powu(3) * ap1 * (a.clone() + T::from_int(2)))),
        4 => Ok(t.clone() * q3(a, b, t)
            / (a.clone().powu(4)
                * ap1.clone()
                * ap1
                * (a.clone() + T::from_int(2))
                * (a.clone() + T::from_int(3)))),
        _ => domain(format!("closed forms exist only for r in 1..=4, got {r}")),
    }
}

/// Newton's identities solved for `p_r`, `1 <= r <= 4`, from `b_1 ..= b_r`.
pub fn lemma1_power_sum<T: Scalar>(r: usize, coeffs: &[T]) -> Result<T> {
    if !(1..=4).contains(&r) {
        return domain(format!("explicit formulas exist only for r in 1..=4, got {r}"));
    }
    if coeffs.len() < r {
        return domain(format!("p_{r} needs n >= {r}, got {} coefficients", coeffs.len()));
    }
    let k = |v: i64| T::from_int(v);
    let b1 = coeffs[0].clone();
    let b = |i: usize| coeffs[i - 1].clone();
    Ok(match r {
        1 => b1,
        2 => b1.clone() * b1 - k(2) * b(2),
        3 => b1.clone().powu(3) - k(3) * b1 * b(2) + k(3) * b(3),
        _ => {
            b1.clone().powu(4) - k(4) * b1.clone() * b1.clone() * b(2) + k(2) * b(2) * b(2)
                + k(4) * b1 * b(3)
                - k(4) * b(4)
        }
    })
}
