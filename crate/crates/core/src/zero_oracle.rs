//! Ground-truth zeros of Jacobi, Gegenbauer and Laguerre polynomials.
//!
//! Zeros are the eigenvalues of the symmetric tridiagonal Jacobi matrix of
//! the three-term recurrence. Each is isolated by bisection on Sturm counts,
//! polished by Newton steps on the recurrence, and certified by a sign change
//! of the polynomial together with a Sturm count of exactly one eigenvalue
//! in `[x - err, x + err]`.

use crate::error::{domain, Error, Result};
use crate::poly_core::{
    gegenbauer_as_jacobi, jacobi_jet, laguerre_jet, shifted_series, GegenbauerParams, JacobiParams,
    LaguerreParams,
};
use crate::scalar::Scalar;

pub const MAX_DEGREE: usize = 200;

/// Upper limit on the certified error (relative to `max(1, |x|)`).
pub const MAX_CERTIFIED_ERROR: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Jacobi,
    Gegenbauer,
    Laguerre,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Jacobi => "jacobi",
            Family::Gegenbauer => "gegenbauer",
            Family::Laguerre => "laguerre",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyParams {
    Jacobi(JacobiParams<f64>),
    Gegenbauer(GegenbauerParams<f64>),
    Laguerre(LaguerreParams<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    /// Strictly increasing.
    pub zeros: Vec<f64>,
    /// Largest certified error over all zeros. For Laguerre zeros above 1 the
    /// certificate is relative to the zero.
    pub certified_abs_error: f64,
    pub family: Family,
    pub params: FamilyParams,
}

impl ZeroSet {
    pub fn largest(&self) -> f64 {
        *self.zeros.last().expect("zero set is never empty")
    }

    pub fn smallest(&self) -> f64 {
        self.zeros[0]
    }
}

struct SymTridiagonal {
    diag: Vec<f64>,
    /// Squared off-diagonal entries; `off_sq[i]` couples rows `i` and `i + 1`.
    off_sq: Vec<f64>,
}

impl SymTridiagonal {
    fn jacobi(n: usize, alpha: f64, beta: f64) -> Self {
        let s = alpha + beta;
        let diag = (0..n)
            .map(|k| {
                if k == 0 {
                    (beta - alpha) / (s + 2.0)
                } else {
                    let c = 2.0 * k as f64 + s;
                    (beta * beta - alpha * alpha) / (c * (c + 2.0))
                }
            })
            .collect();
        let off_sq = (1..n)
            .map(|k| {
                let kf = k as f64;
                let c = 2.0 * kf + s;
                if k == 1 {
                    // (k + s)/(c - 1) = 1 at k = 1; avoids 0/0 when s = -1.
                    4.0 * (1.0 + alpha) * (1.0 + beta) / (c * c * (c + 1.0))
                } else {
                    4.0 * kf * (kf + alpha) * (kf + beta) * (kf + s) / (c * c * (c + 1.0) * (c - 1.0))
                }
            })
            .collect();
        SymTridiagonal { diag, off_sq }
    }

    fn laguerre(n: usize, alpha: f64) -> Self {
        let diag = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
        let off_sq = (1..n).map(|k| k as f64 * (k as f64 + alpha)).collect();
        SymTridiagonal { diag, off_sq }
    }

    fn len(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x`.
    fn count_below(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE * self.off_sq.iter().copied().fold(1.0, f64::max);
        let mut count = 0;
        let mut d = self.diag[0] - x;
        for i in 0..self.len() {
            if i > 0 {
                d = self.diag[i] - x - self.off_sq[i - 1] / d;
            }
            if d.abs() < pivmin {
                d = -pivmin;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut r = 0.0;
            if i > 0 {
                r += self.off_sq[i - 1].sqrt();
            }
            if i + 1 < n {
                r += self.off_sq[i].sqrt();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        let pad = 1e-12 * lo.abs().max(hi.abs()).max(1.0);
        (lo - pad, hi + pad)
    }

    /// Bracket `[lo, hi]` of the `index`-th smallest eigenvalue, shrunk until
    /// adjacent floats.
    fn bisect(&self, index: usize, bounds: (f64, f64)) -> (f64, f64) {
        let (mut lo, mut hi) = bounds;
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return (lo, hi);
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return domain(format!("degree {n} exceeds the oracle cap of {MAX_DEGREE}"));
    }
    Ok(())
}

/// Eigenvalues of `matrix` refined and certified against `jet`, which returns
/// the polynomial value and first derivative.
fn certified_zeros(
    matrix: &SymTridiagonal,
    jet: impl Fn(f64) -> (f64, f64),
    relative: bool,
) -> Result<(Vec<f64>, f64)> {
    let n = matrix.len();
    let bounds = matrix.gershgorin();
    let mut zeros = Vec::with_capacity(n);
    let mut worst = 0.0_f64;
    for i in 0..n {
        let (lo, hi) = matrix.bisect(i, bounds);
        let mut x = 0.5 * (lo + hi);
        let slack = 1e-15 * x.abs().max(1.0);
        for _ in 0..4 {
            let (v, d) = jet(x);
            if v == 0.0 || d == 0.0 {
                break;
            }
            let next = x - v / d;
            if !(next >= lo - slack && next <= hi + slack) || jet(next).0.abs() >= v.abs() {
                break;
            }
            x = next;
        }
        let err = certify(matrix, &jet, x, relative).ok_or_else(|| {
            Error::Certification(format!("zero #{i} near {x:e} has no sign change within tolerance"))
        })?;
        worst = worst.max(err);
        zeros.push(x);
    }
    if zeros.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Certification("zeros are not strictly increasing".into()));
    }
    Ok((zeros, worst))
}

fn certify(matrix: &SymTridiagonal, jet: &impl Fn(f64) -> (f64, f64), x: f64, relative: bool) -> Option<f64> {
    let scale = if relative { x.abs().max(1.0) } else { 1.0 };
    let mut delta = 4.0 * f64::EPSILON * scale;
    while delta <= MAX_CERTIFIED_ERROR * scale {
        let (lo, hi) = (x - delta, x + delta);
        let (vl, vh) = (jet(lo).0, jet(hi).0);
        let sign_change = vl != 0.0 && vh != 0.0 && (vl < 0.0) != (vh < 0.0);
        if sign_change && matrix.count_below(hi) - matrix.count_below(lo) == 1 {
            return Some(delta);
        }
        delta *= 2.0;
    }
    None
}

pub fn jacobi_zeros<T: Scalar>(p: &JacobiParams<T>) -> Result<ZeroSet> {
    check_degree(p.n)?;
    let pf = p.to_f64();
    let (n, alpha, beta) = (pf.n, pf.alpha, pf.beta);
    let matrix = SymTridiagonal::jacobi(n, alpha, beta);
    let jet = |x: f64| {
        let j = jacobi_jet(n, alpha, beta, x, 1);
        (j[0], j[1])
    };
    let (zeros, err) = certified_zeros(&matrix, jet, false)?;
    Ok(ZeroSet { zeros, certified_abs_error: err, family: Family::Jacobi, params: FamilyParams::Jacobi(pf) })
}

/// Zeros of `P_n^(λ)`, symmetrised about the origin.
pub fn gegenbauer_zeros<T: Scalar>(g: &GegenbauerParams<T>) -> Result<ZeroSet> {
    let p = gegenbauer_as_jacobi(g)?;
    let set = jacobi_zeros(&p)?;
    let n = set.zeros.len();
    let zeros: Vec<f64> = (0..n).map(|i| 0.5 * (set.zeros[i] - set.zeros[n - 1 - i])).collect();
    // Averaging moves each zero by at most half the asymmetry, itself bounded
    // by twice the certificate.
    let shift = (0..n).map(|i| (zeros[i] - set.zeros[i]).abs()).fold(0.0, f64::max);
    Ok(ZeroSet {
        zeros,
        certified_abs_error: set.certified_abs_error + shift,
        family: Family::Gegenbauer,
        params: FamilyParams::Gegenbauer(g.to_f64()),
    })
}

pub fn laguerre_zeros<T: Scalar>(l: &LaguerreParams<T>) -> Result<ZeroSet> {
    check_degree(l.n)?;
    let lf = l.to_f64();
    let (n, alpha) = (lf.n, lf.alpha);
    let matrix = SymTridiagonal::laguerre(n, alpha);
    let jet = |x: f64| {
        let j = laguerre_jet(n, alpha, x, 1);
        (j[0], j[1])
    };
    let (zeros, err) = certified_zeros(&matrix, jet, true)?;
    Ok(ZeroSet { zeros, certified_abs_error: err, family: Family::Laguerre, params: FamilyParams::Laguerre(lf) })
}

/// The largest zero expressed through `y = 1 - x_nn` and `z = 2 / y`,
/// computed without forming `1 - x` by subtraction of nearly equal numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftedZero {
    pub one_minus_x: f64,
    pub z: f64,
    /// Certified relative error shared by `one_minus_x` and `z`.
    pub rel_error: f64,
}

/// Newton refinement in the shifted variable `y = 1 - x` on the terminating
/// hypergeometric series, seeded by the eigenvalue oracle. The refinement is
/// kept only where the series is better conditioned than `1 - x` itself,
/// which is the case when `x_nn` is close to 1.
pub fn largest_zero_shifted<T: Scalar>(p: &JacobiParams<T>) -> Result<ShiftedZero> {
    let pf = p.to_f64();
    let (n, alpha, beta) = (pf.n, pf.alpha, pf.beta);
    if n == 1 {
        let a = alpha + 1.0;
        let t = alpha + beta + 2.0;
        return Ok(ShiftedZero { one_minus_x: 2.0 * a / t, z: t / a, rel_error: f64::EPSILON });
    }
    let set = jacobi_zeros(&pf)?;
    let y0 = 1.0 - set.largest();
    let eigen_error = set.certified_abs_error + f64::EPSILON;
    let direct = ShiftedZero { one_minus_x: y0, z: 2.0 / y0, rel_error: eigen_error / y0 + f64::EPSILON };
    let series = |y: f64| shifted_series(n, alpha, beta, y);

    let (_, d0, e0) = series(y0);
    if d0 == 0.0 || e0 / d0.abs() >= eigen_error {
        return Ok(direct);
    }
    let mut y = y0;
    for _ in 0..50 {
        let (v, d, _) = series(y);
        if v == 0.0 || d == 0.0 {
            break;
        }
        let step = v / d;
        let next = y - step;
        if !(next > 0.0) {
            break;
        }
        y = next;
        if step.abs() <= 0.5 * f64::EPSILON * y {
            break;
        }
    }
    if (y - y0).abs() > eigen_error + f64::EPSILON + 2.0 * e0 / d0.abs() {
        return Err(Error::Certification(format!(
            "shifted Newton moved from {y0:e} to {y:e}, outside the eigenvalue certificate"
        )));
    }
    let mut rel = 2.0 * f64::EPSILON;
    while rel <= MAX_CERTIFIED_ERROR && rel * y < eigen_error {
        let (lo, _, elo) = series(y * (1.0 - rel));
        let (hi, _, ehi) = series(y * (1.0 + rel));
        // Signs count only where they exceed the evaluation error.
        if lo.abs() > elo && hi.abs() > ehi && (lo < 0.0) != (hi < 0.0) {
            return Ok(ShiftedZero { one_minus_x: y, z: 2.0 / y, rel_error: rel });
        }
        rel *= 2.0;
    }
    Ok(direct)
}

/// `z_n = 2 / (1 - x_nn)`.
pub fn largest_transformed_zero<T: Scalar>(p: &JacobiParams<T>) -> Result<f64> {
    largest_zero_shifted(p).map(|s| s.z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn jac(n: usize, a: f64, b: f64) -> ZeroSet {
        jacobi_zeros(&JacobiParams::new(n, a, b).unwrap()).unwrap()
    }

    #[test]
    fn legendre_closed_forms() {
        let z2 = jac(2, 0.0, 0.0);
        let r = 1.0 / 3f64.sqrt();
        assert!((z2.zeros[0] + r).abs() < 1e-14 && (z2.zeros[1] - r).abs() < 1e-14);
        let z4 = jac(4, 0.0, 0.0);
        let want = ((15.0 + 2.0 * 30f64.sqrt()) / 35.0).sqrt();
        assert!((z4.largest() - want).abs() < 1e-15);
        assert!((z4.largest() - 0.8611363116).abs() < 1e-10);
        assert!(z4.certified_abs_error <= 1e-13);
    }

    #[test]
    fn chebyshev_second_kind() {
        let g = GegenbauerParams::new(3, 1.0).unwrap();
        let z = gegenbauer_zeros(&g).unwrap();
        let h = 2f64.sqrt() / 2.0;
        assert!((z.zeros[0] + h).abs() < 1e-14);
        assert!(z.zeros[1].abs() < 1e-15);
        assert!((z.zeros[2] - h).abs() < 1e-14);
        let z4 = gegenbauer_zeros(&GegenbauerParams::new(4, 1.0).unwrap()).unwrap();
        assert!((z4.largest() - (std::f64::consts::PI / 5.0).cos()).abs() < 1e-14);
    }

    #[test]
    fn laguerre_closed_forms() {
        let one = laguerre_zeros(&LaguerreParams::new(1, 0.0).unwrap()).unwrap();
        assert!((one.zeros[0] - 1.0).abs() < 1e-15);
        let two = laguerre_zeros(&LaguerreParams::new(2, 0.0).unwrap()).unwrap();
        assert!((two.zeros[0] - (2.0 - 2f64.sqrt())).abs() < 1e-14);
        assert!((two.zeros[1] - (2.0 + 2f64.sqrt())).abs() < 1e-14);
        let shifted = laguerre_zeros(&LaguerreParams::new(2, 1.0).unwrap()).unwrap();
        assert!((shifted.zeros[0] - (3.0 - 3f64.sqrt())).abs() < 1e-14);
        assert!((shifted.zeros[1] - (3.0 + 3f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn transformed_zero_examples() {
        let z = largest_transformed_zero(&JacobiParams::new(4, 0.0, 0.0).unwrap()).unwrap();
        assert!((z - 14.402613260230).abs() < 1e-10);
        let z2 = largest_transformed_zero(&JacobiParams::new(2, 0.0, 0.0).unwrap()).unwrap();
        assert_relative_eq!(z2, 2.0 / (1.0 - 1.0 / 3f64.sqrt()), max_relative = 1e-15);
        assert!((z2 - 4.73205).abs() < 1e-5);
        let p1 = JacobiParams::new(1, 0.5, 3.0).unwrap();
        assert_relative_eq!(largest_transformed_zero(&p1).unwrap(), 5.5 / 1.5, max_relative = 1e-15);
    }

    #[test]
    fn shifted_zero_large_beta() {
        // As beta grows, (beta / 2)(1 - x_nn) approaches the smallest Laguerre zero.
        let lag = laguerre_zeros(&LaguerreParams::new(5, 0.0).unwrap()).unwrap().smallest();
        let s = largest_zero_shifted(&JacobiParams::new(5, 0.0, 1e6).unwrap()).unwrap();
        assert!(s.rel_error <= 1e-13);
        assert!((1e6 * s.one_minus_x / 2.0 / lag - 1.0).abs() < 1e-4);
    }

    #[test]
    fn rejects_large_degree() {
        assert!(jacobi_zeros(&JacobiParams::new(201, 0.0, 0.0).unwrap()).is_err());
        assert!(jacobi_zeros(&JacobiParams::new(200, 0.0, 0.0).unwrap()).is_ok());
    }

    #[test]
    fn extreme_parameters_certify() {
        for (n, a, b) in [(40, -0.9, 10.0), (40, 10.0, -0.9), (200, 5.0, 0.5), (37, -0.99, -0.99), (6, -0.5, -0.5)] {
            let z = jac(n, a, b);
            assert_eq!(z.zeros.len(), n);
            assert!(z.certified_abs_error <= 1e-13, "{n} {a} {b}: {}", z.certified_abs_error);
            assert!(z.smallest() > -1.0 && z.largest() < 1.0);
        }
        let l = laguerre_zeros(&LaguerreParams::new(20, 5.0).unwrap()).unwrap();
        assert!(l.smallest() > 0.0);
    }

    #[test]
    fn chebyshev_first_kind_all_zeros() {
        // alpha = beta = -1/2: zeros cos((2k - 1) pi / (2n)).
        let n = 9;
        let z = jac(n, -0.5, -0.5);
        for (i, x) in z.zeros.iter().enumerate() {
            let k = (n - i) as f64;
            let want = ((2.0 * k - 1.0) * std::f64::consts::PI / (2.0 * n as f64)).cos();
            assert!((x - want).abs() < 1e-14);
        }
    }

    #[test]
    fn interlacing_and_symmetry() {
        for (a, b) in [(0.0, 0.0), (-0.9, 2.5), (5.0, 10.0), (-0.5, 0.5)] {
            for n in 2..25 {
                let hi = jac(n, a, b);
                let lo = jac(n - 1, a, b);
                for i in 0..n - 1 {
                    assert!(hi.zeros[i] < lo.zeros[i] && lo.zeros[i] < hi.zeros[i + 1]);
                }
                let mirror = jac(n, b, a);
                let tol = hi.certified_abs_error + mirror.certified_abs_error;
                for i in 0..n {
                    assert!((hi.zeros[i] + mirror.zeros[n - 1 - i]).abs() <= tol.max(2e-16));
                }
            }
        }
        for n in 2..25 {
            let hi = laguerre_zeros(&LaguerreParams::new(n, 1.5).unwrap()).unwrap();
            let lo = laguerre_zeros(&LaguerreParams::new(n - 1, 1.5).unwrap()).unwrap();
            for i in 0..n - 1 {
                assert!(hi.zeros[i] < lo.zeros[i] && lo.zeros[i] < hi.zeros[i + 1]);
            }
        }
    }

    #[test]
    fn residuals_small() {
        for (n, a, b) in [(10, 0.0, 0.0), (20, 2.5, -0.5), (30, 10.0, 10.0)] {
            let z = jac(n, a, b);
            for &x in &z.zeros {
                let jet = jacobi_jet(n, a, b, x, 1);
                // Local scale: |P'(x)| times the spacing to the nearest zero.
                let local = jet[1].abs() * 1e-3;
                assert!(jet[0].abs() <= 1e-10 * local.max(1e-300), "{n} {a} {b} {x}");
            }
        }
    }
}
