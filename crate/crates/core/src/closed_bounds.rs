//! Closed-form bounds on extreme zeros of Jacobi, Gegenbauer and Laguerre
//! polynomials, each tagged with the quantity it bounds and whether it is
//! claimed for the given parameters.

use std::fmt;

use crate::error::Result;
use crate::poly_core::{gegenbauer_as_jacobi, GegenbauerParams, JacobiParams, LaguerreParams};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    OneMinusXnn,
    OnePlusX1n,
    OneMinusXnnSq,
    SmallestLaguerreZero,
}

impl Quantity {
    pub fn label(self) -> &'static str {
        match self {
            Quantity::OneMinusXnn => "ONE_MINUS_XNN",
            Quantity::OnePlusX1n => "ONE_PLUS_X1N",
            Quantity::OneMinusXnnSq => "ONE_MINUS_XNN_SQ",
            Quantity::SmallestLaguerreZero => "SMALLEST_LAGUERRE_ZERO",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// The true quantity is strictly below the value.
    Upper,
    /// The true quantity is strictly above the value.
    Lower,
}

impl Direction {
    pub fn label(self) -> &'static str {
        match self {
            Direction::Upper => "UPPER",
            Direction::Lower => "LOWER",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Thm1E1,
    Thm1E2,
    Thm2E1,
    Thm2E2,
    Thm3,
    Cor1,
    ThmA,
    CorA,
    ThmB,
    ThmC,
    /// Sharper intermediate form from the derivation of `ThmC` (experimental).
    ThmCIntermediate,
    GuptaMuldoon,
    DriverJordaan,
    K2Bound,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::Thm1E1 => "THM1_E1",
            Source::Thm1E2 => "THM1_E2",
            Source::Thm2E1 => "THM2_E1",
            Source::Thm2E2 => "THM2_E2",
            Source::Thm3 => "THM3",
            Source::Cor1 => "COR1",
            Source::ThmA => "THM_A",
            Source::CorA => "COR_A",
            Source::ThmB => "THM_B",
            Source::ThmC => "THM_C",
            Source::ThmCIntermediate => "THM_C_INTERMEDIATE",
            Source::GuptaMuldoon => "GUPTA_MULDOON",
            Source::DriverJordaan => "DRIVER_JORDAAN",
            Source::K2Bound => "K2_BOUND",
        }
    }

    pub fn is_experimental(self) -> bool {
        matches!(self, Source::ThmCIntermediate)
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    /// Claimed, but the inequality degenerates to equality here.
    Boundary(String),
    NotApplicable(String),
}

impl Applicability {
    pub fn is_applicable(&self) -> bool {
        !matches!(self, Applicability::NotApplicable(_))
    }

    /// Whether strict inequality is asserted.
    pub fn is_strict(&self) -> bool {
        matches!(self, Applicability::Applicable)
    }

    pub fn reason(&self) -> &str {
        match self {
            Applicability::Applicable => "",
            Applicability::Boundary(r) | Applicability::NotApplicable(r) => r,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue<T> {
    pub value: T,
    pub quantity: Quantity,
    pub direction: Direction,
    pub source: Source,
    pub applicability: Applicability,
}

impl<T: Scalar> BoundValue<T> {
    pub fn applicable(&self) -> bool {
        self.applicability.is_applicable()
    }

    /// Whether `truth` is consistent with the bound (strictly, unless the
    /// bound is flagged as a boundary case).
    pub fn holds_for(&self, truth: f64) -> bool {
        let v = self.value.to_f64();
        match (self.direction, self.applicability.is_strict()) {
            (Direction::Upper, true) => truth < v,
            (Direction::Upper, false) => truth <= v,
            (Direction::Lower, true) => truth > v,
            (Direction::Lower, false) => truth >= v,
        }
    }
}

fn k<T: Scalar>(v: i64) -> T {
    T::from_int(v)
}

fn min_degree(n: usize, min: usize) -> Applicability {
    if n >= min {
        Applicability::Applicable
    } else {
        Applicability::NotApplicable(format!("requires n >= {min}"))
    }
}

fn upper<T>(value: T, quantity: Quantity, source: Source, applicability: Applicability) -> BoundValue<T> {
    BoundValue { value, quantity, direction: Direction::Upper, source, applicability }
}

fn thm1_value<T: Scalar>(p: &JacobiParams<T>, denom_fraction: T) -> T {
    let (a, b, t) = (p.a(), p.b(), p.t());
    k::<T>(4) * a.clone() * (a.clone() + k(1)) * (a.clone() + k(3))
        / ((k::<T>(5) * a.clone() + k(6)) * (t + denom_fraction * a * b))
}

/// `1 - x_nn < 4(α+1)(α+2)(α+4) / ((5α+11)[n(n+α+β+1) + (α+1)(β+1)/3])`, `n >= 4`.
pub fn thm1_e1<T: Scalar>(p: &JacobiParams<T>) -> BoundValue<T> {
    upper(thm1_value(p, T::ratio(1, 3)), Quantity::OneMinusXnn, Source::Thm1E1, min_degree(p.n, 4))
}

/// The same with `(α+1)(β+1)/2`, claimed when `n >= max{4, α+β+3}` or `β <= 4α+7`.
pub fn thm1_e2<T: Scalar>(p: &JacobiParams<T>) -> BoundValue<T> {
    let applicability = if p.n < 4 {
        Applicability::NotApplicable("requires n >= 4".into())
    } else {
        let n = T::from_usize(p.n);
        let by_degree = n >= p.alpha.clone() + p.beta.clone() + k(3);
        let by_beta = p.beta <= k::<T>(4) * p.alpha.clone() + k(7);
        if by_degree || by_beta {
            Applicability::Applicable
        } else {
            Applicability::NotApplicable("requires n >= max{4, alpha+beta+3} or beta <= 4 alpha + 7".into())
        }
    };
    upper(thm1_value(p, T::ratio(1, 2)), Quantity::OneMinusXnn, Source::Thm1E2, applicability)
}

fn mirrored<T: Scalar>(mut bound: BoundValue<T>, source: Source) -> BoundValue<T> {
    bound.quantity = Quantity::OnePlusX1n;
    bound.source = source;
    if let Applicability::NotApplicable(reason) = &bound.applicability {
        let swapped = reason.replace("alpha", "\u{0}").replace("beta", "alpha").replace('\u{0}', "beta");
        bound.applicability = Applicability::NotApplicable(swapped);
    }
    bound
}

/// `1 + x_1n` bound obtained from [`thm1_e1`] through the reflection `α <-> β`.
pub fn thm2_e1<T: Scalar>(p: &JacobiParams<T>) -> BoundValue<T> {
    mirrored(thm1_e1(&p.swapped()), Source::Thm2E1)
}

pub fn thm2_e2<T: Scalar>(p: &JacobiParams<T>) -> BoundValue<T> {
    mirrored(thm1_e2(&p.swapped()), Source::Thm2E2)
}

fn lam_terms<T: Scalar>(g: &GegenbauerParams<T>) -> (T, T) {
    let n = T::from_usize(g.n);
    let two_lam = k::<T>(2) * g.lambda.clone();
    let nn = n.clone() * (n + two_lam.clone());
    (two_lam, nn)
}

/// `1 - x_nn(λ) < (2λ+1)(2λ+3)(2λ+7) / ((10λ+17)[n(n+2λ) + (2λ+1)²/8])`, `n >= 4`.
pub fn thm3<T: Scalar>(g: &GegenbauerParams<T>) -> BoundValue<T> {
    let (tl, nn) = lam_terms(g);
    let value = (tl.clone() + k(1)) * (tl.clone() + k(3)) * (tl.clone() + k(7))
        / ((k::<T>(5) * tl.clone() + k(17)) * (nn + (tl.clone() + k(1)) * (tl + k(1)) / k(8)));
    upper(value, Quantity::OneMinusXnn, Source::Thm3, min_degree(g.n, 4))
}

/// Twice [`thm3`], as a bound on `1 - x_nn(λ)²`.
pub fn cor1<T: Scalar>(g: &GegenbauerParams<T>) -> BoundValue<T> {
    let base = thm3(g);
    upper(k::<T>(2) * base.value, Quantity::OneMinusXnnSq, Source::Cor1, base.applicability)
}

/// Earlier Euler-Rayleigh bound on `1 - x_nn(α, β)`, `n >= 3`.
pub fn thm_a<T: Scalar>(p: &JacobiParams<T>) -> BoundValue<T> {
    let n = T::from_usize(p.n);
    let (al, be) = (p.alpha.clone(), p.beta.clone());
    let ap1 = al.clone() + k(1);
    let f1 = n.clone() + al.clone() + k(1);
    let f2 = n.clone() + al.clone() + be.clone() + k(1);
    let inner = ap1.clone() * (k::<T>(2) * n + be - k(1))
        / (f1.clone() * f2.clone() - ap1.clone() * (al.clone() + k(2)));
    let value = k::<T>(2) * ap1 * (al + k(3)) / (f1 * f2 * (k::<T>(2) - inner));
    upper(value, Quantity::OneMinusXnn, Source::ThmA, min_degree(p.n, 3))
}

/// Gegenbauer specialisation of [`thm_a`], `n >= 3`.
pub fn cor_a<T: Scalar>(g: &GegenbauerParams<T>) -> BoundValue<T> {
    let n = T::from_usize(g.n);
    let (tl, _) = lam_terms(g);
    let f1 = n.clone() + tl.clone();
    let f2 = k::<T>(2) * n.clone() + tl.clone() + k(1);
    let inner = (tl.clone() + k(1)) * (k::<T>(4) * n + tl.clone() - k(3))
        / (k::<T>(2) * f1.clone() * f2.clone() - (tl.clone() + k(1)) * (tl.clone() + k(3)));
    let value = (tl.clone() + k(1)) * (tl + k(5)) / (f1 * f2 * (k::<T>(2) - inner));
    upper(value, Quantity::OneMinusXnn, Source::CorA, min_degree(g.n, 3))
}

/// Earlier bound on `1 - x_nn(λ)²`, `n >= 3`.
pub fn thm_b<T: Scalar>(g: &GegenbauerParams<T>) -> BoundValue<T> {
    let (tl, nn) = lam_terms(g);
    let lam = g.lambda.clone();
    let s1 = tl.clone() + k(1);
    let s3 = tl.clone() + k(3);
    let tail = k::<T>(2) * (lam + k(1)) * s1.clone() * s1.clone() * s3.clone()
        / (nn.clone() + k::<T>(2) * s1.clone() * s3);
    let value = s1.clone() * (tl + k(5)) / (k::<T>(2) * nn + s1 + tail);
    upper(value, Quantity::OneMinusXnnSq, Source::ThmB, min_degree(g.n, 3))
}

/// `1 - x_nn(λ)² > (2λ+1)(2λ+9) / (4n(n+2λ) + (2λ+1)(2λ+5))`.
pub fn thm_c<T: Scalar>(g: &GegenbauerParams<T>) -> BoundValue<T> {
    let (tl, nn) = lam_terms(g);
    let s1 = tl.clone() + k(1);
    let value = s1.clone() * (tl.clone() + k(9)) / (k::<T>(4) * nn + s1 * (tl + k(5)));
    let applicability = if g.n == 1 {
        Applicability::Boundary("n = 1: the single zero is 0 and the bound equals 1".into())
    } else {
        Applicability::Applicable
    };
    BoundValue {
        value,
        quantity: Quantity::OneMinusXnnSq,
        direction: Direction::Lower,
        source: Source::ThmC,
        applicability,
    }
}

/// Lower bound on `1 - x_nn(λ)²` from Laguerre's inequality before the last
/// weakening step: `x² <= (n-1)(n+2λ+1) / ((n+λ)² + 3λ + 5/4 + 3(λ+1/2)²/(n-1))`.
/// Experimental, non-strict; needs `n >= 2`.
pub fn thm_c_intermediate<T: Scalar>(g: &GegenbauerParams<T>) -> BoundValue<T> {
    let n = T::from_usize(g.n);
    let lam = g.lambda.clone();
    let applicability = if g.n >= 2 {
        Applicability::Boundary("experimental; inequality is not strict".into())
    } else {
        Applicability::NotApplicable("requires n >= 2".into())
    };
    let value = if g.n >= 2 {
        let nm1 = n.clone() - k(1);
        let half = lam.clone() + T::ratio(1, 2);
        let denom = (n.clone() + lam.clone()) * (n.clone() + lam.clone())
            + k::<T>(3) * lam.clone()
            + T::ratio(5, 4)
            + k::<T>(3) * half.clone() * half / nm1.clone();
        k::<T>(1) - nm1 * (n + k::<T>(2) * lam + k(1)) / denom
    } else {
        T::zero()
    };
    BoundValue {
        value,
        quantity: Quantity::OneMinusXnnSq,
        direction: Direction::Lower,
        source: Source::ThmCIntermediate,
        applicability,
    }
}

/// `x_1n(α) < (α+1)(α+2)(α+4)(2n+α+1) / ((5α+11)n(n+α+1) + (α+1)²(α+2))`.
/// At `n = 1` the bound equals the zero `α + 1`.
pub fn gupta_muldoon<T: Scalar>(l: &LaguerreParams<T>) -> BoundValue<T> {
    let n = T::from_usize(l.n);
    let a = l.alpha.clone() + k(1);
    let value = a.clone() * (a.clone() + k(1)) * (a.clone() + k(3)) * (k::<T>(2) * n.clone() + a.clone())
        / ((k::<T>(5) * a.clone() + k(6)) * n.clone() * (n + a.clone()) + a.clone() * a.clone() * (a + k(1)));
    let applicability = if l.n == 1 {
        Applicability::Boundary("n = 1: the bound equals the zero alpha + 1".into())
    } else {
        Applicability::Applicable
    };
    upper(value, Quantity::SmallestLaguerreZero, Source::GuptaMuldoon, applicability)
}

/// `1 - x_nn < 2(α+1)(α+3) / (2n(n+α+β+1) + (α+1)(α+β+2))`, `n >= 3`.
pub fn driver_jordaan<T: Scalar>(p: &JacobiParams<T>) -> BoundValue<T> {
    let a = p.a();
    let value = k::<T>(2) * a.clone() * (a.clone() + k(2))
        / (k::<T>(2) * p.t() + a * (p.alpha.clone() + p.beta.clone() + k(2)));
    upper(value, Quantity::OneMinusXnn, Source::DriverJordaan, min_degree(p.n, 3))
}

/// Simplified `k = 2` Euler-Rayleigh bound
/// `2(α+1)(α+3) / (2n(n+α+β+1) + (α+1)(β+1))`, `n >= 3`.
pub fn k2_bound<T: Scalar>(p: &JacobiParams<T>) -> BoundValue<T> {
    let (a, b) = (p.a(), p.b());
    let value = k::<T>(2) * a.clone() * (a.clone() + k(2)) / (k::<T>(2) * p.t() + a * b);
    upper(value, Quantity::OneMinusXnn, Source::K2Bound, min_degree(p.n, 3))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioDecomposition<T> {
    pub rho: T,
    pub phi: T,
    /// `rho * phi`, the ratio of the upper to the lower bound on `1 - x_nn(λ)²`.
    pub r: T,
}

/// `ρ(λ) = 8(2λ+3)(2λ+7) / ((2λ+9)(10λ+17))`.
pub fn rho<T: Scalar>(lambda: &T) -> T {
    let tl = k::<T>(2) * lambda.clone();
    k::<T>(8) * (tl.clone() + k(3)) * (tl.clone() + k(7)) / ((tl.clone() + k(9)) * (k::<T>(5) * tl + k(17)))
}

/// `φ(λ, n) = (n(n+2λ) + (2λ+1)(2λ+5)/4) / (n(n+2λ) + (2λ+1)²/8)`.
pub fn phi<T: Scalar>(g: &GegenbauerParams<T>) -> T {
    let (tl, nn) = lam_terms(g);
    let s1 = tl.clone() + k(1);
    (nn.clone() + s1.clone() * (tl + k(5)) / k(4)) / (nn + s1.clone() * s1 / k(8))
}

pub fn ratio_decomposition<T: Scalar>(g: &GegenbauerParams<T>) -> RatioDecomposition<T> {
    let rho = rho(&g.lambda);
    let phi = phi(g);
    RatioDecomposition { r: rho.clone() * phi.clone(), rho, phi }
}

/// Limit of `n² (thm_a - thm1_e1)` as `n -> ∞`: `(α+1)³ / (5α+11)`.
pub fn asymptotic_gap<T: Scalar>(alpha: &T) -> T {
    let a = alpha.clone() + k(1);
    a.clone() * a.clone() * a / (k::<T>(5) * alpha.clone() + k(11))
}

/// Every Jacobi bound, in a fixed order.
pub fn jacobi_bounds<T: Scalar>(p: &JacobiParams<T>) -> Vec<BoundValue<T>> {
    vec![thm1_e1(p), thm1_e2(p), thm2_e1(p), thm2_e2(p), thm_a(p), driver_jordaan(p), k2_bound(p)]
}

/// Every Gegenbauer bound, in a fixed order.
pub fn gegenbauer_bounds<T: Scalar>(g: &GegenbauerParams<T>) -> Result<Vec<BoundValue<T>>> {
    gegenbauer_as_jacobi(g)?;
    Ok(vec![thm3(g), cor1(g), cor_a(g), thm_b(g), thm_c(g), thm_c_intermediate(g)])
}

pub fn laguerre_bounds<T: Scalar>(l: &LaguerreParams<T>) -> Vec<BoundValue<T>> {
    vec![gupta_muldoon(l)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_rational, Rational};
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn jp(n: usize, a: &str, b: &str) -> JacobiParams<Rational> {
        JacobiParams::new(n, q(a), q(b)).unwrap()
    }

    fn gp(n: usize, l: &str) -> GegenbauerParams<Rational> {
        GegenbauerParams::new(n, q(l)).unwrap()
    }

    // Largest Legendre-4 zero.
    fn x44() -> f64 {
        ((15.0 + 2.0 * 30f64.sqrt()) / 35.0).sqrt()
    }

    #[test]
    fn thm1_legendre4() {
        let p = jp(4, "0", "0");
        let e1 = thm1_e1(&p);
        let e2 = thm1_e2(&p);
        assert_eq!(e1.value, q("96/671"));
        assert_eq!(e2.value, q("64/451"));
        assert!((e2.value.to_f64() - 0.141907).abs() < 1e-6);
        assert!(e1.applicable() && e2.applicable());
        assert!(e1.value > e2.value);
        assert!(e1.holds_for(1.0 - x44()));
        assert_eq!(e1.direction, Direction::Upper);
    }

    #[test]
    fn thm1_small_degree_inapplicable() {
        let b = thm1_e1(&jp(3, "0", "0"));
        assert!(!b.applicable());
        assert!(!thm1_e2(&jp(3, "0", "0")).applicable());
    }

    #[test]
    fn theorem1_e2_predicate() {
        assert!(!thm1_e2(&jp(4, "0", "40")).applicable());
        let wide = thm1_e2(&jp(50, "0", "40"));
        assert!(wide.applicable());
        assert!((wide.value.to_f64() - 32.0 / (11.0 * (50.0 * 91.0 + 20.5))).abs() < 1e-15);
        assert!((wide.value.to_f64() - 6.36e-4).abs() < 1e-6);
        // Exactly on the boundary beta = 4 alpha + 7.
        assert!(thm1_e2(&jp(4, "1", "11")).applicable());
        assert!(!thm1_e2(&jp(4, "1", "111/10")).applicable());
        // Exactly on the degree boundary n = alpha + beta + 3.
        assert!(thm1_e2(&jp(43, "0", "40")).applicable());
        assert!(!thm1_e2(&jp(42, "0", "40")).applicable());
    }

    #[test]
    fn theorem2_mirrors() {
        let sym = jp(4, "0", "0");
        assert_eq!(thm2_e1(&sym).value, thm1_e1(&sym).value);
        assert_eq!(thm2_e2(&sym).value, thm1_e2(&sym).value);
        assert_eq!(thm2_e1(&jp(4, "2", "0")).value, thm1_e1(&jp(4, "0", "2")).value);
        let b = thm2_e2(&jp(4, "40", "0"));
        assert!(!b.applicable());
        assert!(b.applicability.reason().contains("alpha <= 4 beta"));
        assert_eq!(b.quantity, Quantity::OnePlusX1n);
        assert!(thm2_e2(&sym).holds_for(1.0 - x44()));
    }

    #[test]
    fn theorem3_and_corollary() {
        let g = gp(4, "1/2");
        assert_eq!(thm3(&g).value, q("64/451"));
        assert_eq!(thm3(&g).value, thm1_e2(&jp(4, "0", "0")).value);
        assert_eq!(cor1(&g).value, q("128/451"));
        let x = x44();
        assert!(cor1(&g).holds_for(1.0 - x * x));

        let cheb = gp(4, "1");
        assert_eq!(thm3(&cheb).value, q("135") / q("678.375"));
        let c = (std::f64::consts::PI / 5.0).cos();
        assert!(thm3(&cheb).holds_for(1.0 - c));
        assert!((cor1(&cheb).value.to_f64() - 0.398010).abs() < 1e-6);
        assert!(cor1(&cheb).holds_for(1.0 - c * c));
        assert!(thm3(&GegenbauerParams::new(4, -0.5 + 1e-9).unwrap()).value < 1e-7);
    }

    #[test]
    fn earlier_bounds() {
        let p = jp(4, "0", "0");
        assert_eq!(thm_a(&p).value, q("138/975"));
        assert!(thm_a(&p).holds_for(1.0 - x44()));
        assert_eq!(cor_a(&gp(4, "1/2")).value, thm_a(&p).value);
        let b = thm_b(&gp(4, "1/2"));
        assert!((b.value.to_f64() - 12.0 / (42.0 + 48.0 / 36.0)).abs() < 1e-15);
        assert!((b.value.to_f64() - 0.276923).abs() < 1e-6);
        let x = x44();
        assert!(b.holds_for(1.0 - x * x));
        assert!(!thm_a(&jp(2, "0", "0")).applicable());
    }

    #[test]
    fn theorem_c_examples() {
        let x = x44();
        let c = thm_c(&gp(4, "1/2"));
        assert_eq!(c.value, q("20/92"));
        assert_eq!(c.direction, Direction::Lower);
        assert!(c.holds_for(1.0 - x * x));
        let cheb = thm_c(&gp(4, "1"));
        assert_eq!(cheb.value, q("33/117"));
        let cz = (std::f64::consts::PI / 5.0).cos();
        assert!(cheb.holds_for(1.0 - cz * cz));
        let one = thm_c(&gp(1, "3/2"));
        assert_eq!(one.value, q("1"));
        assert!(!one.applicability.is_strict());
    }

    #[test]
    fn theorem_c_intermediate_is_sharper() {
        for (n, l) in [(4, "1/2"), (7, "1"), (12, "5/2")] {
            let g = gp(n, l);
            assert!(thm_c_intermediate(&g).value > thm_c(&g).value);
        }
        assert!(!thm_c_intermediate(&gp(1, "1")).applicable());
    }

    #[test]
    fn gupta_muldoon_examples() {
        let l2 = LaguerreParams::new(2, q("0")).unwrap();
        let b = gupta_muldoon(&l2);
        assert_eq!(b.value, q("40/68"));
        assert!(b.holds_for(2.0 - 2f64.sqrt()));
        let l1 = LaguerreParams::new(1, q("0")).unwrap();
        assert_eq!(gupta_muldoon(&l1).value, q("1"));
        assert!(!gupta_muldoon(&l1).applicability.is_strict());
        let l5 = LaguerreParams::new(5, q("0")).unwrap();
        assert_eq!(gupta_muldoon(&l5).value, q("88/332"));
        // At n = 1 the bound equals alpha + 1 for every alpha.
        for a in ["-1/2", "7/3", "10"] {
            let l = LaguerreParams::new(1, q(a)).unwrap();
            assert_eq!(gupta_muldoon(&l).value, q(a) + q("1"));
        }
    }

    #[test]
    fn earlier_bounds_are_weaker() {
        let p = jp(4, "0", "0");
        assert_eq!(driver_jordaan(&p).value, q("6/42"));
        assert_eq!(k2_bound(&p).value, q("6/41"));
        assert!(driver_jordaan(&p).value > thm1_e2(&p).value);
        assert!(!k2_bound(&jp(2, "0", "0")).applicable());
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(rho(&q("0")), q("168/153"));
        assert!(rho(&1000.0) > 1.59 && rho(&1000.0) < 1.6);
        let d = ratio_decomposition(&GegenbauerParams::new(1000, 1.0).unwrap());
        assert!((d.phi - 1.0).abs() < 1e-4);
        assert_eq!(rho(&q("-1/2")), q("1"));
    }

    fn lam() -> impl Strategy<Value = Rational> {
        (-49i64..2000, 1i64..5).prop_map(|(p, d)| Rational::new(p.into(), (100 * d).into()))
    }

    fn par() -> impl Strategy<Value = Rational> {
        (-99i64..2000, 1i64..5).prop_map(|(p, d)| Rational::new(p.into(), (100 * d).into()))
    }

    proptest! {
        #[test]
        fn specialisations_exact(n in 1usize..60, l in lam()) {
            let g = GegenbauerParams::new(n, l).unwrap();
            let p = gegenbauer_as_jacobi(&g).unwrap();
            prop_assert_eq!(thm3(&g).value, thm1_e2(&p).value);
            prop_assert_eq!(cor1(&g).value, thm3(&g).value * q("2"));
            prop_assert_eq!(cor_a(&g).value, thm_a(&p).value);
            let d = ratio_decomposition(&g);
            prop_assert_eq!(d.r, cor1(&g).value / thm_c(&g).value);
        }

        #[test]
        fn orderings(n in 4usize..80, al in par(), be in par()) {
            let p = JacobiParams::new(n, al, be).unwrap();
            prop_assert!(thm1_e2(&p).value < thm1_e1(&p).value);
            prop_assert!(k2_bound(&p).value > driver_jordaan(&p).value);
            for b in jacobi_bounds(&p) {
                prop_assert!(b.value.is_positive_value());
            }
        }

        #[test]
        fn k2_display_weakens_bracket(n in 3usize..40, al in par(), be in par()) {
            let p = JacobiParams::new(n, al, be).unwrap();
            let (_, hi) = crate::euler_rayleigh::extreme_zero_bracket(&p, 2).unwrap();
            prop_assert!(k2_bound(&p).value > hi);
        }

        #[test]
        fn rho_in_range(l in lam()) {
            let r = rho(&l);
            prop_assert!(r > q("1") && r < q("8/5"));
        }
    }
}
