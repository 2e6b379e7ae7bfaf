//! Truncated complex power series (jets) c₀ + c₁z + … + c_N z^N.
//!
//! Every binary operation truncates to the smaller operand order. Operations
//! that can break down numerically return [`Error`] instead of letting a
//! non-finite coefficient escape.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cplx, is_finite, Real};

/// Constant terms below this modulus are not accepted as divisors.
pub const DIVISION_PIVOT_TOL: f64 = 1e-12;
/// Largest constant term tolerated on the inner series of a composition.
pub const INNER_CONSTANT_TOL: f64 = 1e-14;
/// Slack allowed on the unit constant term required by `log_series`/`pow_real`.
pub const UNIT_CONSTANT_TOL: f64 = 1e-14;
/// Number of trailing coefficients used by the evaluation tail estimate.
const TAIL_WINDOW: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct TruncatedSeries<T> {
    coeffs: Vec<Complex<T>>,
}

/// Value of a jet at a point, with a crude estimate of the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation<T> {
    pub value: Complex<T>,
    pub tail_bound: T,
    pub reliable: bool,
}

impl<T: Real> TruncatedSeries<T> {
    pub fn new(coeffs: Vec<Complex<T>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Self::checked(coeffs)
    }

    pub fn from_real(coeffs: &[T]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| cplx(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex::new(T::zero(), T::zero()); order + 1],
        }
    }

    pub fn constant(c: Complex<T>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(cplx(T::one()), order)
    }

    /// The identity jet `z`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, cplx(T::one()), order)
    }

    /// `c·z^k`, or the zero jet when `k > order`.
    pub fn monomial(k: usize, c: Complex<T>, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex<T>> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the retained order.
    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Same jet carried to a larger order, padding with zeros.
    pub fn extend(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(self.order()) + 1, Complex::new(T::zero(), T::zero()));
        Self { coeffs }
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(usize, Complex<T>) -> Complex<T>) -> Self {
        Self {
            coeffs: self.coeffs.iter().enumerate().map(|(k, &a)| f(k, a)).collect(),
        }
    }

    /// Largest coefficient-wise modulus of `self − other` over the common order.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// `z·a′(z)`: coefficient k becomes k·c_k. Order is preserved.
    pub fn z_derivative(&self) -> Self {
        self.map_coeffs(|k, c| c * T::from_usize_lossy(k))
    }

    /// Divides by `z`, dropping c₀. The order drops by one.
    pub fn strip_z(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderExceeded {
                requested: 1,
                order: 0,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplies by `z`, raising the order by one.
    pub fn times_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex::new(T::zero(), T::zero()));
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Complex::new(T::zero(), T::zero()); n + 1];
        for (i, &a) in self.coeffs[..=n].iter().enumerate() {
            if a.re.is_zero() && a.im.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Quotient jet `self / divisor`.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let b0 = divisor.coeffs[0];
        if b0.norm() <= T::lit(DIVISION_PIVOT_TOL) {
            return Err(Error::ZeroConstantTerm {
                modulus: b0.norm().as_f64(),
            });
        }
        let n = self.order().min(divisor.order());
        let inv = b0.inv();
        let mut q: Vec<Complex<T>> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc = acc - divisor.coeffs[j] * q[k - j];
            }
            q.push(acc * inv);
        }
        Self::checked(q)
    }

    /// Jet of `self ∘ inner`; `inner` must vanish at the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let c0 = inner.coeffs[0];
        if c0.norm() > T::lit(INNER_CONSTANT_TOL) {
            return Err(Error::InnerConstantNonzero {
                modulus: c0.norm().as_f64(),
            });
        }
        let n = self.order().min(inner.order());
        let mut inner = inner.truncate(n);
        inner.coeffs[0] = Complex::new(T::zero(), T::zero());
        // Horner in the series algebra: acc ← acc·inner + c_k.
        let mut acc = Self::constant(self.coeffs[n], n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0] + self.coeffs[k];
        }
        Self::checked(acc.coeffs)
    }

    pub fn exp_series(&self) -> Result<Self> {
        let n = self.order();
        let mut b = Vec::with_capacity(n + 1);
        b.push(self.coeffs[0].exp());
        // k·b_k = Σ_{j=1..k} j·a_j·b_{k−j}
        for k in 1..=n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 1..=k {
                acc = acc + self.coeffs[j] * b[k - j] * T::from_usize_lossy(j);
            }
            b.push(acc / T::from_usize_lossy(k));
        }
        Self::checked(b)
    }

    /// Principal logarithm; requires c₀ = 1.
    pub fn log_series(&self) -> Result<Self> {
        self.require_unit_constant()?;
        let n = self.order();
        let mut b = Vec::with_capacity(n + 1);
        b.push(Complex::new(T::zero(), T::zero()));
        // k·b_k = k·a_k − Σ_{j=1..k−1} j·b_j·a_{k−j}
        for k in 1..=n {
            let mut acc = self.coeffs[k] * T::from_usize_lossy(k);
            for j in 1..k {
                acc = acc - b[j] * self.coeffs[k - j] * T::from_usize_lossy(j);
            }
            b.push(acc / T::from_usize_lossy(k));
        }
        Self::checked(b)
    }

    /// `self^alpha` on the principal branch, computed as `exp(alpha·log self)`.
    pub fn pow_real(&self, alpha: T) -> Result<Self> {
        self.log_series()?.scale(cplx(alpha)).exp_series()
    }

    /// Compositional inverse of a normalized jet `z + c₂z² + …`.
    ///
    /// Newton iteration `g ← g − (f∘g − w)/(f′∘g)`; each step doubles the
    /// number of correct coefficients.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        let tol = T::lit(INNER_CONSTANT_TOL);
        if n < 1 || self.coeffs[0].norm() > tol || (self.coeffs[1] - cplx(T::one())).norm() > tol
        {
            return Err(Error::NotNormalized);
        }
        let w = Self::identity(n);
        // f′ as a jet of the same order (top coefficient is unknown, set to 0).
        let mut fprime = Self::zero(n);
        for k in 0..n {
            fprime.coeffs[k] = self.coeffs[k + 1] * T::from_usize_lossy(k + 1);
        }
        let mut g = w.clone();
        let mut correct = 2usize;
        while correct <= n {
            let residual = &self.compose(&g)? - &w;
            let slope = fprime.compose(&g)?;
            g = &g - &residual.div(&slope)?;
            correct *= 2;
        }
        // One more pass absorbs the unknown top term of f′.
        let residual = &self.compose(&g)? - &w;
        g = &g - &residual;
        g.coeffs[0] = Complex::new(T::zero(), T::zero());
        g.coeffs[1] = cplx(T::one());
        Self::checked(g.coeffs)
    }

    /// Horner evaluation inside the unit disk.
    ///
    /// The tail estimate is `max|c_k|·|z|^{N+1}/(1−|z|)` over the last few
    /// retained coefficients; the result is flagged unreliable when it exceeds
    /// `tail_tol`.
    pub fn evaluate(&self, z: Complex<T>, tail_tol: T) -> Result<Evaluation<T>> {
        let r = z.norm();
        if !(r < T::one()) {
            return Err(Error::OutsideDisk { modulus: r.as_f64() });
        }
        let value = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * z + c);
        let n = self.order();
        let window_start = (n + 1).saturating_sub(TAIL_WINDOW);
        let cmax = self.coeffs[window_start..]
            .iter()
            .map(|c| c.norm())
            .fold(T::zero(), T::max);
        let exponent = i32::try_from(n + 1).unwrap_or(i32::MAX);
        let tail_bound = cmax * r.powi(exponent) / (T::one() - r);
        Ok(Evaluation {
            value,
            tail_bound,
            reliable: tail_bound <= tail_tol,
        })
    }

    fn require_unit_constant(&self) -> Result<()> {
        let c0 = self.coeffs[0];
        if (c0 - cplx(T::one())).norm() > T::lit(UNIT_CONSTANT_TOL) {
            return Err(Error::NotUnitConstantTerm {
                re: c0.re.as_f64(),
                im: c0.im.as_f64(),
            });
        }
        Ok(())
    }

    fn checked(coeffs: Vec<Complex<T>>) -> Result<Self> {
        if coeffs.iter().all(is_finite) {
            Ok(Self { coeffs })
        } else {
            Err(Error::NonFinite)
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| f(self.coeffs[k], other.coeffs[k])).collect(),
        }
    }
}

impl<T: Real> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Real> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Real> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<T: Real> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        self.map_coeffs(|_, c| -c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use proptest::prelude::*;

    type S = TruncatedSeries<f64>;

    fn real(cs: &[f64]) -> S {
        S::from_real(cs).unwrap()
    }

    fn geometric(order: usize) -> S {
        real(&vec![1.0; order + 1])
    }

    fn assert_jet(s: &S, expected: &[f64], tol: f64) {
        for (k, &e) in expected.iter().enumerate() {
            assert_abs_diff_eq!(s.coeff(k).re, e, epsilon = tol);
            assert_abs_diff_eq!(s.coeff(k).im, 0.0, epsilon = tol);
        }
    }

    // (s)_n / n! by direct product, independent of any series routine.
    fn pochhammer_ratio(s: f64, n: usize) -> f64 {
        (0..n).fold(1.0, |acc, i| acc * (s + i as f64) / (i as f64 + 1.0))
    }

    #[test]
    fn mul_examples() {
        assert_jet(&real(&[1., 1., 0., 0.]).mul(&real(&[1., -1., 0., 0.])), &[1., 0., -1., 0.], 0.0);
        assert_jet(&geometric(10).mul(&real(&[1., -1., 0., 0., 0., 0., 0., 0., 0., 0., 0.])), &[1.; 1], 0.0);
        let prod = geometric(10).mul(&real(&[1., -1., 0., 0., 0., 0., 0., 0., 0., 0., 0.]));
        assert!(prod.coeffs()[1..].iter().all(|c| c.norm() == 0.0));
        // (1−z)^{−1/2}·(1−z)^{−1/2} = (1−z)^{−1}
        let half: Vec<f64> = (0..=12).map(|n| pochhammer_ratio(0.5, n)).collect();
        let sq = real(&half).mul(&real(&half));
        assert_jet(&sq, &[1.0; 13], 1e-14);
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let p = geometric(3).mul(&geometric(7));
        assert_eq!(p.order(), 3);
        assert_jet(&p, &[1., 2., 3., 4.], 0.0);
    }

    #[test]
    fn div_examples() {
        let q = S::one(6).div(&real(&[1., -1., 0., 0., 0., 0., 0.])).unwrap();
        assert_jet(&q, &[1.; 7], 0.0);
        let q = real(&[1., 1.]).div(&S::one(1)).unwrap();
        assert_jet(&q, &[1., 1.], 0.0);
        // 1/(1 + 0.5z + 0.3125z² + 0.21875z³) by hand long division:
        // b1 = −0.5, b2 = 0.25 − 0.3125 = −0.0625.
        let q = S::one(3).div(&real(&[1., 0.5, 0.3125, 0.21875])).unwrap();
        assert_jet(&q, &[1., -0.5, -0.0625], 1e-15);
    }

    #[test]
    fn div_rejects_small_pivot() {
        let err = S::one(2).div(&real(&[1e-13, 1., 0.])).unwrap_err();
        assert!(matches!(err, Error::ZeroConstantTerm { .. }));
    }

    #[test]
    fn compose_examples() {
        let z2 = S::monomial(2, Complex64::new(1.0, 0.0), 6);
        assert_jet(&real(&[1., 1., 0., 0., 0., 0., 0.]).compose(&z2).unwrap(), &[1., 0., 1., 0., 0., 0., 0.], 0.0);
        let q: Vec<f64> = (0..=8).map(|n| pochhammer_ratio(0.3, n)).collect();
        let c = real(&q).compose(&S::monomial(2, Complex64::new(1.0, 0.0), 8)).unwrap();
        for k in 0..=8 {
            if k % 2 == 1 {
                assert_eq!(c.coeff(k).norm(), 0.0);
            } else {
                assert_abs_diff_eq!(c.coeff(k).re, q[k / 2], epsilon = 1e-15);
            }
        }
        // exp ∘ log1p = 1 + z
        let n = 12;
        let exp: Vec<f64> = (0..=n).map(|k| 1.0 / (1..=k).map(|i| i as f64).product::<f64>()).collect();
        let log1p: Vec<f64> = (0..=n)
            .map(|k| if k == 0 { 0.0 } else { (-1f64).powi(k as i32 + 1) / k as f64 })
            .collect();
        let c = real(&exp).compose(&real(&log1p)).unwrap();
        let mut expected = vec![0.0; n + 1];
        expected[0] = 1.0;
        expected[1] = 1.0;
        assert_jet(&c, &expected, 1e-14);
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let err = geometric(3).compose(&geometric(3)).unwrap_err();
        assert!(matches!(err, Error::InnerConstantNonzero { .. }));
    }

    #[test]
    fn transcendental_examples() {
        let p = real(&[1., -1., 0., 0., 0.]).pow_real(-0.5).unwrap();
        assert_jet(&p, &[1., 0.5, 0.375, 0.3125, 0.2734375], 1e-15);
        let p = real(&[1., -1., 0., 0., 0., 0.]).pow_real(-1.0).unwrap();
        assert_jet(&p, &[1.; 6], 1e-15);
        let l = real(&[1., 1., 0., 0., 0.]).log_series().unwrap();
        assert_jet(&l, &[0., 1., -0.5, 1.0 / 3.0, -0.25], 1e-15);
        assert!(matches!(
            real(&[2., 1.]).log_series().unwrap_err(),
            Error::NotUnitConstantTerm { .. }
        ));
        assert!(matches!(
            real(&[0.5, 1.]).pow_real(0.5).unwrap_err(),
            Error::NotUnitConstantTerm { .. }
        ));
    }

    #[test]
    fn pow_real_matches_pochhammer_products() {
        let one_minus_z = real(&{
            let mut v = vec![0.0; 65];
            v[0] = 1.0;
            v[1] = -1.0;
            v
        });
        for &s in &[0.1, 0.25, 0.5, 0.75, 1.0] {
            let q = one_minus_z.pow_real(-s).unwrap();
            for n in 0..=64 {
                let expected = pochhammer_ratio(s, n);
                let rel = (q.coeff(n).re - expected).abs() / expected;
                assert!(rel <= 1e-13, "s={s} n={n} rel={rel:e}");
                assert!(q.coeff(n).im.abs() <= 1e-13 * expected);
            }
        }
    }

    // Lagrange inversion: [w^n] g = (1/n) [z^{n−1}] (z/f)^n.
    fn lagrange_revert(f: &S) -> Vec<Complex64> {
        let n = f.order();
        let h = S::one(n - 1).div(&f.strip_z().unwrap()).unwrap();
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        let mut power = S::one(n - 1);
        for k in 1..=n {
            power = power.mul(&h);
            out[k] = power.coeff(k - 1) / k as f64;
        }
        out
    }

    #[test]
    fn revert_examples() {
        let id = S::identity(6).revert().unwrap();
        assert_jet(&id, &[0., 1., 0., 0., 0., 0., 0.], 0.0);
        let f = real(&[0., 1., 1., 0., 0., 0., 0.]);
        let g = f.revert().unwrap();
        let oracle = lagrange_revert(&f);
        // Catalan numbers with alternating signs: 1, −1, 2, −5, 14, −42
        assert_jet(&g, &[0., 1., -1., 2., -5., 14., -42.], 1e-12);
        for k in 0..=6 {
            assert_abs_diff_eq!(g.coeff(k).re, oracle[k].re, epsilon = 1e-12);
        }
        let g = real(&[0., 1., 1., 1., 1., 1., 1., 1.]).revert().unwrap();
        assert_jet(&g, &[0., 1., -1., 1., -1., 1., -1., 1.], 1e-12);
        assert!(matches!(real(&[0., 2., 0.]).revert().unwrap_err(), Error::NotNormalized));
        assert!(matches!(real(&[0.1, 1., 0.]).revert().unwrap_err(), Error::NotNormalized));
    }

    #[test]
    fn evaluate_examples() {
        let g = geometric(16);
        assert_eq!(g.evaluate(Complex64::new(0.0, 0.0), 1e-12).unwrap().value, Complex64::new(1.0, 0.0));
        let q: Vec<f64> = (0..=64).map(|n| pochhammer_ratio(0.5, n)).collect();
        let e = real(&q).evaluate(Complex64::new(0.5, 0.0), 1e-8).unwrap();
        assert_abs_diff_eq!(e.value.re, 2f64.sqrt(), epsilon = 1e-8);
        assert!(e.reliable);
        let e = S::identity(4).evaluate(Complex64::new(0.0, 0.3), 1e-12).unwrap();
        assert_eq!(e.value, Complex64::new(0.0, 0.3));
        assert!(matches!(g.evaluate(Complex64::new(1.0, 0.0), 1e-12).unwrap_err(), Error::OutsideDisk { .. }));
        assert!(!g.evaluate(Complex64::new(0.9, 0.0), 1e-6).unwrap().reliable);
    }

    #[test]
    fn f32_kernel_works() {
        let p = TruncatedSeries::<f32>::from_real(&[1., -1., 0., 0.]).unwrap().pow_real(-0.5).unwrap();
        assert!((p.coeff(2).re - 0.375).abs() < 1e-6);
    }

    fn jet(order: usize, unit: bool) -> impl Strategy<Value = S> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order + 1).prop_map(move |v| {
            let mut cs: Vec<Complex64> = v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
            if unit {
                cs[0] = Complex64::new(1.0, 0.0);
            }
            S::new(cs).unwrap()
        })
    }

    // Coefficients drawn from the closed unit disk.
    fn normalized(order: usize) -> impl Strategy<Value = S> {
        prop::collection::vec((0.0f64..=1.0, -std::f64::consts::PI..std::f64::consts::PI), order + 1)
            .prop_map(|v| {
                let cs = v
                    .into_iter()
                    .enumerate()
                    .map(|(k, (r, t))| match k {
                        0 => Complex64::new(0.0, 0.0),
                        1 => Complex64::new(1.0, 0.0),
                        _ => Complex64::from_polar(r, t),
                    })
                    .collect();
                S::new(cs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in (0usize..=16).prop_flat_map(|n| (jet(n, false), jet(n, false), jet(n, false)))) {
            prop_assert!(a.mul(&b).max_abs_diff(&b.mul(&a)) <= 1e-12);
            prop_assert!(a.mul(&b).mul(&c).max_abs_diff(&a.mul(&b.mul(&c))) <= 1e-12);
            prop_assert!(a.mul(&(&b + &c)).max_abs_diff(&(&a.mul(&b) + &a.mul(&c))) <= 1e-12);
        }

        #[test]
        fn log_exp_round_trip(a in jet(12, true), alpha in -1.0f64..1.0, beta in -1.0f64..1.0) {
            // Halve the non-constant part so the powers stay well scaled.
            let a = a.map_coeffs(|k, c| if k == 0 { c } else { c * 0.5 });
            let back = a.log_series().unwrap().exp_series().unwrap();
            prop_assert!(back.max_abs_diff(&a) <= 1e-11);
            let lhs = a.pow_real(alpha).unwrap().mul(&a.pow_real(beta).unwrap());
            let rhs = a.pow_real(alpha + beta).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-11);
        }

        #[test]
        fn revert_is_compositional_inverse(f in normalized(10)) {
            let g = f.revert().unwrap();
            let id = S::identity(10);
            prop_assert!(g.compose(&f).unwrap().max_abs_diff(&id) <= 1e-10);
            prop_assert!(f.compose(&g).unwrap().max_abs_diff(&id) <= 1e-10);
        }

        #[test]
        fn div_inverts_mul(a in jet(10, false), b in jet(10, true)) {
            let q = a.div(&b).unwrap();
            prop_assert!(q.mul(&b).max_abs_diff(&a) <= 1e-12 * (1.0 + q.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max)));
        }
    }
}
