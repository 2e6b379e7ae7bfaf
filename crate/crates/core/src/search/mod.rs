//! Numerical verification of the closed-form bounds.
//!
//! Every functional bounded here depends on the first three Schwarz
//! coefficients only, and those are parameterized exactly by a triple
//! `(w₁, ξ, ζ)` of points in the closed unit disk. The search therefore runs
//! over that compact 6-dimensional box, seeded with the named equality
//! functions, and reports the supremum it finds next to the bound.

mod campaign;
mod families;
pub mod golden;

pub use campaign::{
    run_campaign, Argmax, CampaignConfig, CampaignFunctional, CampaignReport, GridPointRecord,
};
pub use families::{
    blaschke_member, blaschke_omega, family_omega, family_prefix, rotation_family,
    schwarz_from_prefix, RotationFamily,
};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::bounds::Target;
use crate::classes::{check_s, ClassKind};
use crate::error::{Error, Result};
use crate::scalar::{cplx, Real};

/// Slack on the unit-disk constraint for prefix parameters.
const DISK_SLACK: f64 = 1e-12;

/// Schur parameters `(w₁, ξ, ζ)` of a Schwarz function's first three coefficients:
///
/// `w₂ = (1 − |w₁|²)ξ`, `w₃ = (1 − |w₁|²)(1 − |ξ|²)ζ − w̄₁(1 − |w₁|²)ξ²`.
///
/// For real `w₁ ≥ 0` (the normalization available after a rotation) these are
/// `w₂ = ξ(1 − w₁²)` and `w₃ = (1 − w₁²)(1 − |ξ|²)ζ − w₁(1 − w₁²)ξ²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchwarzPrefix<T> {
    pub w1: Complex<T>,
    pub xi: Complex<T>,
    pub zeta: Complex<T>,
}

impl<T: Real> SchwarzPrefix<T> {
    pub fn new(w1: Complex<T>, xi: Complex<T>, zeta: Complex<T>) -> Result<Self> {
        let limit = T::one() + T::lit(DISK_SLACK);
        for (what, v) in [("w1", w1), ("xi", xi), ("zeta", zeta)] {
            if !(v.norm() <= limit) {
                return Err(Error::ParamOutOfDisk {
                    what,
                    modulus: v.norm().as_f64(),
                });
            }
        }
        Ok(Self { w1, xi, zeta })
    }

    pub fn w2(&self) -> Complex<T> {
        self.xi * (T::one() - self.w1.norm_sqr())
    }

    pub fn w3(&self) -> Complex<T> {
        let d1 = T::one() - self.w1.norm_sqr();
        let d2 = T::one() - self.xi.norm_sqr();
        self.zeta * (d1 * d2) - self.w1.conj() * self.xi * self.xi * d1
    }

    /// `(w₁, w₂, w₃)`.
    pub fn jet(&self) -> [Complex<T>; 3] {
        [self.w1, self.w2(), self.w3()]
    }

    /// Parameters of `ω(μz)`: `(μw₁, μ²ξ, μ³ζ)`.
    pub fn rotate(&self, mu: Complex<T>) -> Self {
        Self {
            w1: self.w1 * mu,
            xi: self.xi * mu * mu,
            zeta: self.zeta * mu * mu * mu,
        }
    }
}

/// A functional that the prefix evaluator can compute from `(w₁, w₂, w₃)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum FunctionalSpec<T> {
    /// `|a_n|` for `n ≤ 4`.
    Coefficient(usize),
    FeketeSzego { target: Target, lambda: T },
    Hankel22,
}

/// `(a₂, a₃, a₄)` (or `(d₂, d₃, d₄)` for convex) from the Schwarz coefficients.
pub fn prefix_coefficients<T: Real>(kind: ClassKind, s: T, w: [Complex<T>; 3]) -> [Complex<T>; 3] {
    let l = T::lit;
    let [w1, w2, w3] = w;
    let a2 = w1 * s;
    let a3 = (w2 + w1 * w1 * ((l(3.0) * s + l(1.0)) / l(2.0))) * (s / l(2.0));
    let a4 = (w3
        + w1 * w2 * ((l(5.0) * s + l(2.0)) / l(2.0))
        + w1 * w1 * w1 * ((l(17.0) * s * s + l(15.0) * s + l(4.0)) / l(12.0)))
        * (s / l(3.0));
    match kind {
        ClassKind::Starlike => [a2, a3, a4],
        ClassKind::Convex => [a2 / l(2.0), a3 / l(3.0), a4 / l(4.0)],
    }
}

/// Modulus of a functional straight from the prefix closed forms, without
/// building any series.
pub fn prefix_functional<T: Real>(
    kind: ClassKind,
    s: T,
    prefix: &SchwarzPrefix<T>,
    spec: &FunctionalSpec<T>,
) -> Result<T> {
    check_s(s)?;
    let [a2, a3, a4] = prefix_coefficients(kind, s, prefix.jet());
    Ok(match *spec {
        FunctionalSpec::Coefficient(n) => match n {
            1 => T::one(),
            2 => a2.norm(),
            3 => a3.norm(),
            4 => a4.norm(),
            0 => return Err(Error::BadIndex(0)),
            _ => return Err(Error::OrderExceeded { requested: n, order: 4 }),
        },
        FunctionalSpec::FeketeSzego { target, lambda } => {
            let sq = a2 * a2;
            let (second, third) = match target {
                Target::F => (sq, a3),
                // b₁ = −a₂, b₂ = a₂² − a₃
                Target::ZOverF => (sq, sq - a3),
                // A₂ = −a₂, A₃ = 2a₂² − a₃
                Target::Inverse => (sq, sq * T::lit(2.0) - a3),
            };
            (third - second * lambda).norm()
        }
        FunctionalSpec::Hankel22 => (a2 * a4 - a3 * a3).norm(),
    })
}

pub(crate) fn unit<T: Real>() -> Complex<T> {
    cplx(T::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::member_from_schwarz;
    use crate::functionals::{coefficient, fekete_szego_of, hankel};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn prefix_validation() {
        assert!(SchwarzPrefix::new(c(1.1, 0.0), c(0.0, 0.0), c(0.0, 0.0)).is_err());
        assert!(SchwarzPrefix::new(c(0.0, 0.0), c(0.0, 0.9), c(0.8, 0.8)).is_err());
        let p = SchwarzPrefix::new(c(0.6, 0.0), c(0.5, 0.0), c(0.2, 0.0)).unwrap();
        assert_abs_diff_eq!(p.w2().re, 0.5 * 0.64, epsilon = 1e-16);
        assert_abs_diff_eq!(p.w3().re, 0.64 * 0.75 * 0.2 - 0.6 * 0.64 * 0.25, epsilon = 1e-16);
    }

    #[test]
    fn prefix_examples() {
        for &s in &[0.3, 0.5, 1.0] {
            let p = SchwarzPrefix::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
            let [_, a3, _] = prefix_coefficients(ClassKind::Starlike, s, p.jet());
            assert_abs_diff_eq!(a3.re, s / 2.0, epsilon = 1e-16);
            let h = prefix_functional(ClassKind::Starlike, s, &p, &FunctionalSpec::Hankel22).unwrap();
            assert_abs_diff_eq!(h, s * s / 4.0, epsilon = 1e-16);

            let p = SchwarzPrefix::new(c(1.0, 0.0), c(0.3, -0.2), c(0.1, 0.4)).unwrap();
            assert_eq!(p.w2().norm(), 0.0);
            assert_eq!(p.w3().norm(), 0.0);
            let [a2, a3, a4] = prefix_coefficients(ClassKind::Starlike, s, p.jet());
            assert_abs_diff_eq!(a2.re, s, epsilon = 1e-16);
            assert_abs_diff_eq!(a3.re, s * (3.0 * s + 1.0) / 4.0, epsilon = 1e-16);
            assert_abs_diff_eq!(a4.re, (4.0 * s + 15.0 * s * s + 17.0 * s * s * s) / 36.0, epsilon = 1e-15);

            let zero = SchwarzPrefix::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
            for spec in [
                FunctionalSpec::Coefficient(2),
                FunctionalSpec::Coefficient(4),
                FunctionalSpec::Hankel22,
                FunctionalSpec::FeketeSzego { target: Target::Inverse, lambda: 0.7 },
            ] {
                assert_eq!(prefix_functional(ClassKind::Convex, s, &zero, &spec).unwrap(), 0.0);
            }
            assert_eq!(
                prefix_functional(ClassKind::Convex, s, &zero, &FunctionalSpec::Coefficient(1)).unwrap(),
                1.0
            );
        }
        let p = SchwarzPrefix::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(prefix_functional(ClassKind::Starlike, 0.5, &p, &FunctionalSpec::Coefficient(5)).is_err());
    }

    fn random_prefix(rng: &mut ChaCha8Rng) -> SchwarzPrefix<f64> {
        let mut disk = || Complex64::from_polar(rng.random::<f64>().sqrt(), rng.random_range(-3.2..3.2));
        SchwarzPrefix::new(disk(), disk(), disk()).unwrap()
    }

    #[test]
    fn schwarz_extension_matches_prefix_jet() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let p = random_prefix(&mut rng);
            let omega = schwarz_from_prefix(&p, 8).unwrap();
            assert_eq!(omega.coeff(0).norm(), 0.0);
            for (k, w) in p.jet().iter().enumerate() {
                assert!((omega.coeff(k + 1) - w).norm() <= 1e-14);
            }
            // A genuine self-map: sample the jet well inside the disk.
            for j in 0..16 {
                let z = Complex64::from_polar(0.5, j as f64 * 0.4);
                let v = omega.evaluate(z, 1.0).unwrap().value;
                assert!(v.norm() <= 0.5 + 1e-6);
            }
        }
    }

    // The full series pipeline is the oracle for the closed forms.
    #[test]
    fn prefix_closed_forms_match_series_pipeline() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..1000 {
            let p = random_prefix(&mut rng);
            let s: f64 = rng.random_range(0.01..=1.0);
            let lambda: f64 = rng.random_range(-4.0..4.0);
            let kind = if i % 2 == 0 { ClassKind::Starlike } else { ClassKind::Convex };
            let m = member_from_schwarz(kind, s, &schwarz_from_prefix(&p, 6).unwrap(), 6).unwrap();
            for target in Target::ALL {
                let direct = prefix_functional(kind, s, &p, &FunctionalSpec::FeketeSzego { target, lambda }).unwrap();
                let series = fekete_szego_of(&m, target, lambda).unwrap().value;
                assert!((direct - series).abs() <= 1e-9);
            }
            let direct = prefix_functional(kind, s, &p, &FunctionalSpec::Hankel22).unwrap();
            assert!((direct - hankel(&m, 2, 2).unwrap().value).abs() <= 1e-9);
            for n in 1..=4 {
                let direct = prefix_functional(kind, s, &p, &FunctionalSpec::Coefficient(n)).unwrap();
                assert!((direct - coefficient(&m, n).unwrap().norm()).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn rotated_prefix_is_rotated_schwarz_function() {
        let p = SchwarzPrefix::new(c(0.3, 0.4), c(-0.2, 0.5), c(0.6, -0.1)).unwrap();
        let mu = Complex64::from_polar(1.0, 0.9);
        let r = p.rotate(mu);
        for (k, (a, b)) in p.jet().iter().zip(r.jet()).enumerate() {
            assert!((a * mu.powu(k as u32 + 1) - b).norm() <= 1e-15);
        }
    }
}
