//! The subordination target `q_s(z) = (1 − z)^{−s}`, the extremal functions
//! `Φ_{s,n}` and `K_{s,n}`, class members generated from Schwarz jets, and the
//! geometry of the hyperbola domain.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cplx, Real};
use crate::series::TruncatedSeries;

/// Smallest jet order at which every functional (up to `a₄`) is available.
pub const MIN_ORDER: usize = 4;
/// Points whose margin to the boundary is below this are not counted as inside.
pub const BOUNDARY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Starlike,
    Convex,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Starlike => "starlike",
            ClassKind::Convex => "convex",
        }
    }
}

impl std::fmt::Display for ClassKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClassKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "starlike" => Ok(ClassKind::Starlike),
            "convex" => Ok(ClassKind::Convex),
            other => Err(format!("unknown class kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassParams<T> {
    pub s: T,
    pub n_index: usize,
    pub order: usize,
}

impl<T: Real> ClassParams<T> {
    pub fn new(s: T, n_index: usize, order: usize) -> Result<Self> {
        check_s(s)?;
        if n_index == 0 {
            return Err(Error::BadIndex(n_index));
        }
        if order < MIN_ORDER {
            return Err(Error::OrderExceeded {
                requested: MIN_ORDER,
                order,
            });
        }
        Ok(Self { s, n_index, order })
    }
}

/// A normalized function `f` of one of the two classes together with its
/// transform `p` (`zf′/f` for starlike, `1 + zf″/f′` for convex) and, when
/// known, the Schwarz jet `ω` with `p = q_s ∘ ω`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct ClassMember<T> {
    pub kind: ClassKind,
    pub s: T,
    pub f: TruncatedSeries<T>,
    pub p: TruncatedSeries<T>,
    pub omega: Option<TruncatedSeries<T>>,
}

impl<T: Real> ClassMember<T> {
    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// The transform that defines the class, recomputed from `f`.
    ///
    /// Starlike: `zf′/f`; convex: `1 + zf″/f′ = (z(zf′)′)/(zf′)`. The common
    /// factor `z` is cancelled before dividing, so the result has order `N − 1`.
    pub fn defining_transform(&self) -> Result<TruncatedSeries<T>> {
        let zf1 = self.f.z_derivative();
        match self.kind {
            ClassKind::Starlike => zf1.strip_z()?.div(&self.f.strip_z()?),
            ClassKind::Convex => zf1.z_derivative().strip_z()?.div(&zf1.strip_z()?),
        }
    }

    /// Largest coefficient gap between `p` and the transform recomputed from `f`.
    pub fn transform_residual(&self) -> Result<T> {
        Ok(self.defining_transform()?.max_abs_diff(&self.p))
    }

    /// `μ̄·f(μz)` for unimodular `μ`: `a_n ↦ μ^{n−1} a_n`, `p_n ↦ μ^n p_n`, `ω_n ↦ μ^n ω_n`.
    pub fn rotate(&self, mu: Complex<T>) -> Self {
        let powers = |k: usize| mu.powu(k as u32);
        let rot = |s: &TruncatedSeries<T>| s.map_coeffs(|k, c| c * powers(k));
        let conj = mu.conj();
        Self {
            kind: self.kind,
            s: self.s,
            f: rot(&self.f).scale(conj),
            p: rot(&self.p),
            omega: self.omega.as_ref().map(rot),
        }
    }

    /// Alexander transform: `zf′` of a convex member is starlike and vice versa.
    fn alexander(mut self, kind: ClassKind) -> Self {
        self.f = match kind {
            ClassKind::Convex => self
                .f
                .map_coeffs(|k, c| if k == 0 { c } else { c / T::from_usize_lossy(k) }),
            ClassKind::Starlike => self.f.z_derivative(),
        };
        self.kind = kind;
        self
    }
}

/// A point `ρe^{iφ}` of the boundary hyperbola `ρ = (2cos(φ/s))^{−s}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperbolaPoint<T> {
    pub phi: T,
    pub rho: T,
    pub w: Complex<T>,
}

pub(crate) fn check_s<T: Real>(s: T) -> Result<()> {
    if s > T::zero() && s <= T::one() {
        Ok(())
    } else {
        Err(Error::BadS(s.as_f64()))
    }
}

/// Jet of `q_s(z) = (1 − z)^{−s}`: coefficient `n` is `(s)_n/n!`, built by the
/// running product `q_n = q_{n−1}·(s + n − 1)/n`.
pub fn q_series<T: Real>(s: T, order: usize) -> Result<TruncatedSeries<T>> {
    check_s(s)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut q = T::one();
    coeffs.push(q);
    for n in 1..=order {
        let nf = T::from_usize_lossy(n);
        q = q * (s + nf - T::one()) / nf;
        coeffs.push(q);
    }
    TruncatedSeries::from_real(&coeffs)
}

/// Starlike extremal `Φ_{s,n}`, defined by `zΦ′/Φ = q_s(z^n)`.
///
/// Built as `z·exp(S)` with `S = Σ_k q_k z^{nk}/(nk)`, the term-wise integral of
/// `(q_s(t^n) − 1)/t`.
pub fn phi_extremal<T: Real>(params: &ClassParams<T>) -> Result<ClassMember<T>> {
    let ClassParams { s, n_index: n, order } = *params;
    check_s(s)?;
    let q = q_series(s, order / n)?;
    let zero = Complex::new(T::zero(), T::zero());
    let mut integral = vec![zero; order];
    let mut p = vec![zero; order + 1];
    for (k, &qk) in q.coeffs().iter().enumerate() {
        let power = n * k;
        p[power] = qk;
        if k >= 1 && power < order {
            integral[power] = qk / T::from_usize_lossy(power);
        }
    }
    let f = TruncatedSeries::new(integral)?.exp_series()?.times_z();
    Ok(ClassMember {
        kind: ClassKind::Starlike,
        s,
        f,
        p: TruncatedSeries::new(p)?,
        omega: Some(TruncatedSeries::monomial(n, cplx(T::one()), order)),
    })
}

/// Convex extremal `K_{s,n}`, the Alexander companion of `Φ_{s,n}`: `d_k = a_k/k`.
pub fn k_extremal<T: Real>(params: &ClassParams<T>) -> Result<ClassMember<T>> {
    Ok(phi_extremal(params)?.alexander(ClassKind::Convex))
}

/// Member of the requested class whose transform is `q_s ∘ ω`.
///
/// Starlike coefficients come from `z f′ = p f`, solved forward as
/// `(n − 1)a_n = Σ_{k=1}^{n−1} p_{n−k} a_k` with `a₁ = 1`; convex ones are
/// the Alexander transform `d_n = a_n/n`.
pub fn member_from_schwarz<T: Real>(
    kind: ClassKind,
    s: T,
    omega: &TruncatedSeries<T>,
    order: usize,
) -> Result<ClassMember<T>> {
    check_s(s)?;
    let omega = omega.extend(order).truncate(order);
    let p = q_series(s, order)?.compose(&omega)?;
    let mut a = vec![Complex::new(T::zero(), T::zero()); order + 1];
    if order >= 1 {
        a[1] = cplx(T::one());
    }
    for n in 2..=order {
        let mut acc = Complex::new(T::zero(), T::zero());
        for k in 1..n {
            acc = acc + p.coeff(n - k) * a[k];
        }
        a[n] = acc / T::from_usize_lossy(n - 1);
    }
    let starlike = ClassMember {
        kind: ClassKind::Starlike,
        s,
        f: TruncatedSeries::new(a)?,
        p,
        omega: Some(omega),
    };
    Ok(match kind {
        ClassKind::Starlike => starlike,
        ClassKind::Convex => starlike.alexander(ClassKind::Convex),
    })
}

/// `|w|^{1/s} − |w^{1/s} − 1|`: positive inside the domain, zero on the hyperbola.
pub fn domain_margin<T: Real>(w: Complex<T>, s: T) -> Result<T> {
    check_s(s)?;
    if w.im == T::zero() && w.re <= T::zero() {
        return Err(Error::BranchCut);
    }
    let v = w.powf(T::one() / s);
    Ok(v.norm() - (v - cplx(T::one())).norm())
}

/// Membership test `|w^{1/s} − 1| < |w|^{1/s}` on the principal branch.
///
/// Points within [`BOUNDARY_TOL`] (relative to `|w|^{1/s}`) of the boundary are
/// classified as outside, so sampled boundary points are never counted inside.
pub fn point_in_domain<T: Real>(w: Complex<T>, s: T) -> Result<bool> {
    let margin = domain_margin(w, s)?;
    let scale = w.norm().powf(T::one() / s).max(T::one());
    Ok(margin > T::lit(BOUNDARY_TOL) * scale)
}

pub fn boundary_point<T: Real>(s: T, phi: T) -> Result<HyperbolaPoint<T>> {
    check_s(s)?;
    let limit = T::FRAC_PI_2() * s;
    if !(phi.abs() < limit) {
        return Err(Error::AngleOutOfRange {
            phi: phi.as_f64(),
            limit: limit.as_f64(),
        });
    }
    let rho = (T::lit(2.0) * (phi / s).cos()).powf(-s);
    Ok(HyperbolaPoint {
        phi,
        rho,
        w: Complex::from_polar(rho, phi),
    })
}
