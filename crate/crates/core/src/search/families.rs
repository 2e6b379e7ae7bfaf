use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::{unit, SchwarzPrefix};
use crate::classes::{member_from_schwarz, ClassKind, ClassMember};
use crate::error::{Error, Result};
use crate::scalar::{cplx, Real};
use crate::series::TruncatedSeries;

/// Largest number of Blaschke factors accepted by [`blaschke_member`].
pub const MAX_BLASCHKE_ZEROS: usize = 3;

/// The one-parameter equality families generated by `ω(z) = ±z(z + x)/(1 + xz)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RotationFamily {
    /// `f_x`: starlike, minus sign.
    LowerF,
    /// `g_x`: starlike, plus sign.
    LowerG,
    /// `F_x`: convex, minus sign.
    UpperF,
    /// `G_x`: convex, plus sign.
    UpperG,
}

impl RotationFamily {
    pub fn kind(self) -> ClassKind {
        match self {
            RotationFamily::LowerF | RotationFamily::LowerG => ClassKind::Starlike,
            RotationFamily::UpperF | RotationFamily::UpperG => ClassKind::Convex,
        }
    }

    pub fn minus(self) -> bool {
        matches!(self, RotationFamily::LowerF | RotationFamily::UpperF)
    }

    pub fn of(kind: ClassKind, minus: bool) -> Self {
        match (kind, minus) {
            (ClassKind::Starlike, true) => RotationFamily::LowerF,
            (ClassKind::Starlike, false) => RotationFamily::LowerG,
            (ClassKind::Convex, true) => RotationFamily::UpperF,
            (ClassKind::Convex, false) => RotationFamily::UpperG,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RotationFamily::LowerF => "f_x",
            RotationFamily::LowerG => "g_x",
            RotationFamily::UpperF => "F_x",
            RotationFamily::UpperG => "G_x",
        }
    }
}

fn check_x<T: Real>(x: T) -> Result<()> {
    if x >= T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(Error::XOutOfRange(x.as_f64()))
    }
}

/// Jet of `±z(z + x)/(1 + xz)` by long division.
pub fn family_omega<T: Real>(minus: bool, x: T, order: usize) -> Result<TruncatedSeries<T>> {
    check_x(x)?;
    let sign = if minus { -T::one() } else { T::one() };
    let num = TruncatedSeries::new(vec![cplx(T::zero()), cplx(x * sign), cplx(sign)])?.extend(order);
    let den = TruncatedSeries::new(vec![cplx(T::one()), cplx(x)])?.extend(order);
    Ok(num.div(&den)?.truncate(order))
}

/// Prefix of `±z(z + x)/(1 + xz)`: `(±x, ±1, 0)`.
pub fn family_prefix<T: Real>(minus: bool, x: T) -> Result<SchwarzPrefix<T>> {
    check_x(x)?;
    let sign = if minus { -T::one() } else { T::one() };
    SchwarzPrefix::new(cplx(x * sign), cplx(sign), cplx(T::zero()))
}

pub fn rotation_family<T: Real>(
    which: RotationFamily,
    s: T,
    x: T,
    order: usize,
) -> Result<ClassMember<T>> {
    let omega = family_omega(which.minus(), x, order)?;
    member_from_schwarz(which.kind(), s, &omega, order)
}

/// `c·z·Π(z + x_i)/(1 + x̄_i z)`, a finite Blaschke product times `c`.
pub fn blaschke_omega<T: Real>(
    c: Complex<T>,
    zeros: &[Complex<T>],
    order: usize,
) -> Result<TruncatedSeries<T>> {
    if !(c.norm() <= T::one()) {
        return Err(Error::ParamOutOfDisk {
            what: "c",
            modulus: c.norm().as_f64(),
        });
    }
    if zeros.len() > MAX_BLASCHKE_ZEROS {
        return Err(Error::ConfigInvalid(format!(
            "at most {MAX_BLASCHKE_ZEROS} Blaschke zeros are supported"
        )));
    }
    let mut omega = TruncatedSeries::monomial(1, c, order);
    for &x in zeros {
        if !(x.norm() < T::one()) {
            return Err(Error::ParamOutOfDisk {
                what: "zero",
                modulus: x.norm().as_f64(),
            });
        }
        let num = TruncatedSeries::new(vec![x, unit()])?.extend(order);
        let den = TruncatedSeries::new(vec![unit(), x.conj()])?.extend(order);
        omega = omega.mul(&num.div(&den)?.truncate(order));
    }
    Ok(omega)
}

pub fn blaschke_member<T: Real>(
    kind: ClassKind,
    s: T,
    c: Complex<T>,
    zeros: &[Complex<T>],
    order: usize,
) -> Result<ClassMember<T>> {
    let omega = blaschke_omega(c, zeros, order)?;
    member_from_schwarz(kind, s, &omega, order)
}

/// A genuine Schwarz function with the given first three coefficients.
///
/// Inverts the Schur recursion with a constant last parameter:
/// `φ₁ = (ξ + ζz)/(1 + ξ̄ζz)`, `φ = (w₁ + zφ₁)/(1 + w̄₁zφ₁)`, `ω = zφ`.
pub fn schwarz_from_prefix<T: Real>(
    prefix: &SchwarzPrefix<T>,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    let inner = TruncatedSeries::new(vec![prefix.xi, prefix.zeta])?.extend(order);
    let inner_den = TruncatedSeries::new(vec![unit(), prefix.xi.conj() * prefix.zeta])?.extend(order);
    let phi1 = inner.div(&inner_den)?;
    let z_phi1 = phi1.times_z().truncate(order);
    let num = &TruncatedSeries::constant(prefix.w1, order) + &z_phi1;
    let den = &TruncatedSeries::one(order) + &z_phi1.scale(prefix.w1.conj());
    Ok(num.div(&den)?.times_z().truncate(order))
}
