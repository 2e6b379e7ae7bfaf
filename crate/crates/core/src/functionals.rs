//! Coefficient functionals of a class member: Taylor coefficients,
//! Fekete-Szegő values for `f`, `z/f` and `f^{-1}`, Hankel determinants and
//! logarithmic coefficients.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::bounds::Target;
use crate::classes::ClassMember;
use crate::error::{Error, Result};
use crate::scalar::{cplx, Real};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionalKind {
    An,
    Fs,
    FsZf,
    FsInv,
    Hankel,
    LogCoeff,
}

/// Parameters a functional was evaluated with.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FunctionalMeta<T> {
    pub n: Option<usize>,
    pub lambda: Option<T>,
    pub q: Option<usize>,
}

/// A complex functional together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionalValue<T> {
    pub name: FunctionalKind,
    pub value: T,
    pub raw: Complex<T>,
    pub meta: FunctionalMeta<T>,
}

impl<T: Real> FunctionalValue<T> {
    fn new(name: FunctionalKind, raw: Complex<T>, meta: FunctionalMeta<T>) -> Self {
        Self {
            name,
            value: raw.norm(),
            raw,
            meta,
        }
    }
}

fn require_order<T: Real>(m: &ClassMember<T>, needed: usize) -> Result<()> {
    if needed > m.order() {
        Err(Error::OrderExceeded {
            requested: needed,
            order: m.order(),
        })
    } else {
        Ok(())
    }
}

/// `n`-th Taylor coefficient of `m.f` (`a₁ = 1`).
pub fn coefficient<T: Real>(m: &ClassMember<T>, n: usize) -> Result<Complex<T>> {
    if n == 0 {
        return Err(Error::BadIndex(0));
    }
    require_order(m, n)?;
    Ok(m.f.coeff(n))
}

/// `a₃ − λa₂²` on the stored coefficients (these are `d_n` for convex members).
pub fn fekete_szego<T: Real>(m: &ClassMember<T>, lambda: T) -> Result<FunctionalValue<T>> {
    require_order(m, 3)?;
    let raw = m.f.coeff(3) - m.f.coeff(2) * m.f.coeff(2) * lambda;
    Ok(FunctionalValue::new(
        FunctionalKind::Fs,
        raw,
        FunctionalMeta {
            lambda: Some(lambda),
            ..Default::default()
        },
    ))
}

/// Fekete-Szegő functional of `f`, of `z/f` (`b₂ − λb₁²`) or of `f^{-1}`
/// (`A₃ − λA₂²`), each computed from the corresponding series.
pub fn fekete_szego_of<T: Real>(
    m: &ClassMember<T>,
    target: Target,
    lambda: T,
) -> Result<FunctionalValue<T>> {
    let meta = FunctionalMeta {
        lambda: Some(lambda),
        ..Default::default()
    };
    match target {
        Target::F => fekete_szego(m, lambda),
        Target::ZOverF => {
            let b = z_over_f_coeffs(m, 2)?;
            let raw = b[1] - b[0] * b[0] * lambda;
            Ok(FunctionalValue::new(FunctionalKind::FsZf, raw, meta))
        }
        Target::Inverse => {
            let a = inverse_coeffs(m, 3)?;
            let raw = a[2] - a[1] * a[1] * lambda;
            Ok(FunctionalValue::new(FunctionalKind::FsInv, raw, meta))
        }
    }
}

/// `q`-th Hankel determinant `H_q(n) = det[a_{n+i+j}]_{i,j<q}`.
pub fn hankel<T: Real>(m: &ClassMember<T>, q: usize, n: usize) -> Result<FunctionalValue<T>> {
    if q == 0 {
        return Err(Error::BadIndex(q));
    }
    if n == 0 {
        return Err(Error::BadIndex(n));
    }
    require_order(m, n + 2 * q - 2)?;
    let matrix: Vec<Vec<Complex<T>>> = (0..q)
        .map(|i| (0..q).map(|j| m.f.coeff(n + i + j)).collect())
        .collect();
    let raw = if q <= 3 {
        cofactor_det(&matrix)
    } else {
        lu_det(matrix)
    };
    Ok(FunctionalValue::new(
        FunctionalKind::Hankel,
        raw,
        FunctionalMeta {
            n: Some(n),
            q: Some(q),
            ..Default::default()
        },
    ))
}

fn cofactor_det<T: Real>(a: &[Vec<Complex<T>>]) -> Complex<T> {
    match a.len() {
        1 => a[0][0],
        2 => a[0][0] * a[1][1] - a[0][1] * a[1][0],
        3 => {
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        }
        _ => unreachable!("cofactor expansion is used for q <= 3"),
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
fn lu_det<T: Real>(mut a: Vec<Vec<Complex<T>>>) -> Complex<T> {
    let n = a.len();
    let mut det = cplx(T::one());
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().partial_cmp(&a[j][col].norm()).unwrap())
            .unwrap();
        if a[pivot][col].norm() == T::zero() {
            return Complex::new(T::zero(), T::zero());
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det = det * p;
        for row in col + 1..n {
            let factor = a[row][col] / p;
            for k in col..n {
                let v = a[col][k];
                a[row][k] = a[row][k] - factor * v;
            }
        }
    }
    det
}

/// `b₁..b_count` of `z/f(z) = 1 + Σ b_n z^n`.
pub fn z_over_f_coeffs<T: Real>(m: &ClassMember<T>, count: usize) -> Result<Vec<Complex<T>>> {
    require_order(m, count + 1)?;
    let unit = m.f.strip_z()?;
    let b = TruncatedSeries::one(unit.order()).div(&unit)?;
    Ok(b.coeffs()[1..=count].to_vec())
}

/// `A₁..A_count` of `f^{-1}(w) = w + Σ A_n w^n` (so `A₁ = 1`).
pub fn inverse_coeffs<T: Real>(m: &ClassMember<T>, count: usize) -> Result<Vec<Complex<T>>> {
    require_order(m, count)?;
    let g = m.f.truncate(count.max(1)).revert()?;
    Ok((1..=count).map(|k| g.coeff(k)).collect())
}

/// `γ₁..γ_count` of `log(f(z)/z) = 2 Σ γ_n z^n`.
pub fn log_coeffs<T: Real>(m: &ClassMember<T>, count: usize) -> Result<Vec<Complex<T>>> {
    require_order(m, count + 1)?;
    let l = m.f.strip_z()?.log_series()?;
    let half = T::lit(0.5);
    Ok((1..=count).map(|k| l.coeff(k) * half).collect())
}
