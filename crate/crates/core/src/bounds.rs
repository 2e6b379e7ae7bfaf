//! Closed-form coefficient, Fekete-Szegő and second-Hankel bounds for the two
//! classes. Every bound reports which branch of its piecewise formula fired.

use serde::{Deserialize, Serialize};

use crate::classes::{check_s, ClassKind};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Which series the Fekete-Szegő functional is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `f` itself: `a₃ − λa₂²`.
    F,
    /// `z/f`: `b₂ − λb₁²`.
    ZOverF,
    /// `f^{-1}`: `A₃ − λA₂²`.
    Inverse,
}

impl Target {
    pub const ALL: [Target; 3] = [Target::F, Target::ZOverF, Target::Inverse];

    pub fn as_str(self) -> &'static str {
        match self {
            Target::F => "f",
            Target::ZOverF => "zf",
            Target::Inverse => "inv",
        }
    }
}

impl std::str::FromStr for Target {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "f" => Ok(Target::F),
            "zf" | "z_over_f" => Ok(Target::ZOverF),
            "inv" | "inverse" => Ok(Target::Inverse),
            other => Err(format!("unknown target `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Left,
    Middle,
    Right,
    Single,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Left => "left",
            Regime::Middle => "middle",
            Regime::Right => "right",
            Regime::Single => "single",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult<T> {
    pub value: T,
    pub regime: Regime,
    /// `(lower, upper)` break-points in λ (or `t`) for piecewise bounds.
    pub thresholds: Option<(T, T)>,
    pub sharp: bool,
    pub extremal_hint: String,
}

/// Equality function of a sharp Fekete-Szegő bound, up to rotation.
///
/// `Extremal(n)` is `Φ_{s,n}` (starlike) or `K_{s,n}` (convex). `Family`
/// is generated by `ω(z) = ±z(z + x)/(1 + xz)`: the minus sign gives `f_x`/`F_x`,
/// the plus sign `g_x`/`G_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Equality {
    Extremal(usize),
    Family { minus: bool },
}

/// Bound on `|a_n|`: `(s)_{n−1}/(n−1)!` for starlike, `(s)_{n−1}/n!` for convex.
pub fn coeff_bound<T: Real>(kind: ClassKind, s: T, n: usize) -> Result<BoundResult<T>> {
    check_s(s)?;
    if n < 2 {
        return Err(Error::BadIndex(n));
    }
    // (s)_{n−1}/(n−1)! as a running product
    let mut value = T::one();
    for k in 1..n {
        let kf = T::from_usize_lossy(k);
        value = value * (s + kf - T::one()) / kf;
    }
    if kind == ClassKind::Convex {
        value = value / T::from_usize_lossy(n);
    }
    Ok(BoundResult {
        value,
        regime: Regime::Single,
        thresholds: None,
        sharp: false,
        extremal_hint: "no equality case stated".to_string(),
    })
}

/// `max(1, |t|)` bound on `|w₂ − t w₁²|` over Schwarz functions.
pub fn schwarz_fs_bound<T: Real>(t: T) -> BoundResult<T> {
    let one = T::one();
    let (value, regime, hint) = if t < -one {
        (-t, Regime::Left, "omega = z and rotations")
    } else if t > one {
        (t, Regime::Right, "omega = z and rotations")
    } else {
        (one, Regime::Middle, "omega = z^2 and rotations")
    };
    BoundResult {
        value,
        regime,
        thresholds: Some((-one, one)),
        sharp: true,
        extremal_hint: hint.to_string(),
    }
}

struct FsTable<T> {
    lower: T,
    upper: T,
    middle: T,
    left: T,
    right: T,
    lower_family: &'static str,
    upper_family: &'static str,
    lower_minus: bool,
}

fn fs_table<T: Real>(kind: ClassKind, target: Target, s: T, lambda: T) -> FsTable<T> {
    let l = T::lit;
    let s2 = s * s;
    match (kind, target) {
        (ClassKind::Starlike, Target::F) => {
            let c = (l(3.0) * s + l(1.0)) / (l(4.0) * s);
            FsTable {
                lower: (l(3.0) * s - l(1.0)) / (l(4.0) * s),
                upper: (l(3.0) * s + l(3.0)) / (l(4.0) * s),
                middle: s / l(2.0),
                left: -s2 * (lambda - c),
                right: s2 * (lambda - c),
                lower_family: "g_x",
                upper_family: "f_x",
                lower_minus: false,
            }
        }
        (ClassKind::Starlike, Target::ZOverF) => {
            let c = (s - l(1.0)) / (l(4.0) * s);
            FsTable {
                lower: (s - l(3.0)) / (l(4.0) * s),
                upper: (s + l(1.0)) / (l(4.0) * s),
                middle: s / l(2.0),
                left: s2 * (c - lambda),
                right: s2 * (lambda - c),
                lower_family: "f_x",
                upper_family: "g_x",
                lower_minus: true,
            }
        }
        (ClassKind::Starlike, Target::Inverse) => {
            let c = (l(5.0) * s - l(1.0)) / (l(4.0) * s);
            FsTable {
                lower: (l(5.0) * s - l(3.0)) / (l(4.0) * s),
                upper: (l(5.0) * s + l(1.0)) / (l(4.0) * s),
                middle: s / l(2.0),
                left: s2 * (c - lambda),
                right: s2 * (lambda - c),
                lower_family: "f_x",
                upper_family: "g_x",
                lower_minus: true,
            }
        }
        (ClassKind::Convex, Target::F) => {
            let c = (l(3.0) * s + l(1.0)) / (l(3.0) * s);
            FsTable {
                lower: (l(3.0) * s - l(1.0)) / (l(3.0) * s),
                upper: (s + l(1.0)) / s,
                middle: s / l(6.0),
                left: -s2 / l(4.0) * (lambda - c),
                right: s2 / l(4.0) * (lambda - c),
                lower_family: "G_x",
                upper_family: "F_x",
                lower_minus: false,
            }
        }
        (ClassKind::Convex, Target::ZOverF) => {
            let c = l(1.0) / (l(3.0) * s);
            FsTable {
                lower: -l(1.0) / s,
                upper: l(1.0) / (l(3.0) * s),
                middle: s / l(6.0),
                left: -s2 / l(4.0) * (lambda + c),
                right: s2 / l(4.0) * (lambda + c),
                lower_family: "F_x",
                upper_family: "G_x",
                lower_minus: true,
            }
        }
        (ClassKind::Convex, Target::Inverse) => {
            let c = (l(3.0) * s - l(1.0)) / (l(3.0) * s);
            FsTable {
                lower: (s - l(1.0)) / s,
                upper: (l(3.0) * s + l(1.0)) / (l(3.0) * s),
                middle: s / l(6.0),
                left: s2 / l(4.0) * (c - lambda),
                right: s2 / l(4.0) * (lambda - c),
                lower_family: "F_x",
                upper_family: "G_x",
                lower_minus: true,
            }
        }
    }
}

/// Sharp Fekete-Szegő bound for `f`, `z/f` or `f^{-1}` over either class.
///
/// The middle branch is the closed interval between the two thresholds.
pub fn fs_bound<T: Real>(kind: ClassKind, target: Target, s: T, lambda: T) -> Result<BoundResult<T>> {
    check_s(s)?;
    let t = fs_table(kind, target, s, lambda);
    let (one, two) = match kind {
        ClassKind::Starlike => ("Phi_{s,1}", "Phi_{s,2}"),
        ClassKind::Convex => ("K_{s,1}", "K_{s,2}"),
    };
    let (value, regime, hint) = if lambda < t.lower {
        (t.left, Regime::Left, format!("rotations of {one}"))
    } else if lambda > t.upper {
        (t.right, Regime::Right, format!("rotations of {one}"))
    } else {
        (
            t.middle,
            Regime::Middle,
            format!(
                "rotations of {two}; {} at the lower threshold, {} at the upper",
                t.lower_family, t.upper_family
            ),
        )
    };
    Ok(BoundResult {
        value,
        regime,
        thresholds: Some((t.lower, t.upper)),
        sharp: true,
        extremal_hint: hint,
    })
}

/// Functions attaining [`fs_bound`] at this `λ`, as named by the equality statements.
pub fn fs_equality_cases<T: Real>(
    kind: ClassKind,
    target: Target,
    s: T,
    lambda: T,
) -> Result<Vec<Equality>> {
    check_s(s)?;
    let t = fs_table(kind, target, s, lambda);
    Ok(if lambda < t.lower || lambda > t.upper {
        vec![Equality::Extremal(1)]
    } else if lambda == t.lower {
        vec![Equality::Family { minus: t.lower_minus }]
    } else if lambda == t.upper {
        vec![Equality::Family { minus: !t.lower_minus }]
    } else {
        vec![Equality::Extremal(2)]
    })
}

/// Bound on `|a₂a₄ − a₃²|`.
pub fn hankel22_bound<T: Real>(kind: ClassKind, s: T) -> Result<BoundResult<T>> {
    check_s(s)?;
    let l = T::lit;
    let s2 = s * s;
    Ok(match kind {
        ClassKind::Starlike => BoundResult {
            value: s2 / l(4.0),
            regime: Regime::Single,
            thresholds: None,
            sharp: true,
            extremal_hint: "rotations of Phi_{s,2}".to_string(),
        },
        ClassKind::Convex => BoundResult {
            value: s2 / l(36.0) * (l(1.0) + l(9.0) * s2 / (l(8.0) * (s2 + l(3.0) * s + l(6.0)))),
            regime: Regime::Single,
            thresholds: None,
            sharp: false,
            extremal_hint: "no equality case stated".to_string(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const KINDS: [ClassKind; 2] = [ClassKind::Starlike, ClassKind::Convex];

    #[test]
    fn coeff_bound_examples() {
        assert_abs_diff_eq!(coeff_bound(ClassKind::Starlike, 0.5, 3).unwrap().value, 0.375, epsilon = 1e-16);
        assert_abs_diff_eq!(coeff_bound(ClassKind::Convex, 0.5, 3).unwrap().value, 0.125, epsilon = 1e-16);
        for n in 2..40 {
            assert_eq!(coeff_bound(ClassKind::Starlike, 1.0, n).unwrap().value, 1.0);
        }
        assert!(!coeff_bound(ClassKind::Starlike, 0.5, 3).unwrap().sharp);
        assert!(matches!(coeff_bound(ClassKind::Starlike, 0.5, 1), Err(Error::BadIndex(1))));
        assert!(matches!(coeff_bound(ClassKind::Convex, 0.0, 3), Err(Error::BadS(_))));
    }

    #[test]
    fn fs_bound_examples() {
        let b = fs_bound(ClassKind::Starlike, Target::F, 0.5, 1.0).unwrap();
        assert_abs_diff_eq!(b.value, 0.25, epsilon = 1e-16);
        assert_eq!(b.regime, Regime::Middle);
        let (lo, hi) = b.thresholds.unwrap();
        assert_abs_diff_eq!(lo, 0.25, epsilon = 1e-16);
        assert_abs_diff_eq!(hi, 2.25, epsilon = 1e-16);

        let b = fs_bound(ClassKind::Starlike, Target::F, 0.5, 3.0).unwrap();
        assert_abs_diff_eq!(b.value, 0.4375, epsilon = 1e-16);
        assert_eq!(b.regime, Regime::Right);

        let b = fs_bound(ClassKind::Convex, Target::F, 0.5, 4.0).unwrap();
        assert_abs_diff_eq!(b.value, 0.25 / 4.0 * (4.0 - 2.5 / 1.5), epsilon = 1e-15);
        assert_abs_diff_eq!(b.value, 0.1458333333, epsilon = 1e-9);

        let b = fs_bound(ClassKind::Convex, Target::Inverse, 0.5, 2.0).unwrap();
        assert_abs_diff_eq!(b.value, 0.1041666667, epsilon = 1e-9);
        assert_eq!(b.regime, Regime::Right);
        let (lo, hi) = b.thresholds.unwrap();
        assert_abs_diff_eq!(lo, -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(hi, 5.0 / 3.0, epsilon = 1e-15);

        // λ = 0 for the convex class at s = 1 lies left of 2/3.
        let b = fs_bound(ClassKind::Convex, Target::F, 1.0, 0.0).unwrap();
        assert_eq!(b.regime, Regime::Left);
        assert_abs_diff_eq!(b.value, 1.0 / 3.0, epsilon = 1e-15);
        assert!(fs_bound(ClassKind::Convex, Target::F, 1.5, 0.0).is_err());
    }

    #[test]
    fn hankel22_examples() {
        let b = hankel22_bound(ClassKind::Starlike, 0.5).unwrap();
        assert_abs_diff_eq!(b.value, 0.0625, epsilon = 1e-16);
        assert!(b.sharp);
        assert_abs_diff_eq!(hankel22_bound(ClassKind::Starlike, 1.0).unwrap().value, 0.25, epsilon = 1e-16);
        let b = hankel22_bound(ClassKind::Convex, 0.5).unwrap();
        assert_abs_diff_eq!(b.value, 0.25 / 36.0 * (1.0 + 2.25 / 62.0), epsilon = 1e-16);
        assert_abs_diff_eq!(b.value, 0.0071965, epsilon = 1e-7);
        assert!(!b.sharp);
    }

    #[test]
    fn schwarz_bound_examples() {
        assert_eq!(schwarz_fs_bound(0.0).value, 1.0);
        assert_eq!(schwarz_fs_bound(0.0).regime, Regime::Middle);
        assert_eq!(schwarz_fs_bound(2.0).value, 2.0);
        assert_eq!(schwarz_fs_bound(2.0).regime, Regime::Right);
        assert_eq!(schwarz_fs_bound(-3.0).value, 3.0);
        assert_eq!(schwarz_fs_bound(-3.0).regime, Regime::Left);
    }

    #[test]
    fn fs_bound_is_continuous_at_thresholds() {
        for i in 1..=10 {
            let s = i as f64 / 10.0;
            for kind in KINDS {
                for target in Target::ALL {
                    let (lo, hi) = fs_bound(kind, target, s, 0.0).unwrap().thresholds.unwrap();
                    for th in [lo, hi] {
                        let t = fs_table(kind, target, s, th);
                        let outer = if th == lo { t.left } else { t.right };
                        assert!((outer - t.middle).abs() <= 1e-12, "{kind:?} {target:?} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn equality_cases_follow_regimes() {
        let s = 0.5;
        let (lo, hi) = fs_bound(ClassKind::Starlike, Target::F, s, 0.0).unwrap().thresholds.unwrap();
        assert_eq!(fs_equality_cases(ClassKind::Starlike, Target::F, s, lo).unwrap(), vec![Equality::Family { minus: false }]);
        assert_eq!(fs_equality_cases(ClassKind::Starlike, Target::F, s, hi).unwrap(), vec![Equality::Family { minus: true }]);
        assert_eq!(fs_equality_cases(ClassKind::Starlike, Target::F, s, 1.0).unwrap(), vec![Equality::Extremal(2)]);
        assert_eq!(fs_equality_cases(ClassKind::Starlike, Target::F, s, 9.0).unwrap(), vec![Equality::Extremal(1)]);
    }

    #[test]
    fn degenerate_class_collapse() {
        let s = 1e-6;
        for kind in KINDS {
            for target in Target::ALL {
                for &lambda in &[-2.0, 0.0, 1.0, 4.0] {
                    let v = fs_bound(kind, target, s, lambda).unwrap().value;
                    assert!((0.0..1e-5).contains(&v));
                }
            }
            assert!(hankel22_bound(kind, s).unwrap().value < 1e-11);
            assert!(coeff_bound(kind, s, 5).unwrap().value < 1e-5);
        }
    }

    proptest! {
        #[test]
        fn reduction_identities(s in 1e-3f64..=1.0, lambda in -50.0f64..50.0) {
            for kind in KINDS {
                let f1 = fs_bound(kind, Target::F, s, 1.0 - lambda).unwrap().value;
                let f2 = fs_bound(kind, Target::F, s, 2.0 - lambda).unwrap().value;
                let zf = fs_bound(kind, Target::ZOverF, s, lambda).unwrap().value;
                let inv = fs_bound(kind, Target::Inverse, s, lambda).unwrap().value;
                prop_assert!((zf - f1).abs() <= 1e-13 * (1.0 + f1));
                prop_assert!((inv - f2).abs() <= 1e-13 * (1.0 + f2));
                prop_assert!(zf >= 0.0 && inv >= 0.0);
            }
        }

        #[test]
        fn schwarz_substitutions(s in 1e-3f64..=1.0, lambda in -50.0f64..50.0) {
            let star = fs_bound(ClassKind::Starlike, Target::F, s, lambda).unwrap().value;
            let t = 2.0 * s * lambda - (3.0 * s + 1.0) / 2.0;
            prop_assert!((star - s / 2.0 * schwarz_fs_bound(t).value).abs() <= 1e-13 * (1.0 + star));
            let conv = fs_bound(ClassKind::Convex, Target::F, s, lambda).unwrap().value;
            let mu = (3.0 * s * lambda - 3.0 * s - 1.0) / 2.0;
            prop_assert!((conv - s / 6.0 * schwarz_fs_bound(mu).value).abs() <= 1e-13 * (1.0 + conv));
        }
    }
}
