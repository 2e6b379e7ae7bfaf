//! `a:b:step` grids.

use crate::{CliError, Result};

/// Slack for deciding that `(b − a)/step` is an integer.
pub const INCLUSIVE_TOL: f64 = 1e-9;

/// Grid points are snapped to this many decimals when that moves them by
/// rounding error only, so `0.1:1:0.1` yields `0.3` rather than `0.30000000000000004`.
const SNAP_DECIMALS: i32 = 12;

fn snap(v: f64) -> f64 {
    let scale = 10f64.powi(SNAP_DECIMALS);
    let s = (v * scale).round() / scale;
    if (s - v).abs() <= 4.0 * f64::EPSILON * v.abs().max(1.0) {
        s
    } else {
        v
    }
}

/// Expands `a:b:step`. `b` is included when `(b − a)/step` is integral within
/// [`INCLUSIVE_TOL`], and the last point is then exactly `b`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || CliError::Usage(format!("grid `{spec}` is not of the form a:b:step"));
    let parts: Vec<f64> = spec
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let [a, b, step] = parts[..] else {
        return Err(bad());
    };
    if !(a.is_finite() && b.is_finite() && step.is_finite()) {
        return Err(bad());
    }
    if step <= 0.0 {
        return Err(CliError::Usage(format!("grid `{spec}`: step must be positive")));
    }
    if b < a {
        return Err(CliError::Usage(format!("grid `{spec}`: end is below start")));
    }
    let ratio = (b - a) / step;
    let rounded = ratio.round();
    let (count, inclusive) = if (ratio - rounded).abs() <= INCLUSIVE_TOL {
        (rounded as usize, true)
    } else {
        (ratio.floor() as usize, false)
    };
    let mut out: Vec<f64> = (0..=count).map(|k| snap(a + k as f64 * step)).collect();
    if inclusive {
        out[count] = b;
    }
    Ok(out)
}

/// Integer grid, e.g. coefficient indices `2:10:1`.
pub fn parse_index_grid(spec: &str) -> Result<Vec<usize>> {
    parse_grid(spec)?
        .into_iter()
        .map(|v| {
            let r = v.round();
            if (v - r).abs() <= INCLUSIVE_TOL && r >= 0.0 {
                Ok(r as usize)
            } else {
                Err(CliError::Usage(format!("index grid `{spec}` produces non-integer {v}")))
            }
        })
        .collect()
}
