//! Derivative-free local refinement: golden-section line searches applied one
//! coordinate at a time inside a box.

/// Golden-section iterations per coordinate line search.
pub const GOLDEN_ITERATIONS: usize = 40;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Maximizes `f` on `[lo, hi]`, returning the best point evaluated and its value.
pub fn golden_max(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, iterations: usize) -> (f64, f64) {
    let (mut a, mut b) = (lo, hi);
    let mut best = (a, f(a));
    let fb = f(b);
    if fb > best.1 {
        best = (b, fb);
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iterations {
        if fc > best.1 {
            best = (c, fc);
        }
        if fd > best.1 {
            best = (d, fd);
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    for (x, v) in [(c, fc), (d, fd)] {
        if v > best.1 {
            best = (x, v);
        }
    }
    best
}

/// Coordinate-wise refinement of `x` inside `bounds`.
///
/// Each sweep runs one golden-section search per coordinate on a window
/// centred at the incumbent; the window halves after every sweep. Moves are
/// only accepted when they improve the objective, so the returned value is
/// never below `objective(x)`.
pub fn refine(
    objective: &dyn Fn(&[f64]) -> f64,
    x: &[f64],
    bounds: &[(f64, f64)],
    sweeps: usize,
) -> (Vec<f64>, f64) {
    let mut best_x = x.to_vec();
    let mut best = objective(&best_x);
    let mut scale = 0.5;
    for _ in 0..sweeps {
        for i in 0..best_x.len() {
            let (lo, hi) = bounds[i];
            let half = scale * (hi - lo);
            let a = (best_x[i] - half).max(lo);
            let b = (best_x[i] + half).min(hi);
            if b <= a {
                continue;
            }
            let mut probe = best_x.clone();
            let (t, v) = golden_max(
                |t| {
                    probe[i] = t;
                    objective(&probe)
                },
                a,
                b,
                GOLDEN_ITERATIONS,
            );
            if v > best {
                best = v;
                best_x[i] = t;
            }
        }
        scale *= 0.5;
    }
    (best_x, best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_interior_maximum() {
        let (x, v) = golden_max(|t| -(t - 0.3).powi(2), -1.0, 2.0, 60);
        assert!((x - 0.3).abs() < 1e-8);
        assert!(v <= 0.0 && v > -1e-15);
    }

    #[test]
    fn respects_box_edges() {
        let (x, v) = golden_max(|t| t, 0.0, 1.0, 40);
        assert_eq!(x, 1.0);
        assert_eq!(v, 1.0);
    }

    #[test]
    fn refine_improves_separable_objective() {
        let f = |x: &[f64]| -(x[0] - 0.2).powi(2) - (x[1] + 0.4).powi(2);
        let start = [0.9, 0.9];
        let (x, v) = refine(&f, &start, &[(-1.0, 1.0), (-1.0, 1.0)], 4);
        assert!(v > f(&start));
        assert!((x[0] - 0.2).abs() < 1e-6 && (x[1] + 0.4).abs() < 1e-6);
    }
}
