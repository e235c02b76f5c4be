//! Bracketed scalar root finding.
//!
//! Regula falsi with the Illinois modification, interleaved with plain
//! bisection steps so the bracket provably shrinks. Callers always supply a
//! sign-changing bracket, which the strict-convexity theory guarantees holds
//! exactly one root; any root located inside the bracket is therefore the
//! answer, and no monotonicity assumption is needed.

use crate::error::{Error, Result};

/// Find a root of `f` in `[a, b]` given `fa = f(a)` and `fb = f(b)` with
/// opposite signs. Stops as soon as `|f| <= tol_f` or the bracket width
/// drops below `tol_x`; exceeding `max_iter` is a hard error, never a
/// silently wrong answer.
#[allow(clippy::too_many_arguments)]
pub fn solve_bracketed(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    tol_x: f64,
    tol_f: f64,
    max_iter: usize,
) -> Result<f64> {
    if fa.abs() <= tol_f {
        return Ok(a);
    }
    if fb.abs() <= tol_f {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::InternalInconsistency(
            "root bracket endpoints have the same sign".into(),
        ));
    }

    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    let mut last_side = 0i8;
    for it in 0..max_iter {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if hi - lo <= tol_x {
            return Ok(0.5 * (a + b));
        }

        // Alternate: interpolation step, then a guaranteed bisection step.
        let mut x = if it % 2 == 0 {
            (fa * b - fb * a) / (fa - fb)
        } else {
            0.5 * (a + b)
        };
        if !x.is_finite() || x <= lo || x >= hi {
            x = 0.5 * (lo + hi);
        }

        let fx = f(x);
        if fx.abs() <= tol_f {
            return Ok(x);
        }
        if fx.signum() == fb.signum() {
            b = x;
            fb = fx;
            if last_side == 1 {
                fa *= 0.5; // Illinois: damp the stale endpoint
            }
            last_side = 1;
        } else {
            a = x;
            fa = fx;
            if last_side == -1 {
                fb *= 0.5;
            }
            last_side = -1;
        }
    }
    Err(Error::ConvergenceFailure(max_iter))
}
