//! Bracketed scalar root finding: bisection followed by an Illinois
//! (modified false position) polish that never leaves the bracket.

use crate::error::{Error, Result};

/// Finds a root of `f` in `[lo, hi]`, which must bracket a sign change.
///
/// Iterates until the bracket is narrower than `tol` (absolute) or `f`
/// vanishes exactly.
pub fn find_root<F: FnMut(f64) -> f64>(
    func: &'static str,
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64> {
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::Bracket { func, lo: a, hi: b });
    }

    // A few bisection steps first so the secant-type updates start close.
    for _ in 0..8 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }

    let mut side = 0i8;
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        let mut c = (a * fb - b * fa) / (fb - fa);
        if !(c > a && c < b) {
            c = 0.5 * (a + b);
        }
        let fc = f(c);
        if fc == 0.0 {
            return Ok(c);
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        // Fall back to bisection if false position stalls on one side.
        let m = 0.5 * (a + b);
        if (b - a) > 4.0 * tol && (c - a).abs().min((b - c).abs()) < 1e-3 * (b - a) {
            let fm = f(m);
            if fm == 0.0 {
                return Ok(m);
            }
            if fm.signum() == fa.signum() {
                a = m;
                fa = fm;
            } else {
                b = m;
                fb = fm;
            }
        }
    }
    if (b - a).abs() > tol * 16.0 {
        return Err(Error::Convergence {
            func,
            at: 0.5 * (a + b),
            iterations: 200,
        });
    }
    // Return the endpoint with the smaller residual.
    Ok(if fa.abs() < fb.abs() { a } else { b })
}
