//! Independent reference implementations shared by the integration tests.
//! None of these call into the crate's numerics.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Adaptive Simpson quadrature with Richardson correction.
pub fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let diff = left + right - whole;
        if depth == 0 || diff.abs() <= 15.0 * tol {
            return left + right + diff / 15.0;
        }
        rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    rec(f, a, b, fa, fm, fb, whole, tol, 30)
}

/// `K_{iν}(y) = ∫_0^∞ e^{−y cosh t} cos(νt) dt` by the trapezoid rule,
/// which converges exponentially for this even, entire integrand.
pub fn kiv_integral(nu: f64, y: f64) -> f64 {
    let h = 0.01;
    // integrand below 1e-300 once y cosh t > 690
    let steps = ((700.0 / y).acosh() / h).ceil() as usize;
    let f = |t: f64| (-y * t.cosh()).exp() * (nu * t).cos();
    h * (0.5 * f(0.0) + (1..=steps).map(|i| f(i as f64 * h)).sum::<f64>())
}

/// Plain bisection to full double precision.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    assert!(flo * f(hi) <= 0.0, "no sign change on [{lo}, {hi}]");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `arg Γ(1 + iν)` from the product formula, with `terms` explicit summands
/// and a Richardson-extrapolated tail (the remainder falls off like `1/M²`).
pub fn phi0_richardson(nu: f64, terms: usize) -> f64 {
    let partial = |m: usize| {
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for s in 1..=m {
            let x = nu / s as f64;
            let y = (x - x.atan()) - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        sum
    };
    let a = partial(terms);
    let b = partial(2 * terms);
    let extrapolated = b + (b - a) / 3.0;
    -nu * 0.577_215_664_901_532_9 + extrapolated
}

/// Closed-form `r(V)` obtained by integrating `y(V)` analytically:
/// `r = r0 + 2k arccos(sqrt(V/E0)) / sqrt(−V)` with `k = s0/(π√2)`.
pub fn abel_radius(e0: f64, s0: f64, v: f64) -> f64 {
    let k = s0 / (PI * 2f64.sqrt());
    s0 / (-2.0 * e0).sqrt() + 2.0 * k * (v / e0).sqrt().acos() / (-v).sqrt()
}

/// Direct inverse-Abel integral for the smooth density `s0/(2π|E|)`,
/// `y(V) = √2 [g(E0)/sqrt(V − E0) + ∫_{E0}^V g'(E)/sqrt(V − E) dE]`,
/// with `E = V − t²` removing the endpoint singularity.
pub fn abel_y_quadrature(e0: f64, s0: f64, v: f64) -> f64 {
    let g = |e: f64| s0 / (2.0 * PI * e.abs());
    let gp = |e: f64| s0 / (2.0 * PI * e * e);
    let t_max = (v - e0).sqrt();
    let integral = simpson(&|t: f64| 2.0 * gp(v - t * t), 0.0, t_max, 1e-15);
    2f64.sqrt() * (g(e0) / t_max + integral)
}

/// Linear interpolation of `(xs, ys)` at `x`; zero outside the table.
pub fn interp(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    if x < xs[0] || x > xs[xs.len() - 1] {
        return 0.0;
    }
    let i = xs.partition_point(|&p| p <= x).clamp(1, xs.len() - 1);
    let (x0, x1) = (xs[i - 1], xs[i]);
    let t = (x - x0) / (x1 - x0);
    ys[i - 1] + t * (ys[i] - ys[i - 1])
}
