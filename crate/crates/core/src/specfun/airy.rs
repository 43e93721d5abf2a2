use std::f64::consts::{FRAC_PI_4, PI};

/// `|ξ|` beyond which the asymptotic expansions take over.
pub const AIRY_SPLIT: f64 = 8.0;

/// Above this `ξ` the Maclaurin series cancels badly (its two solutions grow
/// like `e^{ζ}` while `Ai` decays like `e^{−ζ}`), so the decaying side uses
/// the modified Bessel representation instead.
const MACLAURIN_RIGHT: f64 = 1.0;

const GAMMA_ONE_THIRD: f64 = 2.678_938_534_707_747_6;

/// Airy function of the first kind for real argument.
pub fn airy_ai(xi: f64) -> f64 {
    if xi.is_nan() {
        return f64::NAN;
    }
    if xi > AIRY_SPLIT {
        decaying(xi)
    } else if xi > MACLAURIN_RIGHT {
        bessel_form(xi)
    } else if xi >= -AIRY_SPLIT {
        maclaurin(xi)
    } else {
        oscillating(-xi)
    }
}

/// `Ai(ξ) = c1 f(ξ) − c2 g(ξ)` with the two power series solutions of
/// `y'' = ξ y`.
fn maclaurin(xi: f64) -> f64 {
    // Γ(2/3) from the reflection formula Γ(1/3)Γ(2/3) = 2π/√3.
    let gamma_two_thirds = 2.0 * PI / (3f64.sqrt() * GAMMA_ONE_THIRD);
    let c1 = 1.0 / (3f64.powf(2.0 / 3.0) * gamma_two_thirds);
    let c2 = 1.0 / (3f64.powf(1.0 / 3.0) * GAMMA_ONE_THIRD);
    let x3 = xi * xi * xi;
    let (mut f, mut tf) = (1.0, 1.0);
    let (mut g, mut tg) = (xi, xi);
    for k in 1..200 {
        let k3 = 3.0 * k as f64;
        tf *= x3 / ((k3 - 1.0) * k3);
        tg *= x3 / (k3 * (k3 + 1.0));
        f += tf;
        g += tg;
        if tf.abs() < 1e-18 * f.abs().max(1e-300) && tg.abs() < 1e-18 * g.abs().max(1e-300) {
            break;
        }
    }
    c1 * f - c2 * g
}

/// `Ai(ξ) = sqrt(ξ/3) K_{1/3}(ζ)/π`, `ζ = 2ξ^{3/2}/3`, with
/// `K_{1/3}(ζ) = ∫_0^∞ e^{−ζ cosh t} cosh(t/3) dt` summed by the trapezoid
/// rule. The integrand is positive and analytic in a strip, so the rule
/// converges exponentially and without cancellation.
fn bessel_form(xi: f64) -> f64 {
    let zeta = 2.0 / 3.0 * xi * xi.sqrt();
    let h = 0.05;
    // integrand relative to its value at t = 0 drops below 1e-20
    let t_max = (1.0 + 46.0 / zeta).acosh() + 1.0;
    let steps = (t_max / h).ceil() as usize;
    let f = |t: f64| (-zeta * (t.cosh() - 1.0)).exp() * (t / 3.0).cosh();
    let sum = 0.5 * f(0.0) + (1..=steps).map(|i| f(i as f64 * h)).sum::<f64>();
    (xi / 3.0).sqrt() / PI * (-zeta).exp() * h * sum
}

/// Coefficients `u_k = Γ(3k + 1/2) / (54^k k! Γ(k + 1/2))`.
fn next_u(u_prev: f64, k: usize) -> f64 {
    let k = k as f64;
    u_prev * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0))
}

fn decaying(x: f64) -> f64 {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let mut u = 1.0;
    let mut term = 1.0f64;
    let mut sum = 1.0;
    for k in 1..100 {
        u = next_u(u, k);
        let next = -term.signum() * u / zeta.powi(k as i32);
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 {
            break;
        }
    }
    (-zeta).exp() / (2.0 * PI.sqrt() * x.powf(0.25)) * sum
}

fn oscillating(z: f64) -> f64 {
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    let mut even = 0.0;
    let mut odd = 0.0;
    let mut u = 1.0;
    let mut last = f64::INFINITY;
    for k in 0..100usize {
        if k > 0 {
            u = next_u(u, k);
        }
        let mag = u / zeta.powi(k as i32);
        if mag >= last {
            break;
        }
        last = mag;
        // (−1)^{⌊k/2⌋}
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            even += sign * mag;
        } else {
            odd += sign * mag;
        }
        if mag < 1e-17 {
            break;
        }
    }
    let phase = zeta - FRAC_PI_4;
    (phase.cos() * even + phase.sin() * odd) / (PI.sqrt() * z.powf(0.25))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_origin() {
        assert!((airy_ai(0.0) - 0.355_028_053_887_817).abs() < 1e-15);
    }

    #[test]
    fn positive_seams_agree() {
        let (a, b) = (maclaurin(MACLAURIN_RIGHT), bessel_form(MACLAURIN_RIGHT));
        assert!((a / b - 1.0).abs() < 1e-14, "{a} {b}");
        let (a, b) = (bessel_form(AIRY_SPLIT), decaying(AIRY_SPLIT));
        assert!((a / b - 1.0).abs() < 1e-14, "{a} {b}");
    }

    #[test]
    fn negative_seam_agrees() {
        let inner = maclaurin(-AIRY_SPLIT);
        let outer = oscillating(AIRY_SPLIT);
        assert!((inner - outer).abs() < 1e-8, "{inner} {outer}");
    }

    #[test]
    fn tiny_and_positive_far_right() {
        for x in [20.0, 30.0, 50.0] {
            let v = airy_ai(x);
            assert!(v > 0.0 && v < 1e-14);
        }
    }

    #[test]
    fn first_zero_is_bracketed() {
        assert!(airy_ai(-2.3381) > 0.0);
        assert!(airy_ai(-2.3382) < 0.0);
    }
}
