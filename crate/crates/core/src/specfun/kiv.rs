use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use super::{PhaseTable, SeriesPolicy};
use crate::error::{domain, Error, Result};

/// Largest acceptable estimate of the relative round-off in a series value
/// on the zero-free side `y ≥ ν`, where cancellation between terms grows
/// like `e^{2y}`. Crossed between `y = 11` and `y = 11.5` for `ν ≈ 1`.
const MAX_SERIES_ROUNDOFF: f64 = 1e-7;

/// Result of a power-series evaluation of `K_{iν}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEval {
    pub value: f64,
    /// Number of terms summed (k = 0..terms).
    pub terms: usize,
    /// Sum of term magnitudes, the scale of the accumulated round-off.
    pub magnitude: f64,
}

/// Evaluator for `K_{iν}(y)` at fixed order, holding the phase table and
/// the series prefactor.
#[derive(Debug, Clone)]
pub struct BesselKiv {
    nu: f64,
    policy: SeriesPolicy,
    phases: PhaseTable,
    prefactor: f64,
    /// `ln ν + Σ_{j≤k} ½ ln(ν² + j²) + ln k!`, the log of the k-th denominator.
    log_denominators: Vec<f64>,
}

impl BesselKiv {
    pub fn new(nu: f64, policy: SeriesPolicy) -> Result<Self> {
        if !(nu > 0.0) || !nu.is_finite() {
            return Err(domain("kiv", nu, "nu > 0"));
        }
        policy.validate()?;
        let phases = PhaseTable::new(nu, policy.k_hard_max)?;
        let prefactor = -(nu * PI / (nu * PI).sinh()).sqrt();
        let mut log_denominators = Vec::with_capacity(policy.k_hard_max + 1);
        let mut acc = nu.ln();
        log_denominators.push(acc);
        for k in 1..=policy.k_hard_max {
            let kf = k as f64;
            acc += 0.5 * (nu * nu + kf * kf).ln() + kf.ln();
            log_denominators.push(acc);
        }
        Ok(Self {
            nu,
            policy,
            phases,
            prefactor,
            log_denominators,
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn policy(&self) -> &SeriesPolicy {
        &self.policy
    }

    pub fn phases(&self) -> &PhaseTable {
        &self.phases
    }

    /// `K_{iν}(y)`, series below the switchover, asymptotic expansion above.
    pub fn eval(&self, y: f64) -> Result<f64> {
        if !(y > 0.0) || !y.is_finite() {
            return Err(domain("kiv", y, "y > 0"));
        }
        if y < self.policy.y_switch {
            self.series_ln(y.ln()).map(|s| s.value)
        } else {
            Ok(self.asymptotic(y))
        }
    }

    /// `K_{iν}(e^{ln_y})` by the power series; usable for arguments far
    /// below the smallest positive `f64`-representable `y²`.
    pub fn eval_ln(&self, ln_y: f64) -> Result<f64> {
        if ln_y.exp() >= self.policy.y_switch {
            return self.eval(ln_y.exp());
        }
        self.series_ln(ln_y).map(|s| s.value)
    }

    /// Power series in `y` (no branch dispatch).
    pub fn series(&self, y: f64) -> Result<SeriesEval> {
        if !(y > 0.0) || !y.is_finite() {
            return Err(domain("kiv", y, "y > 0"));
        }
        self.series_ln(y.ln())
    }

    fn series_ln(&self, ln_y: f64) -> Result<SeriesEval> {
        let ln_half_y = ln_y - LN_2;
        let theta = self.nu * ln_half_y;
        let mut sum = 0.0;
        let mut magnitude = 0.0;
        let mut converged = false;
        let mut k = 0;
        while k <= self.policy.k_hard_max {
            let log_amp = 2.0 * k as f64 * ln_half_y - self.log_denominators[k];
            let amp = log_amp.exp();
            sum += amp * (theta - self.phases.phase(k)).sin();
            magnitude += amp;
            // Compare amplitudes rather than signed terms so a single small
            // sine factor cannot stop the sum early.
            if k >= 5 && amp < self.policy.rel_tol * magnitude {
                converged = true;
                break;
            }
            k += 1;
        }
        let y = ln_y.exp();
        if !converged {
            return Err(Error::Convergence {
                func: "kiv",
                at: y,
                iterations: self.policy.k_hard_max,
            });
        }
        // No zeros for y ≥ ν, so a value swamped by cancellation is a failure.
        if y >= self.nu && f64::EPSILON * magnitude > MAX_SERIES_ROUNDOFF * sum.abs() {
            return Err(Error::Convergence {
                func: "kiv",
                at: y,
                iterations: k,
            });
        }
        Ok(SeriesEval {
            value: self.prefactor * sum,
            terms: k,
            magnitude: self.prefactor.abs() * magnitude,
        })
    }

    /// Large-argument expansion
    /// `K_{iν}(y) ~ sqrt(π/2y) e^{−y} Σ_k Π_{j≤k}(−4ν² − (2j−1)²) / (k! (8y)^k)`,
    /// summed up to its smallest term.
    pub fn asymptotic(&self, y: f64) -> f64 {
        let four_nu2 = 4.0 * self.nu * self.nu;
        let mut term = 1.0f64;
        let mut sum = 1.0;
        for k in 1..200 {
            let odd = (2 * k - 1) as f64;
            let next = term * (-four_nu2 - odd * odd) / (k as f64 * 8.0 * y);
            if next.abs() >= term.abs() {
                break;
            }
            term = next;
            sum += term;
            if term.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        (FRAC_PI_2 / y).sqrt() * (-y).exp() * sum
    }
}

/// `K_{iν}(y)` with the given policy.
pub fn kiv(nu: f64, y: f64, policy: SeriesPolicy) -> Result<f64> {
    BesselKiv::new(nu, policy)?.eval(y)
}

/// Leading large-`y` behaviour of `sqrt(y) K_{iν}(y)`, i.e. `sqrt(π/2) e^{−y}`.
///
/// This is the shape of the normalized wavefunction tail once the state's
/// normalization constant is applied; it carries no order dependence.
pub fn kiv_tail(_nu: f64, y: f64) -> Result<f64> {
    if !(y >= 1.0) || !y.is_finite() {
        return Err(domain("kiv_tail", y, "y >= 1"));
    }
    Ok(FRAC_PI_2.sqrt() * (-y).exp())
}
