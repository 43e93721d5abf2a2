//! Special functions: `K_{iν}(y)` for real argument and purely imaginary
//! order, the Gamma-function phases that drive its power series, and the
//! Airy function `Ai`.

mod airy;
mod kiv;

pub use airy::{airy_ai, AIRY_SPLIT};
pub use kiv::{kiv, kiv_tail, BesselKiv, SeriesEval};

use crate::error::{domain, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Number of terms summed explicitly in [`phase_phi0`] before the
/// Euler–Maclaurin tail takes over.
pub const PHI0_TERMS: usize = 1000;

/// Truncation and branch-selection policy for [`kiv`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    /// Stop once a term's magnitude falls below this fraction of the
    /// accumulated magnitude.
    pub rel_tol: f64,
    /// Hard cap on the number of series terms.
    pub k_hard_max: usize,
    /// Arguments at or above this use the large-`y` asymptotic expansion.
    pub y_switch: f64,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        Self {
            rel_tol: 1e-16,
            k_hard_max: 60,
            y_switch: 9.0,
        }
    }
}

impl SeriesPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1e-10) {
            return Err(domain("SeriesPolicy", self.rel_tol, "0 < rel_tol < 1e-10"));
        }
        if self.k_hard_max < 30 {
            return Err(domain("SeriesPolicy", self.k_hard_max as f64, "k_hard_max >= 30"));
        }
        if !(8.0..=11.0).contains(&self.y_switch) {
            return Err(domain("SeriesPolicy", self.y_switch, "8 <= y_switch <= 11"));
        }
        Ok(())
    }
}

/// Phases `φ_{ν,k} = arg Γ(1 + k + iν)` for `k = 0..=k_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseTable {
    nu: f64,
    cumulative: Vec<f64>,
}

impl PhaseTable {
    pub fn new(nu: f64, k_max: usize) -> Result<Self> {
        let phi0 = phase_phi0(nu, PHI0_TERMS)?;
        let mut cumulative = Vec::with_capacity(k_max + 1);
        cumulative.push(phi0);
        let mut acc = phi0;
        for k in 1..=k_max {
            acc += (nu / k as f64).atan();
            cumulative.push(acc);
        }
        Ok(Self { nu, cumulative })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn phi0(&self) -> f64 {
        self.cumulative[0]
    }

    /// `φ_{ν,k}`; panics if `k` exceeds the table.
    pub fn phase(&self, k: usize) -> f64 {
        self.cumulative[k]
    }

    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn k_max(&self) -> usize {
        self.cumulative.len() - 1
    }
}

/// `φ_{ν,0} = arg Γ(1 + iν) = −νγ + Σ_{s≥0} [ν/(1+s) − arctan(ν/(1+s))]`.
///
/// The first `terms + 1` summands are added explicitly; the remainder is
/// evaluated by Euler–Maclaurin, which is accurate to round-off once the
/// cut sits well above `ν`.
pub fn phase_phi0(nu: f64, terms: usize) -> Result<f64> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(domain("phase_phi0", nu, "nu > 0"));
    }
    let summand = |m: f64| nu / m - (nu / m).atan();
    let mut sum = 0.0;
    let mut comp = 0.0;
    for s in 0..=terms {
        // Kahan
        let y = summand(1.0 + s as f64) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let m = (terms + 2) as f64;
    let m = m.max(1.0);
    let integral = m * (nu / m).atan() - nu + 0.5 * nu * (nu * nu / (m * m)).ln_1p();
    let deriv = -nu.powi(3) / (m * m * (m * m + nu * nu));
    let tail = integral + 0.5 * summand(m) - deriv / 12.0;
    Ok(-nu * EULER_GAMMA + sum + tail)
}
