//! Periodic-orbit view of the geometric spectrum `E_n = E_0 exp(−2πn/s0)`.
//!
//! Poisson resummation of `Σ δ(E − E_n)` gives the exact trace formula
//!
//! ```text
//! g(E) = s0/(2π|E|) · [1 + 2 Σ_{k≥1} cos(k s0 ln(E_0/E))]
//! ```
//!
//! with a single primitive orbit of action `S(E) = s0 ln(E_0/E)`, amplitude
//! `2F'(E)` and Maslov index zero. The first term is the smooth
//! (Thomas–Fermi) density; reading it as the s-wave density of a radial
//! potential and inverting the Abel transform recovers `V(r) → −s0²/(2r²)`.

use std::f64::consts::{PI, SQRT_2};

use crate::error::{domain, Result};
use crate::quad::GaussLegendre;

/// Maslov index of the primitive orbit.
pub const MASLOV_INDEX: i32 = 0;

/// Parameters of the trace formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSpec {
    /// Deepest level `E_0 < 0`.
    pub e0: f64,
    pub s0: f64,
    /// Number of harmonics kept.
    pub k_max: usize,
    /// Gaussian width in `ln|E|` applied to the oscillating part; zero keeps
    /// the bare partial sum.
    pub smoothing: f64,
}

impl TraceSpec {
    pub fn new(e0: f64, s0: f64, k_max: usize, smoothing: f64) -> Result<Self> {
        if !(e0 < 0.0) || !e0.is_finite() {
            return Err(domain("TraceSpec", e0, "e0 < 0"));
        }
        if !(s0 > 0.0) || !s0.is_finite() {
            return Err(domain("TraceSpec", s0, "s0 > 0"));
        }
        if k_max < 1 {
            return Err(domain("TraceSpec", k_max as f64, "k_max >= 1"));
        }
        if !(smoothing >= 0.0) || !smoothing.is_finite() {
            return Err(domain("TraceSpec", smoothing, "smoothing >= 0"));
        }
        Ok(Self {
            e0,
            s0,
            k_max,
            smoothing,
        })
    }

    /// Default harmonic cutoff and smoothing for plotting.
    pub fn with_defaults(e0: f64, s0: f64) -> Result<Self> {
        Self::new(e0, s0, 200, 0.01)
    }

    fn check_energy(&self, func: &'static str, energy: f64) -> Result<()> {
        if !(energy < 0.0) || !energy.is_finite() {
            return Err(domain(func, energy, "energy < 0"));
        }
        Ok(())
    }

    /// `E_n = E_0 exp(−2πn/s0)`.
    pub fn geometric_level(&self, n: usize) -> f64 {
        self.e0 * (-2.0 * PI * n as f64 / self.s0).exp()
    }

    /// Smooth counting function `F(E) = (s0/2π) ln(E_0/E)`; `F(E_n) = n`.
    pub fn level_count(&self, energy: f64) -> Result<f64> {
        self.check_energy("level_count", energy)?;
        Ok(self.s0 / (2.0 * PI) * (self.e0 / energy).ln())
    }

    /// Action of the primitive periodic orbit, `S(E) = s0 ln(E_0/E)` (units of ħ).
    pub fn orbit_action(&self, energy: f64) -> Result<f64> {
        self.check_energy("orbit_action", energy)?;
        Ok(self.s0 * (self.e0 / energy).ln())
    }

    /// `g̃(E) = s0/(2π|E|)`.
    pub fn smooth_density(&self, energy: f64) -> Result<f64> {
        self.check_energy("smooth_density", energy)?;
        Ok(self.s0 / (2.0 * PI * energy.abs()))
    }

    /// Truncated trace formula, with each harmonic damped by
    /// `exp(−(k s0 σ)²/2)` when `smoothing = σ > 0` (a Gaussian convolution in
    /// `ln|E|` of the oscillating factor).
    pub fn trace_density(&self, energy: f64) -> Result<f64> {
        let smooth = self.smooth_density(energy)?;
        let phase = self.s0 * (self.e0 / energy).ln();
        let sigma = self.smoothing * self.s0;
        let osc: f64 = (1..=self.k_max)
            .map(|k| {
                let k = k as f64;
                (-0.5 * (k * sigma).powi(2)).exp() * (k * phase).cos()
            })
            .sum();
        Ok(smooth * (1.0 + 2.0 * osc))
    }

    /// Unsmoothed partial sum regardless of `smoothing`.
    pub fn trace_density_raw(&self, energy: f64) -> Result<f64> {
        Self {
            smoothing: 0.0,
            ..*self
        }
        .trace_density(energy)
    }

    /// Inverse-Abel `y(V) = dr/dV` of the smooth density, for `E_0 < V < 0`.
    pub fn abel_y_of_v(&self, v: f64) -> Result<f64> {
        if !(v > self.e0 && v < 0.0) {
            return Err(domain("abel_y_of_v", v, "E_0 < V < 0"));
        }
        let above = v - self.e0;
        let depth = -v;
        let pref = self.s0 / (PI * SQRT_2);
        Ok(pref * (1.0 / (depth * above.sqrt()) + depth.powf(-1.5) * (above / depth).sqrt().atan()))
    }

    /// Lower turning radius anchoring `r(V)`: where `−s0²/(2r²)` equals `E_0`.
    pub fn anchor_radius(&self) -> f64 {
        self.s0 / (-2.0 * self.e0).sqrt()
    }

    /// `∫_a^b y(V) dV` for `E_0 ≤ a ≤ b < 0`.
    fn integrate_y(&self, gl: &GaussLegendre, a: f64, b: f64) -> f64 {
        let mid = 0.5 * self.e0;
        if b <= a {
            return 0.0;
        }
        let mut total = 0.0;
        // V = E_0 + t² removes the inverse square root at E_0.
        if a < mid {
            let hi = b.min(mid);
            let (t0, t1) = ((a - self.e0).max(0.0).sqrt(), (hi - self.e0).sqrt());
            let panels = (((t1 - t0) / (0.05 * (-self.e0).sqrt())).ceil() as usize).max(1);
            total += gl.integrate_panels(t0, t1, panels, |t| {
                let v = self.e0 + t * t;
                2.0 * t * self.abel_y_of_v(v).unwrap_or(0.0)
            });
        }
        // V = −e^u towards the accumulation point.
        if b > mid {
            let lo = a.max(mid);
            let (u0, u1) = ((-b).ln(), (-lo).ln());
            let panels = (((u1 - u0) / 0.25).ceil() as usize).max(1);
            total += gl.integrate_panels(u0, u1, panels, |u| {
                let depth = u.exp();
                depth * self.abel_y_of_v(-depth).unwrap_or(0.0)
            });
        }
        total
    }

    /// `r(V) = r(E_0) + ∫_{E_0}^V y(V') dV'` on a sorted grid inside `(E_0, 0)`.
    pub fn abel_reconstruct_potential(&self, v_grid: &[f64]) -> Result<PotentialProfile> {
        let gl = GaussLegendre::new(20);
        let mut v_samples = Vec::with_capacity(v_grid.len());
        let mut r_samples = Vec::with_capacity(v_grid.len());
        let mut r = self.anchor_radius();
        let mut prev = self.e0;
        for &v in v_grid {
            let y = self.abel_y_of_v(v)?;
            if v < prev {
                return Err(domain("abel_reconstruct_potential", v, "sorted V grid"));
            }
            r += self.integrate_y(&gl, prev, v);
            prev = v;
            v_samples.push((v, y));
            r_samples.push((r, v));
        }
        Ok(PotentialProfile {
            v_samples,
            r_samples,
        })
    }
}

/// Samples of the inverse-Abel reconstruction.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialProfile {
    /// `(V, y(V))`.
    pub v_samples: Vec<(f64, f64)>,
    /// `(r, V(r))`, increasing in both.
    pub r_samples: Vec<(f64, f64)>,
}

/// Number of Efimov states between `E ~ 1/r0²` and `E ~ 1/a²`:
/// `N = (s0/π) ln(a/r0)`.
pub fn count_states(s0: f64, a_over_r0: f64) -> Result<f64> {
    if !(s0 > 0.0) {
        return Err(domain("count_states", s0, "s0 > 0"));
    }
    if !(a_over_r0 >= 1.0) || !a_over_r0.is_finite() {
        return Err(domain("count_states", a_over_r0, "a/r0 >= 1"));
    }
    Ok(s0 / PI * a_over_r0.ln())
}
