//! Semiclassical solution with the Langer-corrected potential `−s0²/(2R²)`.
//!
//! Actions are in units of `ħ` and radii in units of the outer turning point
//! `R_+`, so the local momentum is `p(x) = s0 sqrt(1 − x²)/x` inside and
//! `κ(x) = s0 sqrt(x² − 1)/x` outside.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{domain, Error, Result};
use crate::qm::{check_grid, Eigenstate, Method, SystemParams, WavefunctionGrid};
use crate::quad::GaussLegendre;
use crate::roots::find_root;
use crate::specfun::airy_ai;

/// Half-width of the window around `x = 1` excluded from raw WKB grids.
pub const TURNING_POINT_WINDOW: f64 = 0.05;

/// Below this value of `sqrt|1 − x²|` the actions are evaluated from their
/// power series.
const SERIES_CUT: f64 = 0.1;

/// `(atanh v − v)/v³ = Σ v^{2j}/(2j+3)`.
fn inner_reduced(v: f64) -> f64 {
    let v2 = v * v;
    let mut term = 1.0;
    let mut sum = 0.0;
    for j in 0..30 {
        let t = term / (2 * j + 3) as f64;
        sum += t;
        if t < 1e-18 {
            break;
        }
        term *= v2;
    }
    sum
}

/// `(w − arctan w)/w³ = Σ (−1)^j w^{2j}/(2j+3)`.
fn outer_reduced(w: f64) -> f64 {
    let w2 = w * w;
    let mut term = 1.0;
    let mut sum = 0.0;
    for j in 0..30 {
        let t = term / (2 * j + 3) as f64;
        sum += t;
        if t.abs() < 1e-18 {
            break;
        }
        term *= -w2;
    }
    sum
}

/// Classical actions of the Langer-corrected inverse-square potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalAction {
    pub s0: f64,
}

impl ClassicalAction {
    pub fn new(params: SystemParams) -> Self {
        Self { s0: params.s0 }
    }

    /// `p(x) = s0 sqrt(1 − x²)/x` for `0 < x ≤ 1`.
    pub fn momentum(&self, x: f64) -> f64 {
        self.s0 * ((1.0 - x) * (1.0 + x)).max(0.0).sqrt() / x
    }

    /// `κ(x) = s0 sqrt(x² − 1)/x` for `x ≥ 1`.
    pub fn kappa(&self, x: f64) -> f64 {
        self.s0 * ((x - 1.0) * (x + 1.0)).max(0.0).sqrt() / x
    }

    /// `S_in(x) = ∫_x^1 p = s0 [ln(1/x) + ln(1 + sqrt(1−x²)) − sqrt(1−x²)]`.
    pub fn s_in(&self, x: f64) -> Result<f64> {
        if !(x > 0.0 && x <= 1.0) {
            return Err(domain("action_interior", x, "0 < x <= 1"));
        }
        Ok(self.s_in_ln(x.ln()))
    }

    fn s_in_ln(&self, ln_x: f64) -> f64 {
        let x = ln_x.exp();
        let v = ((1.0 - x) * (1.0 + x)).sqrt();
        if v < SERIES_CUT {
            self.s0 * v * v * v * inner_reduced(v)
        } else {
            self.s0 * (-ln_x + v.ln_1p() - v)
        }
    }

    /// `S_out(x) = ∫_1^x κ = s0 [arctan(1/sqrt(x²−1)) + sqrt(x²−1) − π/2]`.
    pub fn s_out(&self, x: f64) -> Result<f64> {
        if !(x >= 1.0) || !x.is_finite() {
            return Err(domain("action_exterior", x, "x >= 1"));
        }
        let w = ((x - 1.0) * (x + 1.0)).sqrt();
        // arctan(1/w) − π/2 = −arctan(w)
        Ok(if w < SERIES_CUT {
            self.s0 * w * w * w * outer_reduced(w)
        } else {
            self.s0 * (w - w.atan())
        })
    }

    /// Action of the closed orbit `x_c → 1 → x_c` at `E/E_c = ratio`.
    pub fn closed_orbit(&self, energy_ratio: f64) -> Result<f64> {
        if !(energy_ratio > 0.0 && energy_ratio <= 1.0) {
            return Err(domain("closed_orbit_action", energy_ratio, "0 < E/E_c <= 1"));
        }
        Ok(self.closed_orbit_ln(energy_ratio.ln()))
    }

    /// [`closed_orbit`](Self::closed_orbit) as a function of `ln(E/E_c) ≤ 0`.
    pub fn closed_orbit_ln(&self, ln_ratio: f64) -> f64 {
        2.0 * self.s_in_ln(0.5 * ln_ratio)
    }

    /// `(ξ, 𝒮/|ξ|)` of the uniform approximation at `x > 0`.
    ///
    /// Both are evaluated from `sqrt|1 − x²|` in a form that is regular
    /// through the turning point.
    fn uniform_coordinates(&self, x: f64) -> (f64, f64) {
        let c = (1.5 * self.s0).powf(2.0 / 3.0);
        if x <= 1.0 {
            let v = ((1.0 - x) * (1.0 + x)).sqrt();
            if v < SERIES_CUT {
                let g = inner_reduced(v);
                (-(1.5 * self.s0 * g).powf(2.0 / 3.0) * v * v, x * g.cbrt() / c)
            } else {
                let s = self.s_in_ln(x.ln());
                let xi = (1.5 * s).powf(2.0 / 3.0);
                (-xi, s / (self.momentum(x) * xi))
            }
        } else {
            let w = ((x - 1.0) * (x + 1.0)).sqrt();
            if w < SERIES_CUT {
                let h = outer_reduced(w);
                ((1.5 * self.s0 * h).powf(2.0 / 3.0) * w * w, x * h.cbrt() / c)
            } else {
                let s = self.s0 * (w - w.atan());
                let xi = (1.5 * s).powf(2.0 / 3.0);
                (xi, s / (self.kappa(x) * xi))
            }
        }
    }

    /// Unnormalized uniform wavefunction `sqrt(𝒮/|ξ|) Ai(ξ)`.
    pub fn uniform_shape(&self, x: f64) -> f64 {
        let (xi, ratio) = self.uniform_coordinates(x);
        ratio.sqrt() * airy_ai(xi)
    }

    /// Uniform-approximation coordinate `ξ(x)`.
    pub fn xi(&self, x: f64) -> f64 {
        self.uniform_coordinates(x).0
    }
}

/// Amplitudes of a WKB state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformState {
    pub state: Eigenstate,
    /// Normalization of the uniform approximation.
    pub d_norm: f64,
    /// Amplitude of the decaying exterior WKB solution.
    pub b_norm: f64,
    /// Amplitude of the interior WKB solution, `2 B`.
    pub a_norm: f64,
}

impl UniformState {
    /// Amplitudes with `B` chosen so the exterior solution reproduces the tail
    /// `C sqrt(π/2) e^{−s0 x}` of an exact state with constant `C`.
    pub fn tail_matched(state: Eigenstate, s0: f64, qm_norm_const: f64) -> Self {
        let b = qm_norm_const * (s0 * FRAC_PI_2).sqrt() * (-FRAC_PI_2).exp();
        Self::with_b(state, b)
    }

    /// Amplitudes with `B = 1`.
    pub fn unit(state: Eigenstate) -> Self {
        Self::with_b(state, 1.0)
    }

    fn with_b(state: Eigenstate, b: f64) -> Self {
        Self {
            state,
            d_norm: state.norm_const,
            b_norm: b,
            a_norm: 2.0 * b,
        }
    }
}

/// WKB solver for one channel.
#[derive(Debug, Clone)]
pub struct WkbSolver {
    params: SystemParams,
    action: ClassicalAction,
    gl: GaussLegendre,
}

impl WkbSolver {
    pub fn new(params: SystemParams) -> Result<Self> {
        let params = SystemParams::new(params.s0)?;
        Ok(Self {
            params,
            action: ClassicalAction::new(params),
            gl: GaussLegendre::new(20),
        })
    }

    pub fn action(&self) -> &ClassicalAction {
        &self.action
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    /// `ln(E/E_c)` solving `S_0 = 2π(n + 3/4)`.
    pub fn ln_energy_ratio(&self, n: usize) -> Result<f64> {
        let target = 2.0 * PI * (n as f64 + 0.75);
        let lo = 2.0 * (-PI * (n as f64 + 1.0) / self.params.s0 - 3.0);
        find_root(
            "wkb_eigenvalue",
            |l| self.action.closed_orbit_ln(l) - target,
            lo,
            0.0,
            1e-12 * lo.abs(),
        )
    }

    /// `D_n` such that the uniform wavefunction has unit norm on
    /// `[x_c, 35/s0]`.
    pub fn uniform_norm_const(&self, ln_xc: f64) -> f64 {
        let f = |x: f64| {
            let u = self.action.uniform_shape(x);
            u * u
        };
        let mut total = 0.0;
        if ln_xc < 0.0 {
            let panels = (-ln_xc / 0.5).ceil() as usize;
            total += self.gl.integrate_panels(ln_xc, 0.0, panels, |l| {
                let x = l.exp();
                x * f(x)
            });
        }
        let lo = ln_xc.exp().max(1.0);
        let hi = self.params.x_max();
        total += self
            .gl
            .integrate_panels(lo, hi, ((hi - lo) / 0.5).ceil() as usize, f);
        total.sqrt().recip()
    }

    pub fn eigenvalue(&self, n: usize) -> Result<Eigenstate> {
        let ln_xc = 0.5 * self.ln_energy_ratio(n)?;
        let d = self.uniform_norm_const(ln_xc);
        Ok(Eigenstate::new(n, ln_xc, d, Method::Wkb))
    }

    /// Raw interior/exterior WKB solution with the amplitudes of `amps`.
    pub fn raw_wavefunction(&self, amps: &UniformState, grid: &[f64]) -> Result<WavefunctionGrid> {
        let state = amps.state;
        check_grid(grid, &state, 0.0)?;
        if let Some(x) = grid
            .iter()
            .find(|x| (*x - 1.0).abs() < TURNING_POINT_WINDOW)
        {
            return Err(Error::Precondition(format!(
                "raw WKB grid point {x} lies within {TURNING_POINT_WINDOW} of the turning point"
            )));
        }
        let mut us = Vec::with_capacity(grid.len());
        for (i, &x) in grid.iter().enumerate() {
            let u = if i == 0 {
                // hard wall: the quantization condition puts a node here
                0.0
            } else if x < 1.0 {
                let s = self.action.s_in(x)?;
                amps.a_norm / self.action.momentum(x).sqrt() * (s - FRAC_PI_4).cos()
            } else {
                let s = self.action.s_out(x)?;
                amps.b_norm / self.action.kappa(x).sqrt() * (-s).exp()
            };
            us.push(u);
        }
        Ok(WavefunctionGrid {
            xs: grid.to_vec(),
            us,
            state,
        })
    }

    /// Normalized uniform approximation on `grid` (starting at `x_c`).
    pub fn uniform_wavefunction(&self, state: &Eigenstate, grid: &[f64]) -> Result<WavefunctionGrid> {
        check_grid(grid, state, 0.0)?;
        let us: Vec<f64> = grid
            .iter()
            .map(|&x| state.norm_const * self.action.uniform_shape(x))
            .collect();
        let mut wf = WavefunctionGrid {
            xs: grid.to_vec(),
            us,
            state: *state,
        };
        let norm = wf.norm();
        if norm > 0.0 {
            let scale = norm.sqrt().recip();
            wf.us.iter_mut().for_each(|u| *u *= scale);
        }
        Ok(wf)
    }
}

/// `S_in(x)` for the default channel-independent interface.
pub fn action_interior(params: SystemParams, x: f64) -> Result<f64> {
    ClassicalAction::new(params).s_in(x)
}

pub fn action_exterior(params: SystemParams, x: f64) -> Result<f64> {
    ClassicalAction::new(params).s_out(x)
}

pub fn closed_orbit_action(params: SystemParams, energy_ratio: f64) -> Result<f64> {
    ClassicalAction::new(params).closed_orbit(energy_ratio)
}

/// WKB eigenstate `n` from `S_0(E_n) = 2π(n + 3/4)`; `norm_const` holds `D_n`.
pub fn wkb_eigenvalue(params: SystemParams, n: usize) -> Result<Eigenstate> {
    WkbSolver::new(params)?.eigenvalue(n)
}

pub fn wkb_wavefunction_raw(
    params: SystemParams,
    amps: &UniformState,
    grid: &[f64],
) -> Result<WavefunctionGrid> {
    WkbSolver::new(params)?.raw_wavefunction(amps, grid)
}

pub fn uniform_wavefunction(
    params: SystemParams,
    state: &Eigenstate,
    grid: &[f64],
) -> Result<WavefunctionGrid> {
    WkbSolver::new(params)?.uniform_wavefunction(state, grid)
}
