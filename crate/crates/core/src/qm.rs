//! Exact eigenstates of `-u'' - (s0² + 1/4)/R² u = 2E u` with `u(R_c) = 0`.
//!
//! In the scaled radius `x = R/R_+` every eigenfunction is a segment of the
//! universal function `sqrt(s0 x) K_{i s0}(s0 x)`; state `n` starts at the
//! `(n+1)`-th zero `y_{n+1}` of `K_{i s0}`, so `(x_c)_n = y_{n+1}/s0` and
//! `E_n/E_c = (x_c)_n²`.

use std::f64::consts::{LN_2, PI};

use crate::error::{domain, Error, Result};
use crate::quad::{trapezoid, GaussLegendre};
use crate::roots::find_root;
use crate::specfun::{BesselKiv, SeriesPolicy};

/// Physical constants of the channel. Units are `ħ = m = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub s0: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        Self {
            s0: crate::S0_BOSONS,
        }
    }
}

impl SystemParams {
    pub fn new(s0: f64) -> Result<Self> {
        if !(s0 > 0.0) || !s0.is_finite() {
            return Err(domain("SystemParams", s0, "s0 > 0"));
        }
        Ok(Self { s0 })
    }

    /// Spacing of successive levels in `ln x_c`, `π/s0`.
    pub fn log_spacing(&self) -> f64 {
        PI / self.s0
    }

    /// Ratio of successive energies, `exp(2π/s0)`.
    pub fn energy_ratio(&self) -> f64 {
        (2.0 * PI / self.s0).exp()
    }

    /// Upper end of the normalization domain, `x = 35/s0` (`y = 35`).
    pub fn x_max(&self) -> f64 {
        Y_MAX / self.s0
    }
}

/// `y` at which the normalization integrals stop; the integrand is below
/// `1e-30` beyond.
pub const Y_MAX: f64 = 35.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Qm,
    Wkb,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Qm => "QM",
            Method::Wkb => "WKB",
        })
    }
}

/// A bound state in scaled units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenstate {
    pub n: usize,
    /// `ln (x_c)_n`.
    pub ln_xc: f64,
    /// `E_n / E_c = exp(2 ln x_c)`.
    pub energy_ratio: f64,
    /// `C_n` for exact states, `D_n` for uniform WKB states.
    pub norm_const: f64,
    pub method: Method,
}

impl Eigenstate {
    pub fn new(n: usize, ln_xc: f64, norm_const: f64, method: Method) -> Self {
        Self {
            n,
            ln_xc,
            energy_ratio: (2.0 * ln_xc).exp(),
            norm_const,
            method,
        }
    }

    pub fn x_c(&self) -> f64 {
        self.ln_xc.exp()
    }
}

/// Sampled wavefunction `u(x)` on an increasing grid starting at `x_c`.
///
/// Exact and uniform-WKB grids are normalized to unit trapezoid norm; raw
/// WKB grids carry the tail-matched amplitude instead.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionGrid {
    pub xs: Vec<f64>,
    pub us: Vec<f64>,
    pub state: Eigenstate,
}

impl WavefunctionGrid {
    /// `∫ u² dx` by the trapezoid rule on the stored samples.
    pub fn norm(&self) -> f64 {
        let sq: Vec<f64> = self.us.iter().map(|u| u * u).collect();
        trapezoid(&self.xs, &sq)
    }

    pub fn peak(&self) -> f64 {
        self.us.iter().fold(0.0f64, |m, u| m.max(u.abs()))
    }

    fn normalize_in_place(&mut self) {
        let norm = self.norm();
        if norm > 0.0 {
            let scale = norm.sqrt().recip();
            self.us.iter_mut().for_each(|u| *u *= scale);
        }
    }
}

/// Sampling density of wavefunction grids.
///
/// Points are log-spaced in `x` from `x_c` up to `x = 0.1`, then uniform up
/// to `x = 35/s0`. `density` is the number of samples per unit `x` on the
/// uniform part; the log part uses `Δ ln x = 10/density`, so the two
/// spacings meet continuously at `x = 0.1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub density: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { density: 1000 }
    }
}

const GRID_JOIN: f64 = 0.1;

impl GridSpec {
    pub fn new(density: usize) -> Result<Self> {
        if density < 10 {
            return Err(domain("GridSpec", density as f64, "density >= 10"));
        }
        Ok(Self { density })
    }

    pub fn build(&self, x_c: f64, x_max: f64) -> Vec<f64> {
        let h = 1.0 / self.density as f64;
        let ln_step = h / GRID_JOIN;
        let mut xs = Vec::new();
        let mut start_linear = x_c;
        if x_c < GRID_JOIN {
            let span = GRID_JOIN.ln() - x_c.ln();
            let steps = (span / ln_step).ceil().max(1.0) as usize;
            let step = span / steps as f64;
            let ln0 = x_c.ln();
            xs.push(x_c);
            for i in 1..steps {
                xs.push((ln0 + step * i as f64).exp());
            }
            start_linear = GRID_JOIN;
        }
        let span = x_max - start_linear;
        let steps = (span / h).ceil().max(1.0) as usize;
        let step = span / steps as f64;
        for i in 0..=steps {
            xs.push(start_linear + step * i as f64);
        }
        xs
    }
}

/// Exact solver for one channel: caches the `K_{i s0}` evaluator.
#[derive(Debug, Clone)]
pub struct QmSolver {
    params: SystemParams,
    kiv: BesselKiv,
    gl: GaussLegendre,
}

impl QmSolver {
    pub fn new(params: SystemParams) -> Result<Self> {
        Self::with_policy(params, SeriesPolicy::default())
    }

    pub fn with_policy(params: SystemParams, policy: SeriesPolicy) -> Result<Self> {
        let params = SystemParams::new(params.s0)?;
        Ok(Self {
            params,
            kiv: BesselKiv::new(params.s0, policy)?,
            gl: GaussLegendre::new(20),
        })
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn kiv(&self) -> &BesselKiv {
        &self.kiv
    }

    /// `ln y_m`, where `y_1 > y_2 > …` are the zeros of `K_{i s0}` below `s0`.
    pub fn ln_bessel_zero(&self, index: usize) -> Result<f64> {
        if index == 0 {
            return Err(domain("bessel_zero", 0.0, "index >= 1"));
        }
        let nu = self.params.s0;
        let phi0 = self.kiv.phases().phi0();
        // Zero of the k = 0 term: ν ln(y/2) − φ0 = −mπ.
        let guess = LN_2 + (phi0 - index as f64 * PI) / nu;
        let half = 0.5 * PI / nu;
        let f = |ln_y: f64| self.kiv.eval_ln(ln_y).unwrap_or(f64::NAN);
        let mut lo = guess - half;
        let mut hi = (guess + half).min(nu.ln());
        for _ in 0..4 {
            if f(lo).signum() != f(hi).signum() {
                break;
            }
            lo -= 0.25 * half;
            hi = (hi + 0.25 * half).min(nu.ln());
        }
        let root = find_root("bessel_zero", f, lo, hi, 1e-13 * guess.abs().max(1.0))?;
        // The root must be the one predicted by the leading term.
        if (root - guess).abs() > half {
            return Err(Error::Bracket {
                func: "bessel_zero",
                lo,
                hi,
            });
        }
        Ok(root)
    }

    pub fn bessel_zero(&self, index: usize) -> Result<f64> {
        self.ln_bessel_zero(index).map(f64::exp)
    }

    /// Normalization constant `C` for a state whose domain starts at `ln x_c`.
    pub fn norm_const(&self, ln_xc: f64) -> Result<f64> {
        let s0 = self.params.s0;
        let ln_yc = ln_xc + s0.ln();
        // ∫ u² dx = C²/s0 ∫ y K(y)² dy, in ln y below x = 1 and linear y above.
        let mut err = None;
        let mut sample = |y: f64, ln_y: f64| match self.kiv.eval_ln(ln_y) {
            Ok(k) => y * k * k,
            Err(e) => {
                err.get_or_insert(e);
                0.0
            }
        };
        let ln_split = s0.ln();
        let mut total = 0.0;
        if ln_yc < ln_split {
            let panels = ((ln_split - ln_yc) / 0.5).ceil() as usize;
            total += self.gl.integrate_panels(ln_yc, ln_split, panels, |ln_y| {
                let y = ln_y.exp();
                y * sample(y, ln_y)
            });
        }
        let y_lo = ln_yc.exp().max(s0);
        let panels = ((Y_MAX - y_lo) / 0.5).ceil() as usize;
        total += self
            .gl
            .integrate_panels(y_lo, Y_MAX, panels, |y| sample(y, y.ln()));
        if let Some(e) = err {
            return Err(e);
        }
        Ok((s0 / total).sqrt())
    }

    pub fn eigenvalue(&self, n: usize) -> Result<Eigenstate> {
        let ln_xc = self.ln_bessel_zero(n + 1)? - self.params.s0.ln();
        let c = self.norm_const(ln_xc)?;
        Ok(Eigenstate::new(n, ln_xc, c, Method::Qm))
    }

    /// `u(x) / C = sqrt(s0 x) K_{i s0}(s0 x)`.
    pub fn universal(&self, x: f64) -> Result<f64> {
        let y = self.params.s0 * x;
        Ok(y.sqrt() * self.kiv.eval_ln(y.ln())?)
    }

    pub fn wavefunction(&self, state: &Eigenstate, grid: &[f64]) -> Result<WavefunctionGrid> {
        check_grid(grid, state, 30.0 / self.params.s0)?;
        let mut us = Vec::with_capacity(grid.len());
        us.push(0.0);
        for &x in &grid[1..] {
            us.push(state.norm_const * self.universal(x)?);
        }
        let mut wf = WavefunctionGrid {
            xs: grid.to_vec(),
            us,
            state: *state,
        };
        wf.normalize_in_place();
        Ok(wf)
    }
}

pub(crate) fn check_grid(grid: &[f64], state: &Eigenstate, min_end: f64) -> Result<()> {
    let x_c = state.x_c();
    let first = *grid
        .first()
        .ok_or_else(|| Error::Precondition("empty grid".into()))?;
    if (first - x_c).abs() > 1e-9 * x_c {
        return Err(Error::Precondition(format!(
            "grid starts at {first}, state {} has x_c = {x_c}",
            state.n
        )));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Precondition("grid not strictly increasing".into()));
    }
    let last = grid[grid.len() - 1];
    if last < min_end * (1.0 - 1e-12) {
        return Err(Error::Precondition(format!(
            "grid ends at {last}, needs to reach {min_end}"
        )));
    }
    Ok(())
}

/// `y_m`, the `m`-th zero of `K_{i s0}` counted downward from `s0`.
pub fn bessel_zero(params: SystemParams, index: usize) -> Result<f64> {
    QmSolver::new(params)?.bessel_zero(index)
}

/// Exact eigenstate `n`, with `ln x_c = ln(y_{n+1}/s0)` and `C_n` filled.
pub fn qm_eigenvalue(params: SystemParams, n: usize) -> Result<Eigenstate> {
    QmSolver::new(params)?.eigenvalue(n)
}

/// `α0 = −π/s0 + φ_{s0,0}/s0 + ln(2/s0)`.
pub fn alpha0(params: SystemParams) -> Result<f64> {
    let s0 = params.s0;
    let phi0 = crate::specfun::phase_phi0(s0, crate::specfun::PHI0_TERMS)?;
    Ok(-PI / s0 + phi0 / s0 + (2.0 / s0).ln())
}

/// Geometric-law prediction `ln (x_c)_n ≈ −nπ/s0 + α0`.
pub fn qm_asymptotic_lnxc(params: SystemParams, n: usize) -> Result<f64> {
    Ok(-(n as f64) * PI / params.s0 + alpha0(params)?)
}

/// Samples the normalized exact eigenfunction on `grid`, which must start
/// at the state's `x_c` and reach `30/s0`.
pub fn qm_wavefunction(
    state: &Eigenstate,
    params: SystemParams,
    grid: &[f64],
) -> Result<WavefunctionGrid> {
    QmSolver::new(params)?.wavefunction(state, grid)
}

/// Strict sign changes of `u` for `x > x_c`; exact zeros are skipped.
pub fn count_interior_zeros(grid: &WavefunctionGrid) -> usize {
    let mut count = 0;
    let mut prev = 0.0f64;
    for &u in grid.us.iter().skip(1) {
        if u == 0.0 {
            continue;
        }
        if prev != 0.0 && u.signum() != prev.signum() {
            count += 1;
        }
        prev = u;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solver() -> QmSolver {
        QmSolver::new(SystemParams::default()).unwrap()
    }

    #[test]
    fn largest_zero() {
        let y1 = solver().bessel_zero(1).unwrap();
        assert!((y1 - 0.065_376_741_215_496_43).abs() < 1e-9, "{y1}");
    }

    #[test]
    fn second_zero_spacing() {
        let s = solver();
        let d12 = s.ln_bessel_zero(1).unwrap() - s.ln_bessel_zero(2).unwrap();
        // arbitrary-precision reference; the k >= 1 terms still shift y_1
        assert!((d12 - 3.122_630_37).abs() < 1e-7, "{d12}");
        let d23 = s.ln_bessel_zero(2).unwrap() - s.ln_bessel_zero(3).unwrap();
        assert!((d23 - PI / crate::S0_BOSONS).abs() < 1e-5, "{d23}");
    }

    #[test]
    fn zero_101() {
        let s = solver();
        let v = s.ln_bessel_zero(101).unwrap() - crate::S0_BOSONS.ln();
        assert!((v - (-314.94440)).abs() < 1e-4, "{v}");
    }

    #[test]
    fn index_zero_rejected() {
        assert!(solver().bessel_zero(0).is_err());
    }

    #[test]
    fn grid_must_start_at_x_c() {
        let s = solver();
        let st = s.eigenvalue(0).unwrap();
        let grid = GridSpec::default().build(0.5, s.params().x_max());
        assert!(matches!(s.wavefunction(&st, &grid), Err(Error::Precondition(_))));
    }

    #[test]
    fn grid_must_reach_tail() {
        let s = solver();
        let st = s.eigenvalue(0).unwrap();
        let grid = GridSpec::default().build(st.x_c(), 5.0);
        assert!(s.wavefunction(&st, &grid).is_err());
    }

    #[test]
    fn grid_builder_covers_domain() {
        let xs = GridSpec::new(100).unwrap().build(1e-5, 30.0);
        assert_eq!(xs[0], 1e-5);
        assert!((xs[xs.len() - 1] - 30.0).abs() < 1e-12);
        assert!(xs.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn boundary_value_is_zero() {
        let s = solver();
        let st = s.eigenvalue(1).unwrap();
        let grid = GridSpec::default().build(st.x_c(), s.params().x_max());
        let wf = s.wavefunction(&st, &grid).unwrap();
        assert_eq!(wf.us[0], 0.0);
        // and the analytic value there is tiny compared to the peak
        assert!(st.norm_const * s.universal(st.x_c()).unwrap().abs() < 1e-9 * wf.peak());
    }
}
