//! Moments of the eigenfunctions and the QM/WKB comparison tables.

use crate::error::{Error, Result};
use crate::qm::{Eigenstate, GridSpec, QmSolver, SystemParams, WavefunctionGrid};
use crate::quad::trapezoid;
use crate::wkb::WkbSolver;

/// Largest tolerated deviation of a grid's norm from one.
pub const NORM_TOLERANCE: f64 = 1e-6;

/// One row of the comparison tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentRow {
    pub n: usize,
    pub lnxc_qm: f64,
    pub lnxc_wkb: f64,
    /// `lnxc_qm − lnxc_wkb` (negative).
    pub delta_lnxc: f64,
    /// `1/C_n`.
    pub inv_cn: f64,
    /// `<x²>` of the exact state.
    pub x2_qm: Option<f64>,
    /// `<x²>` of the uniform WKB state.
    pub x2_wkb: Option<f64>,
}

/// `<x²> = ∫ x² u² dx` by the trapezoid rule on the grid.
pub fn mean_square_x(grid: &WavefunctionGrid) -> Result<f64> {
    let norm = grid.norm();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::Precondition(format!(
            "grid for state {} has norm {norm}, expected 1",
            grid.state.n
        )));
    }
    let s0_reach = grid.xs.last().copied().unwrap_or(0.0);
    if s0_reach < 29.0 {
        return Err(Error::Precondition(format!(
            "grid ends at x = {s0_reach}, too short for the second moment"
        )));
    }
    let w: Vec<f64> = grid
        .xs
        .iter()
        .zip(&grid.us)
        .map(|(x, u)| x * x * u * u)
        .collect();
    Ok(trapezoid(&grid.xs, &w))
}

/// `<R²>_b / <R²>_a` using `R_+² ∝ 1/|E|`.
pub fn radius_scaling_ratio(
    state_a: &Eigenstate,
    state_b: &Eigenstate,
    x2_a: f64,
    x2_b: f64,
) -> Result<f64> {
    if state_a.method != state_b.method {
        return Err(Error::Precondition(format!(
            "cannot compare a {} state with a {} state",
            state_a.method, state_b.method
        )));
    }
    // E_a/E_b = exp(2 (ln x_c,a − ln x_c,b))
    Ok(x2_b / x2_a * (2.0 * (state_a.ln_xc - state_b.ln_xc)).exp())
}

/// Eigenvalues and normalization constants for the requested states.
pub fn build_table1(params: SystemParams, indices: &[usize]) -> Result<Vec<MomentRow>> {
    let qm = QmSolver::new(params)?;
    let wkb = WkbSolver::new(params)?;
    indices
        .iter()
        .map(|&n| {
            let q = qm.eigenvalue(n)?;
            let w = wkb.eigenvalue(n)?;
            Ok(MomentRow {
                n,
                lnxc_qm: q.ln_xc,
                lnxc_wkb: w.ln_xc,
                delta_lnxc: q.ln_xc - w.ln_xc,
                inv_cn: q.norm_const.recip(),
                x2_qm: None,
                x2_wkb: None,
            })
        })
        .collect()
}

/// [`build_table1`] plus `<x²>` for the exact and uniform WKB states.
pub fn build_table2(
    params: SystemParams,
    indices: &[usize],
    grid: GridSpec,
) -> Result<Vec<MomentRow>> {
    let qm = QmSolver::new(params)?;
    let wkb = WkbSolver::new(params)?;
    let x_max = params.x_max();
    indices
        .iter()
        .map(|&n| {
            let q = qm.eigenvalue(n)?;
            let w = wkb.eigenvalue(n)?;
            let qg = qm.wavefunction(&q, &grid.build(q.x_c(), x_max))?;
            let wg = wkb.uniform_wavefunction(&w, &grid.build(w.x_c(), x_max))?;
            Ok(MomentRow {
                n,
                lnxc_qm: q.ln_xc,
                lnxc_wkb: w.ln_xc,
                delta_lnxc: q.ln_xc - w.ln_xc,
                inv_cn: q.norm_const.recip(),
                x2_qm: Some(mean_square_x(&qg)?),
                x2_wkb: Some(mean_square_x(&wg)?),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qm::Method;

    #[test]
    fn identical_states_ratio_is_one() {
        let s = Eigenstate::new(3, -12.0, 1.0, Method::Qm);
        assert_eq!(radius_scaling_ratio(&s, &s, 1.3, 1.3).unwrap(), 1.0);
    }

    #[test]
    fn method_mismatch_rejected() {
        let a = Eigenstate::new(3, -12.0, 1.0, Method::Qm);
        let b = Eigenstate::new(4, -15.0, 1.0, Method::Wkb);
        assert!(radius_scaling_ratio(&a, &b, 1.3, 1.3).is_err());
    }

    #[test]
    fn unnormalized_grid_rejected() {
        let st = Eigenstate::new(0, -1.0, 1.0, Method::Qm);
        let xs: Vec<f64> = (0..=300).map(|i| (-1.0f64).exp() + 0.1 * i as f64).collect();
        let us = vec![1.0; xs.len()];
        let g = WavefunctionGrid { xs, us, state: st };
        assert!(matches!(mean_square_x(&g), Err(Error::Precondition(_))));
    }
}
