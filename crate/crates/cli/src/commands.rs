//! One function per verb, each building a [`Table`].

use std::f64::consts::PI;

use efimov_core::qm::{count_interior_zeros, QmSolver};
use efimov_core::wkb::{WkbSolver, TURNING_POINT_WINDOW};
use efimov_core::{build_table1, build_table2, GridSpec, SystemParams, TraceSpec, UniformState};

use crate::table::{col, Cell, Table};
use crate::{AbelArgs, Common, ListArgs, TraceArgs, WaveArgs, WaveMethod};

pub const TABLE1_DEFAULT: [usize; 8] = [0, 1, 2, 10, 11, 20, 63, 100];
pub const TABLE2_DEFAULT: [usize; 5] = [0, 1, 2, 5, 10];
const TRACE_SAMPLES: usize = 20_000;
const ABEL_SAMPLES: usize = 200;

type Res<T> = Result<T, String>;

fn err(e: efimov_core::Error) -> String {
    e.to_string()
}

fn params(c: &Common) -> Res<SystemParams> {
    SystemParams::new(c.s0).map_err(err)
}

fn grid(c: &Common) -> Res<GridSpec> {
    match c.grid_points {
        Some(d) => GridSpec::new(d).map_err(err),
        None => Ok(GridSpec::default()),
    }
}

fn base(command: &'static str, c: &Common, columns: Vec<crate::table::Column>) -> Table {
    let mut t = Table::new(command, columns);
    t.meta("s0", c.s0);
    t
}

fn f(v: f64) -> Cell {
    Cell::Float(v)
}

fn int(n: usize) -> Cell {
    Cell::Int(n as i64)
}

pub fn table1(a: &ListArgs) -> Res<Table> {
    let p = params(&a.common)?;
    let ns = a.n_list.clone().unwrap_or_else(|| TABLE1_DEFAULT.to_vec());
    let rows = build_table1(p, &ns).map_err(err)?;
    let mut t = base(
        "table1",
        &a.common,
        vec![
            col("n", 0),
            col("ln_xc_qm", 5),
            col("ln_xc_wkb", 5),
            col("delta", 5),
            col("inv_cn", 7),
        ],
    );
    t.meta("wkb_quantization", "S0 = 2 pi (n + 3/4)")
        .note("delta = |ln_xc_qm - ln_xc_wkb|");
    for r in rows {
        t.push(vec![
            int(r.n),
            f(r.lnxc_qm),
            f(r.lnxc_wkb),
            f(r.delta_lnxc.abs()),
            f(r.inv_cn),
        ]);
    }
    Ok(t)
}

pub fn table2(a: &ListArgs) -> Res<Table> {
    let p = params(&a.common)?;
    let g = grid(&a.common)?;
    let ns = a.n_list.clone().unwrap_or_else(|| TABLE2_DEFAULT.to_vec());
    let rows = build_table2(p, &ns, g).map_err(err)?;
    let mut t = base(
        "table2",
        &a.common,
        vec![col("n", 0), col("x2_qm", 4), col("x2_wkb", 4)],
    );
    t.meta("grid_density", g.density)
        .meta("x_max", p.x_max())
        .meta("quadrature", "trapezoid");
    for r in rows {
        t.push(vec![
            int(r.n),
            f(r.x2_qm.unwrap_or(f64::NAN)),
            f(r.x2_wkb.unwrap_or(f64::NAN)),
        ]);
    }
    Ok(t)
}

pub fn wavefunction(a: &WaveArgs) -> Res<Table> {
    let p = params(&a.common)?;
    let g = grid(&a.common)?;
    let qm = QmSolver::new(p).map_err(err)?;
    let wkb = WkbSolver::new(p).map_err(err)?;
    let mut t = base(
        "wavefunction",
        &a.common,
        vec![col("x", 6), col("ln_x", 5), col("u", 6), col("ln_abs_u", 5)],
    );
    t.meta("n", a.n).meta("grid_density", g.density);
    let wf = match a.method {
        WaveMethod::Qm => {
            t.meta("method", "qm");
            let st = qm.eigenvalue(a.n).map_err(err)?;
            let wf = qm
                .wavefunction(&st, &g.build(st.x_c(), p.x_max()))
                .map_err(err)?;
            t.meta("interior_sign_changes", count_interior_zeros(&wf));
            wf
        }
        WaveMethod::WkbUniform => {
            t.meta("method", "wkb_uniform");
            let st = wkb.eigenvalue(a.n).map_err(err)?;
            wkb.uniform_wavefunction(&st, &g.build(st.x_c(), p.x_max()))
                .map_err(err)?
        }
        WaveMethod::WkbRaw => {
            t.meta("method", "wkb_raw");
            let st = wkb.eigenvalue(a.n).map_err(err)?;
            let exact = qm.eigenvalue(a.n).map_err(err)?;
            let amps = UniformState::tail_matched(st, p.s0, exact.norm_const);
            let full = g.build(st.x_c(), p.x_max());
            let kept: Vec<f64> = full
                .iter()
                .copied()
                .filter(|x| (x - 1.0).abs() >= TURNING_POINT_WINDOW)
                .collect();
            t.meta("amplitude_b", amps.b_norm)
                .meta("amplitude_a", amps.a_norm)
                .note(format!(
                    "{} samples with |x - 1| < {TURNING_POINT_WINDOW} omitted (turning point)",
                    full.len() - kept.len()
                ))
                .note("raw WKB is tail-matched to the exact state, not normalized");
            wkb.raw_wavefunction(&amps, &kept).map_err(err)?
        }
    };
    t.meta("ln_xc", wf.state.ln_xc);
    for (&x, &u) in wf.xs.iter().zip(&wf.us) {
        t.push(vec![f(x), f(x.ln()), f(u), f(u.abs().ln())]);
    }
    Ok(t)
}

pub fn trace(a: &TraceArgs) -> Res<Table> {
    let c = &a.common;
    let samples = c.grid_points.unwrap_or(TRACE_SAMPLES).max(2);
    // k_max = 0 means the smooth part alone
    let spec = TraceSpec::new(-1.0, c.s0, a.kmax.max(1), a.smoothing).map_err(err)?;
    let mut t = base(
        "trace",
        c,
        vec![col("ln_abs_e_over_e0", 5), col("density", 5), col("smooth", 5)],
    );
    t.meta("e0", spec.e0)
        .meta("kmax", a.kmax)
        .meta("smoothing", a.smoothing)
        .meta("samples", samples);
    let lo = -2.0 * PI * a.levels as f64 / c.s0 - 0.5;
    let hi = 0.5;
    for i in 0..samples {
        let l = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
        let e = -l.exp();
        let smooth = spec.smooth_density(e).map_err(err)?;
        let density = if a.kmax == 0 {
            smooth
        } else {
            spec.trace_density(e).map_err(err)?
        };
        t.push(vec![f(l), f(density), f(smooth)]);
    }
    Ok(t)
}

pub fn spectrum(a: &ListArgs) -> Res<Table> {
    let p = params(&a.common)?;
    let qm = QmSolver::new(p).map_err(err)?;
    let wkb = WkbSolver::new(p).map_err(err)?;
    let ns = a.n_list.clone().unwrap_or_else(|| (0..=10).collect());
    let mut t = base(
        "spectrum",
        &a.common,
        vec![
            col("n", 0),
            col("ln_xc_qm", 5),
            col("ln_xc_wkb", 5),
            col("ln_e_ratio_qm", 5),
            col("ln_e_ratio_wkb", 5),
            col("ln_e_geometric", 5),
        ],
    );
    t.note("ln_e_* = ln(E_n/E_c); ln_e_geometric continues the exact n = 0 level with spacing 2 pi/s0");
    let first = qm.eigenvalue(0).map_err(err)?.ln_xc;
    for n in ns {
        let q = qm.eigenvalue(n).map_err(err)?;
        let w = wkb.eigenvalue(n).map_err(err)?;
        let geometric = 2.0 * first - 2.0 * PI * n as f64 / p.s0;
        t.push(vec![
            int(n),
            f(q.ln_xc),
            f(w.ln_xc),
            f(2.0 * q.ln_xc),
            f(2.0 * w.ln_xc),
            f(geometric),
        ]);
    }
    Ok(t)
}

pub fn abel(a: &AbelArgs) -> Res<Table> {
    let c = &a.common;
    if !(a.v_min > 0.0 && a.v_min < 1.0) {
        return Err(format!("--v-min must lie in (0, 1), got {}", a.v_min));
    }
    let samples = c.grid_points.unwrap_or(ABEL_SAMPLES).max(2);
    let spec = TraceSpec::with_defaults(-1.0, c.s0).map_err(err)?;
    // log-spaced |V/E_0| from just below 1 down to v_min, sorted upward in V
    let top: f64 = 1.0 - 1e-6;
    let (l0, l1) = (top.ln(), a.v_min.ln());
    let grid: Vec<f64> = (0..samples)
        .map(|i| spec.e0 * (l0 + (l1 - l0) * i as f64 / (samples - 1) as f64).exp())
        .collect();
    let prof = spec.abel_reconstruct_potential(&grid).map_err(err)?;
    let mut t = base(
        "abel",
        c,
        vec![
            col("v_over_e0", 8),
            col("y", 5),
            col("r", 5),
            col("v_r2_scaled", 5),
        ],
    );
    t.meta("e0", spec.e0)
        .meta("anchor_r", spec.anchor_radius())
        .note("v_r2_scaled = -2 V r^2 / s0^2, which tends to 1 as V -> 0");
    for ((v, y), (r, _)) in prof.v_samples.iter().zip(&prof.r_samples) {
        t.push(vec![
            f(v / spec.e0),
            f(*y),
            f(*r),
            f(-2.0 * v * r * r / (c.s0 * c.s0)),
        ]);
    }
    Ok(t)
}
