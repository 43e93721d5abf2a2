//! Python module `efimov`: exact and WKB eigenstates, wavefunctions, the
//! comparison tables, the trace formula and the inverse-Abel potential.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use efimov_core::qm::{self, QmSolver};
use efimov_core::spectral;
use efimov_core::specfun::{self, SeriesPolicy};
use efimov_core::wkb::{self, WkbSolver};
use efimov_core::{Error, GridSpec, Method, TraceSpec};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Domain { .. } | Error::Precondition(_) => PyValueError::new_err(e.to_string()),
        Error::Convergence { .. } | Error::Bracket { .. } => PyRuntimeError::new_err(e.to_string()),
    }
}

fn params(s0: Option<f64>) -> PyResult<efimov_core::SystemParams> {
    match s0 {
        Some(s0) => efimov_core::SystemParams::new(s0).map_err(to_py),
        None => Ok(efimov_core::SystemParams::default()),
    }
}

fn grid_spec(density: Option<usize>) -> PyResult<GridSpec> {
    density.map_or(Ok(GridSpec::default()), |d| GridSpec::new(d).map_err(to_py))
}

#[pyclass(name = "SystemParams", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySystemParams {
    inner: efimov_core::SystemParams,
}

#[pymethods]
impl PySystemParams {
    #[new]
    #[pyo3(signature = (s0=None))]
    fn new(s0: Option<f64>) -> PyResult<Self> {
        Ok(Self { inner: params(s0)? })
    }

    #[getter]
    fn s0(&self) -> f64 {
        self.inner.s0
    }

    /// `E_n / E_{n+1} = exp(2π/s0)`.
    fn energy_ratio(&self) -> f64 {
        self.inner.energy_ratio()
    }

    fn log_spacing(&self) -> f64 {
        self.inner.log_spacing()
    }

    fn x_max(&self) -> f64 {
        self.inner.x_max()
    }

    fn __repr__(&self) -> String {
        format!("SystemParams(s0={})", self.inner.s0)
    }
}

#[pyclass(name = "Eigenstate", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyEigenstate {
    inner: efimov_core::Eigenstate,
}

#[pymethods]
impl PyEigenstate {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn ln_xc(&self) -> f64 {
        self.inner.ln_xc
    }

    #[getter]
    fn x_c(&self) -> f64 {
        self.inner.x_c()
    }

    /// `E_n / E_c = x_c²`.
    #[getter]
    fn energy_ratio(&self) -> f64 {
        self.inner.energy_ratio
    }

    /// `C_n` for exact states, `D_n` for WKB states.
    #[getter]
    fn norm_const(&self) -> f64 {
        self.inner.norm_const
    }

    #[getter]
    fn method(&self) -> String {
        self.inner.method.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Eigenstate(n={}, method={}, ln_xc={})",
            self.inner.n, self.inner.method, self.inner.ln_xc
        )
    }
}

/// `K_{iν}(y)`.
#[pyfunction]
fn kiv(nu: f64, y: f64) -> PyResult<f64> {
    specfun::kiv(nu, y, SeriesPolicy::default()).map_err(to_py)
}

#[pyfunction]
fn airy_ai(xi: f64) -> f64 {
    specfun::airy_ai(xi)
}

/// `arg Γ(1 + iν)`.
#[pyfunction]
fn phase_phi0(nu: f64) -> PyResult<f64> {
    specfun::phase_phi0(nu, specfun::PHI0_TERMS).map_err(to_py)
}

/// The `index`-th zero of `K_{i s0}` counted downward from `s0` (from 1).
#[pyfunction]
#[pyo3(signature = (index, s0=None))]
fn bessel_zero(index: usize, s0: Option<f64>) -> PyResult<f64> {
    qm::bessel_zero(params(s0)?, index).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (s0=None))]
fn alpha0(s0: Option<f64>) -> PyResult<f64> {
    qm::alpha0(params(s0)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, s0=None))]
fn qm_eigenvalue(n: usize, s0: Option<f64>) -> PyResult<PyEigenstate> {
    let inner = qm::qm_eigenvalue(params(s0)?, n).map_err(to_py)?;
    Ok(PyEigenstate { inner })
}

#[pyfunction]
#[pyo3(signature = (n, s0=None))]
fn wkb_eigenvalue(n: usize, s0: Option<f64>) -> PyResult<PyEigenstate> {
    let inner = wkb::wkb_eigenvalue(params(s0)?, n).map_err(to_py)?;
    Ok(PyEigenstate { inner })
}

/// Normalized wavefunction `(xs, us)` of state `n`; `method` is `"qm"` or
/// `"wkb_uniform"`.
#[pyfunction]
#[pyo3(signature = (n, method="qm", s0=None, grid_density=None))]
fn wavefunction(
    n: usize,
    method: &str,
    s0: Option<f64>,
    grid_density: Option<usize>,
) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let p = params(s0)?;
    let g = grid_spec(grid_density)?;
    let wf = match method {
        "qm" => {
            let s = QmSolver::new(p).map_err(to_py)?;
            let st = s.eigenvalue(n).map_err(to_py)?;
            s.wavefunction(&st, &g.build(st.x_c(), p.x_max()))
        }
        "wkb_uniform" => {
            let s = WkbSolver::new(p).map_err(to_py)?;
            let st = s.eigenvalue(n).map_err(to_py)?;
            s.uniform_wavefunction(&st, &g.build(st.x_c(), p.x_max()))
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown method {other:?}, expected \"qm\" or \"wkb_uniform\""
            )))
        }
    }
    .map_err(to_py)?;
    Ok((wf.xs, wf.us))
}

/// `<x²>` of state `n` for `method` in `{"qm", "wkb_uniform"}`.
#[pyfunction]
#[pyo3(signature = (n, method="qm", s0=None, grid_density=None))]
fn mean_square_x(
    n: usize,
    method: &str,
    s0: Option<f64>,
    grid_density: Option<usize>,
) -> PyResult<f64> {
    let rows = efimov_core::build_table2(params(s0)?, &[n], grid_spec(grid_density)?)
        .map_err(to_py)?;
    let row = rows[0];
    match method {
        "qm" => Ok(row.x2_qm.unwrap_or(f64::NAN)),
        "wkb_uniform" => Ok(row.x2_wkb.unwrap_or(f64::NAN)),
        other => Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
}

type Row = (usize, f64, f64, f64, f64, Option<f64>, Option<f64>);

fn row_tuple(r: efimov_core::MomentRow) -> Row {
    (r.n, r.lnxc_qm, r.lnxc_wkb, r.delta_lnxc, r.inv_cn, r.x2_qm, r.x2_wkb)
}

/// Rows `(n, lnxc_qm, lnxc_wkb, delta_lnxc, inv_cn, None, None)`.
#[pyfunction]
#[pyo3(signature = (indices, s0=None))]
fn table1(indices: Vec<usize>, s0: Option<f64>) -> PyResult<Vec<Row>> {
    let rows = efimov_core::build_table1(params(s0)?, &indices).map_err(to_py)?;
    Ok(rows.into_iter().map(row_tuple).collect())
}

/// Rows `(n, lnxc_qm, lnxc_wkb, delta_lnxc, inv_cn, x2_qm, x2_wkb)`.
#[pyfunction]
#[pyo3(signature = (indices, s0=None, grid_density=None))]
fn table2(indices: Vec<usize>, s0: Option<f64>, grid_density: Option<usize>) -> PyResult<Vec<Row>> {
    let rows = efimov_core::build_table2(params(s0)?, &indices, grid_spec(grid_density)?)
        .map_err(to_py)?;
    Ok(rows.into_iter().map(row_tuple).collect())
}

/// `<R²>_b/<R²>_a` for two states of the same method.
#[pyfunction]
fn radius_scaling_ratio(
    a: PyRef<'_, PyEigenstate>,
    b: PyRef<'_, PyEigenstate>,
    x2_a: f64,
    x2_b: f64,
) -> PyResult<f64> {
    efimov_core::radius_scaling_ratio(&a.inner, &b.inner, x2_a, x2_b).map_err(to_py)
}

/// Smoothed trace-formula density at each energy (all `< 0`).
#[pyfunction]
#[pyo3(signature = (energies, e0=-1.0, s0=None, kmax=200, smoothing=0.01))]
fn trace_density(
    energies: Vec<f64>,
    e0: f64,
    s0: Option<f64>,
    kmax: usize,
    smoothing: f64,
) -> PyResult<Vec<f64>> {
    let spec = TraceSpec::new(e0, params(s0)?.s0, kmax, smoothing).map_err(to_py)?;
    energies
        .into_iter()
        .map(|e| spec.trace_density(e).map_err(to_py))
        .collect()
}

/// `(s0/2π)·ln(a/r0)` Efimov states.
#[pyfunction]
fn count_states(s0: f64, a_over_r0: f64) -> PyResult<f64> {
    spectral::count_states(s0, a_over_r0).map_err(to_py)
}

type Samples = Vec<(f64, f64)>;

/// Inverse-Abel profile on a sorted grid in `(e0, 0)`: lists of `(V, y)`
/// and `(r, V)` pairs.
#[pyfunction]
#[pyo3(signature = (v_grid, e0=-1.0, s0=None))]
fn abel_profile(
    v_grid: Vec<f64>,
    e0: f64,
    s0: Option<f64>,
) -> PyResult<(Samples, Samples)> {
    let spec = TraceSpec::with_defaults(e0, params(s0)?.s0).map_err(to_py)?;
    let prof = spec.abel_reconstruct_potential(&v_grid).map_err(to_py)?;
    Ok((prof.v_samples, prof.r_samples))
}

#[pymodule]
fn efimov(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("S0_BOSONS", efimov_core::S0_BOSONS)?;
    m.add("QM", Method::Qm.to_string())?;
    m.add("WKB", Method::Wkb.to_string())?;
    m.add_class::<PySystemParams>()?;
    m.add_class::<PyEigenstate>()?;
    m.add_function(wrap_pyfunction!(kiv, m)?)?;
    m.add_function(wrap_pyfunction!(airy_ai, m)?)?;
    m.add_function(wrap_pyfunction!(phase_phi0, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_zero, m)?)?;
    m.add_function(wrap_pyfunction!(alpha0, m)?)?;
    m.add_function(wrap_pyfunction!(qm_eigenvalue, m)?)?;
    m.add_function(wrap_pyfunction!(wkb_eigenvalue, m)?)?;
    m.add_function(wrap_pyfunction!(wavefunction, m)?)?;
    m.add_function(wrap_pyfunction!(mean_square_x, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    m.add_function(wrap_pyfunction!(table2, m)?)?;
    m.add_function(wrap_pyfunction!(radius_scaling_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(trace_density, m)?)?;
    m.add_function(wrap_pyfunction!(count_states, m)?)?;
    m.add_function(wrap_pyfunction!(abel_profile, m)?)?;
    Ok(())
}
