//! Python module `struve_bounds`: evaluation, brackets, tables and grid
//! certification from `struve_core`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use struve_core::arg_ratio::{arg_ratio_exact, arg_ratio_explicit_bracket, ArgPair};
use struve_core::bfunc;
use struve_core::condition::{cond_exact, cond_bracket_sqrt, CondVariant};
use struve_core::special::{m_accurate, eval_kind, ratio_succ_exact};
use struve_core::succ_ratio::best_bracket;
use struve_core::verify::{self, Grid};
use struve_core::{Bracket, Kind};

fn py_err(e: struve_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bracket_dict<'py>(py: Python<'py>, br: &Bracket, exact: f64) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("exact", exact)?;
    d.set_item("lower", br.lower_valid.then_some(br.lower))?;
    d.set_item("lower_id", br.lower_valid.then_some(br.lower_id))?;
    d.set_item("upper", br.upper_valid.then_some(br.upper))?;
    d.set_item("upper_id", br.upper_valid.then_some(br.upper_id))?;
    Ok(d)
}

/// Value of I, L or M at order `nu` and argument `x`.
#[pyfunction]
fn evaluate(kind: &str, nu: f64, x: f64) -> PyResult<f64> {
    let kind: Kind = kind.parse().map_err(py_err)?;
    match kind {
        Kind::M => m_accurate(nu, x),
        k => eval_kind(k, nu, x),
    }
    .map_err(py_err)
}

#[pyfunction]
fn b(nu: f64, x: f64) -> PyResult<f64> {
    bfunc::b(nu, x).map_err(py_err)
}

/// Tightest registered bracket of L_nu(x)/L_{nu-1}(x).
#[pyfunction]
fn ratio_bracket(py: Python<'_>, nu: f64, x: f64) -> PyResult<Bound<'_, PyDict>> {
    let br = best_bracket(nu, x).map_err(py_err)?;
    let exact = ratio_succ_exact(Kind::L, nu, x).map_err(py_err)?;
    bracket_dict(py, &br, exact)
}

#[pyfunction]
#[pyo3(signature = (nu, x, variant = "prior"))]
fn cond_bracket<'py>(py: Python<'py>, nu: f64, x: f64, variant: &str) -> PyResult<Bound<'py, PyDict>> {
    let variant: CondVariant = variant.parse().map_err(py_err)?;
    let br = cond_bracket_sqrt(nu, x, variant).map_err(py_err)?;
    let exact = cond_exact(Kind::L, nu, x).map_err(py_err)?.value;
    bracket_dict(py, &br, exact)
}

#[pyfunction]
fn arg_ratio_bracket(py: Python<'_>, nu: f64, x: f64, y: f64) -> PyResult<Bound<'_, PyDict>> {
    let pair = ArgPair::new(x, y).map_err(py_err)?;
    let br = arg_ratio_explicit_bracket(nu, pair).map_err(py_err)?;
    let exact = arg_ratio_exact(nu, pair).map_err(py_err)?;
    bracket_dict(py, &br, exact)
}

type TableParts = (Vec<f64>, Vec<f64>, Vec<Vec<f64>>);

/// Relative-error table `id` as (nu_rows, x_cols, values); infinite cells
/// come back as `inf`.
#[pyfunction]
fn table(id: u8) -> PyResult<TableParts> {
    let spec = verify::table_spec(id).map_err(py_err)?;
    let t = verify::relative_error_table(spec).map_err(py_err)?;
    Ok((spec.nu_rows.to_vec(), spec.x_cols.to_vec(), t.values))
}

/// Certify one registered bound on the default grid.
#[pyfunction]
#[pyo3(signature = (bound_id, tolerance = verify::DEFAULT_TOLERANCE))]
fn certify<'py>(py: Python<'py>, bound_id: &str, tolerance: f64) -> PyResult<Bound<'py, PyDict>> {
    let r = verify::certify(bound_id, &Grid::default_grid(), tolerance).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("bound_id", &r.bound_id)?;
    d.set_item("points_checked", r.points_checked)?;
    d.set_item("violations", r.violations.len())?;
    d.set_item("errors", r.errors.len())?;
    d.set_item("worst_slack", r.worst_slack)?;
    d.set_item("passed", r.passed())?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (a, b, nu, xmin = verify::DEFAULT_X_RANGE.0, xmax = verify::DEFAULT_X_RANGE.1))]
fn crossover(a: &str, b: &str, nu: f64, xmin: f64, xmax: f64) -> PyResult<f64> {
    verify::crossover(a, b, nu, (xmin, xmax)).map_err(py_err)
}

#[pyfunction]
fn bound_ids() -> Vec<&'static str> {
    struve_core::registry::all().iter().map(|s| s.id).collect()
}

#[pymodule]
pub fn struve_bounds(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(b, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(cond_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(arg_ratio_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(crossover, m)?)?;
    m.add_function(wrap_pyfunction!(bound_ids, m)?)?;
    Ok(())
}
