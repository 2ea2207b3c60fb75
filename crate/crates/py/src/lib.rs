//! Python bindings. Structured results are returned as canonical JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use calogero_core::cherednik::{VermaModule, WRep};
use calogero_core::cmflow::{self, PhasePoint};
use calogero_core::coxeter::{parse_group, AnyGroup};
use calogero_core::exact::parse_q;
use calogero_core::verify::{canonical_json, verify_all, Settings};
use calogero_core::{typea, Error};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Run the acceptance checks; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (profile = "quick", seed = 1))]
fn verify(py: Python<'_>, profile: &str, seed: u64) -> PyResult<String> {
    let profile = profile.parse().map_err(err)?;
    let report = py.detach(|| verify_all(&Settings { profile, seed }));
    canonical_json(&report).map_err(err)
}

/// The singular vectors f_1..f_n at k = r/n, as strings in x1..xn.
#[pyfunction]
fn singular_vectors(n: usize, r: usize) -> PyResult<Vec<String>> {
    let fam = typea::singular_vectors(n, r).map_err(err)?;
    let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
    Ok(fam.f.iter().map(|p| p.display(&names).to_string()).collect())
}

/// Whether every singular vector vanishes at a rational point.
#[pyfunction]
fn support_test(r: usize, point: Vec<String>) -> PyResult<bool> {
    let coords = point
        .iter()
        .map(|s| parse_q(s).ok_or_else(|| PyValueError::new_err(format!("`{s}` is not rational"))))
        .collect::<PyResult<Vec<_>>>()?;
    typea::support_test(coords.len(), r, &coords).map_err(err)
}

/// Graded dimensions of the finite-dimensional quotient.
#[pyfunction]
#[pyo3(signature = (n, r, cap = None))]
fn quotient_dims(n: usize, r: usize, cap: Option<u32>) -> PyResult<Vec<usize>> {
    let qs = typea::QuotientSlices::compute(n, r, cap.unwrap_or(4 * r as u32)).map_err(err)?;
    Ok(qs.dims())
}

/// Character of the standard module of a rational group, as JSON.
#[pyfunction]
#[pyo3(signature = (group, tau = "triv", deg = 6))]
fn character(group: &str, tau: &str, deg: u32) -> PyResult<String> {
    let AnyGroup::Rational(w) = parse_group(group).map_err(err)? else {
        return Err(PyValueError::new_err("rational groups only"));
    };
    let rep = match tau {
        "triv" => WRep::trivial(&w),
        "sign" => WRep::sign(&w),
        "refl" => WRep::reflection(&w).map_err(err)?,
        _ => return Err(PyValueError::new_err(format!("unknown representation `{tau}`"))),
    };
    let m = VermaModule::new(&w, rep, deg);
    let ch = m.character().map_err(err)?;
    canonical_json(&ch.to_json(&m.layout().names())).map_err(err)
}

#[pyfunction]
fn hamiltonian(x: Vec<f64>, p: Vec<f64>) -> PyResult<f64> {
    Ok(PhasePoint::new(x, p).map_err(err)?.hamiltonian())
}

/// Positions along the flow, computed as eigenvalues of X + 2tY.
#[pyfunction]
fn flow_positions(x: Vec<f64>, p: Vec<f64>, t_max: f64, dt: f64) -> PyResult<Vec<Vec<f64>>> {
    let pt = PhasePoint::new(x, p).map_err(err)?;
    let s = cmflow::eigen_sample(&pt, t_max, dt).map_err(err)?;
    Ok(s.states.into_iter().map(|st| st.x).collect())
}

/// Seeded necklace bracket check; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (n = 3, trials = 10, max_len = 3, seed = 1))]
fn necklace_check(n: usize, trials: usize, max_len: usize, seed: u64) -> PyResult<String> {
    canonical_json(&cmflow::necklace_report(seed, trials, n, max_len)).map_err(err)
}

#[pymodule]
fn calogero_moser(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(singular_vectors, m)?)?;
    m.add_function(wrap_pyfunction!(support_test, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_dims, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(hamiltonian, m)?)?;
    m.add_function(wrap_pyfunction!(flow_positions, m)?)?;
    m.add_function(wrap_pyfunction!(necklace_check, m)?)?;
    Ok(())
}
