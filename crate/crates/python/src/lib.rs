//! Python bindings: Hadamard constructions, exact scheme tables, correlation and
//! Heun reports, and entropy sweeps. Reports come back as plain dicts with the same
//! layout as the CLI's JSON output.

use drg_entangle::cli::CliError;
use drg_entangle::entangle::{self, EntangleError, ReportOptions};
use drg_entangle::hadamard::{self, HadamardError, HadamardMatrix, SignMatrix};
use drg_entangle::scheme::{SchemeError, SchemeTables};
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

/// Maps library errors to Python exceptions by the CLI's exit-code classes:
/// invalid input → `ValueError`, failed exact identity → `RuntimeError`,
/// numerical failure → `ArithmeticError`.
fn to_py(e: CliError) -> PyErr {
    match e {
        CliError::Validation(m) => PyValueError::new_err(m),
        CliError::Identity(m) => PyRuntimeError::new_err(m),
        CliError::Numerical(m) => PyArithmeticError::new_err(m),
    }
}

fn hadamard_err(e: HadamardError) -> PyErr {
    to_py(e.into())
}

fn scheme_err(e: SchemeError) -> PyErr {
    to_py(e.into())
}

fn entangle_err(e: EntangleError) -> PyErr {
    to_py(e.into())
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn to_json_text(value: &impl serde::Serialize) -> String {
    serde_json::to_string(value).expect("report serializes")
}

/// A normalized Hadamard matrix.
#[pyclass(name = "HadamardMatrix", module = "drg_entangle_py", frozen)]
struct PyHadamard {
    inner: HadamardMatrix,
}

#[pymethods]
impl PyHadamard {
    /// Parses the `{"order", "rows"}` matrix format, checks `H Hᵀ = nI` and normalizes.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let raw = SignMatrix::from_json(text).map_err(hadamard_err)?;
        Ok(PyHadamard {
            inner: hadamard::normalize(&raw).map_err(hadamard_err)?,
        })
    }

    #[staticmethod]
    fn from_rows(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        let raw = SignMatrix::from_rows(&rows).map_err(hadamard_err)?;
        Ok(PyHadamard {
            inner: hadamard::normalize(&raw).map_err(hadamard_err)?,
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.as_sign_matrix().rows()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!("HadamardMatrix(order={})", self.inner.order())
    }
}

#[pyfunction]
fn sylvester(k: u32) -> PyResult<PyHadamard> {
    Ok(PyHadamard {
        inner: hadamard::sylvester(k).map_err(hadamard_err)?,
    })
}

#[pyfunction]
fn paley(q: u64) -> PyResult<PyHadamard> {
    Ok(PyHadamard {
        inner: hadamard::paley(q).map_err(hadamard_err)?,
    })
}

/// Sylvester for powers of two, otherwise Paley with `q = n − 1`.
#[pyfunction]
fn hadamard_of_order(n: usize) -> PyResult<PyHadamard> {
    Ok(PyHadamard {
        inner: hadamard::hadamard_of_order(n).map_err(hadamard_err)?,
    })
}

/// Exact Bose–Mesner tables of a Hadamard graph or hypercube.
#[pyclass(name = "SchemeTables", module = "drg_entangle_py", frozen)]
struct PyTables {
    inner: SchemeTables,
}

#[pymethods]
impl PyTables {
    #[staticmethod]
    fn hadamard(h: &PyHadamard) -> PyResult<Self> {
        Ok(PyTables {
            inner: SchemeTables::hadamard(&h.inner).map_err(scheme_err)?,
        })
    }

    #[staticmethod]
    fn hypercube(dimension: u32) -> PyResult<Self> {
        Ok(PyTables {
            inner: SchemeTables::hypercube(dimension).map_err(scheme_err)?,
        })
    }

    #[getter]
    fn diameter(&self) -> usize {
        self.inner.diameter()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn intersection_array(&self) -> PyResult<String> {
        Ok(self.inner.intersection_array().map_err(scheme_err)?.to_string())
    }

    /// Eigenvalues in the Q-polynomial order, as exact strings.
    fn eigenvalues(&self) -> Vec<String> {
        self.inner.eigenvalues().iter().map(ToString::to_string).collect()
    }

    fn p_matrix(&self) -> Vec<Vec<String>> {
        strings(self.inner.p_matrix())
    }

    fn q_matrix(&self) -> Vec<Vec<String>> {
        strings(self.inner.q_matrix())
    }

    /// `(name, passed)` for every exact scheme axiom.
    fn verify_axioms(&self) -> PyResult<Vec<(String, bool)>> {
        let report = self.inner.verify_axioms().map_err(scheme_err)?;
        Ok(report.checks.into_iter().map(|c| (c.name, c.passed)).collect())
    }

    /// `(metric, cometric, formally_self_dual)`.
    fn polynomial_flags(&self) -> (bool, bool, bool) {
        let f = self.inner.polynomial_flags();
        (f.metric, f.cometric, f.formally_self_dual)
    }
}

fn strings(table: &[Vec<drg_entangle::numerics::ExactScalar>]) -> Vec<Vec<String>> {
    table.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

/// Spectrum report for `Π(K, ℓ)` as a dict (same keys as the CLI JSON).
#[pyfunction]
#[pyo3(signature = (h, k, ell, tol = 1e-8))]
fn correlation_report<'py>(
    py: Python<'py>,
    h: &PyHadamard,
    k: usize,
    ell: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(PyValueError::new_err("tolerance must be positive"));
    }
    let opts = ReportOptions {
        compare_tol: tol,
        ..ReportOptions::default()
    };
    let r = py
        .detach(|| entangle::correlation_report(&h.inner, k, ell, &opts))
        .map_err(entangle_err)?;
    json_to_py(py, &to_json_text(&r))
}

#[pyfunction]
fn heun_report<'py>(py: Python<'py>, h: &PyHadamard, k: usize, ell: usize) -> PyResult<Bound<'py, PyAny>> {
    let r = py.detach(|| entangle::heun_report(&h.inner, k, ell)).map_err(entangle_err)?;
    json_to_py(py, &to_json_text(&r))
}

/// Entropy rows for every order × `(K, ℓ)` pair, computed in parallel.
#[pyfunction]
fn entropy_sweep<'py>(py: Python<'py>, orders: Vec<usize>, pairs: Vec<(usize, usize)>) -> PyResult<Bound<'py, PyAny>> {
    let rows = py
        .detach(|| {
            entangle::entropy_sweep(
                &orders,
                &pairs,
                drg_entangle::numerics::DEFAULT_EIG_TOL,
                drg_entangle::numerics::DEFAULT_CLUSTER_TOL,
            )
        })
        .map_err(entangle_err)?;
    json_to_py(py, &to_json_text(&rows))
}

#[pyfunction]
fn binary_entropy(nu: f64) -> f64 {
    entangle::binary_entropy(nu)
}

#[pyfunction]
fn entropy_limit() -> f64 {
    entangle::entropy_limit()
}

#[pymodule]
fn drg_entangle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHadamard>()?;
    m.add_class::<PyTables>()?;
    m.add_function(wrap_pyfunction!(sylvester, m)?)?;
    m.add_function(wrap_pyfunction!(paley, m)?)?;
    m.add_function(wrap_pyfunction!(hadamard_of_order, m)?)?;
    m.add_function(wrap_pyfunction!(correlation_report, m)?)?;
    m.add_function(wrap_pyfunction!(heun_report, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(binary_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_limit, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_follow_exit_codes() {
        Python::initialize();
        Python::attach(|py| {
            assert!(hadamard_err(HadamardError::NotPrime(9)).is_instance_of::<PyValueError>(py));
            let e = entangle_err(EntangleError::IdentityFailure("x".into()));
            assert!(e.is_instance_of::<PyRuntimeError>(py));
            let e = entangle_err(EntangleError::NumericalFailure("x".into()));
            assert!(e.is_instance_of::<PyArithmeticError>(py));
        });
    }
}
