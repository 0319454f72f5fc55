//! Python bindings: `import knotfog`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::knotfog as core;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Exact Laurent polynomial in `t` with integer coefficients.
#[pyclass(name = "LaurentPoly", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLaurent(core::LaurentPoly);

#[pymethods]
impl PyLaurent {
    #[new]
    #[pyo3(signature = (coeffs, min_degree = 0))]
    fn new(coeffs: Vec<BigInt>, min_degree: i64) -> Self {
        PyLaurent(core::LaurentPoly::new(min_degree, coeffs))
    }

    #[getter]
    fn min_degree(&self) -> i64 {
        self.0.min_degree()
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    fn canonical(&self) -> Self {
        PyLaurent(self.0.canonical())
    }

    fn equiv(&self, other: &PyLaurent) -> bool {
        self.0.equiv(&other.0)
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    /// Value at a nonzero integer, as `(numerator, denominator)`.
    fn eval(&self, x: i64) -> PyResult<(BigInt, BigInt)> {
        let v = self.0.eval(x).map_err(value_err)?;
        Ok((v.numer().clone(), v.denom().clone()))
    }

    fn __add__(&self, o: &PyLaurent) -> Self {
        PyLaurent(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &PyLaurent) -> Self {
        PyLaurent(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &PyLaurent) -> Self {
        PyLaurent(&self.0 * &o.0)
    }

    fn __neg__(&self) -> Self {
        PyLaurent(-&self.0)
    }

    fn __pow__(&self, k: u32, _modulo: Option<Py<PyAny>>) -> Self {
        PyLaurent(self.0.pow(k))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly({})", self.0)
    }
}

/// Parsed knot expression.
#[pyclass(name = "KnotExpr", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyExpr(core::KnotExpr);

#[pymethods]
impl PyExpr {
    fn render(&self) -> String {
        self.0.render()
    }

    /// Full report as a JSON string.
    fn report_json(&self) -> String {
        core::Report::evaluate(&self.0).to_json()
    }

    fn genus(&self) -> (u64, Option<u64>) {
        let g = core::genus_of(&self.0);
        (g.lo, g.hi)
    }

    fn alexander(&self) -> Option<PyLaurent> {
        core::alexander_of(&self.0).map(PyLaurent)
    }

    fn slice(&self) -> &'static str {
        core::slice_of(&self.0).as_str()
    }

    fn fog(&self) -> (u64, Option<u64>) {
        let f = core::fog_of(&self.0);
        (f.lo(), f.hi())
    }

    fn warnings(&self) -> Vec<String> {
        core::validate(&self.0).into_iter().map(|w| w.message).collect()
    }

    fn __str__(&self) -> String {
        self.0.render()
    }

    fn __repr__(&self) -> String {
        format!("KnotExpr({:?})", self.0.render())
    }
}

#[pyfunction]
fn parse(text: &str) -> PyResult<PyExpr> {
    core::parse(text).map(PyExpr).map_err(value_err)
}

/// Alexander polynomial `det(V - t V^T)` of an integer matrix.
#[pyfunction]
fn alexander(rows: Vec<Vec<i64>>) -> PyResult<PyLaurent> {
    let v = core::SeifertMatrix::from_rows(rows).map_err(value_err)?;
    Ok(PyLaurent(v.alexander()))
}

#[pyfunction]
fn theta(n: i64) -> PyResult<Vec<Vec<i64>>> {
    let v = core::SeifertMatrix::theta(n).map_err(value_err)?;
    Ok(v.matrix().rows().to_vec())
}

/// `(value, (p, q, r, s))` for the best basis found.
#[pyfunction]
#[pyo3(signature = (ga, gb, cap = None))]
fn basis_min_lb(ga: u64, gb: u64, cap: Option<u64>) -> PyResult<(u64, (i64, i64, i64, i64))> {
    let w = match cap {
        Some(c) => core::basis_min_lb(ga, gb, c),
        None => core::basis_min_lb_auto(ga, gb),
    }
    .map_err(value_err)?;
    Ok((w.value, (w.p, w.q, w.r, w.s)))
}

#[pyfunction]
fn family_table(n: i64) -> PyResult<String> {
    core::report::family_table(n).map_err(value_err)
}

#[pymodule]
#[pyo3(name = "knotfog")]
fn knotfog(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyExpr>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(alexander, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(basis_min_lb, m)?)?;
    m.add_function(wrap_pyfunction!(family_table, m)?)?;
    Ok(())
}
