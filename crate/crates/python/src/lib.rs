//! Python bindings: `Weight`, `Poset` and the criterion checks.
//!
//! Reports are handed over as plain dicts decoded from the library's JSON.

use std::collections::BTreeMap;

use coxweight::algebra::IntPolynomial;
use coxweight::criterion;
use coxweight::posets::{self, PosetFamily, DEFAULT_SEED_CAP};
use coxweight::weights::{self, EigenMethod, WeightFamily, WeightTable};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coeffs(p: &IntPolynomial) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

fn from_json<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn fraction<'py>(py: Python<'py>, num: BigInt, den: BigInt) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((num, den))
}

fn report_json(r: &criterion::CriterionReport, n: Option<usize>) -> String {
    let mut v = r.to_json(false);
    if let Some(n) = n {
        v["n"] = n.into();
    }
    v.to_string()
}

/// Degree data `(d_1, …, d_m; D)`.
#[pyclass(name = "Weight", module = "pycoxweight", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWeight(weights::Weight);

#[pymethods]
impl PyWeight {
    #[new]
    fn new(degrees: Vec<u64>, total: u64) -> PyResult<Self> {
        weights::Weight::new(degrees, total).map(PyWeight).map_err(value_error)
    }

    /// Parse `"2,3,4;10"` or `"(2,3,4;10)"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyWeight).map_err(value_error)
    }

    /// Member `n` of a family such as `"catalan"`.
    #[staticmethod]
    fn family(name: &str, n: u64) -> PyResult<Self> {
        let f: WeightFamily = name.parse().map_err(value_error)?;
        f.weight(n).map(PyWeight).map_err(value_error)
    }

    #[getter]
    fn degrees(&self) -> Vec<u64> {
        self.0.degrees().to_vec()
    }

    #[getter]
    fn total(&self) -> u64 {
        self.0.total()
    }

    fn canonicalize(&self) -> Self {
        PyWeight(self.0.canonicalize())
    }

    fn is_weight(&self) -> bool {
        self.0.is_weight()
    }

    fn is_weak_weight(&self) -> bool {
        self.0.is_weak_weight()
    }

    fn milnor_number<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let mu = self.0.milnor_number();
        fraction(py, mu.numer().clone(), mu.denom().clone())
    }

    fn central_charge<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let c = self.0.central_charge();
        fraction(py, (*c.numer()).into(), (*c.denom()).into())
    }

    fn cy_dimension(&self) -> (u64, u64) {
        self.0.cy_dimension()
    }

    /// Ascending coefficients of the q-Milnor number; fails unless it is a polynomial.
    fn q_milnor(&self) -> PyResult<Vec<BigInt>> {
        self.0.q_milnor().expand().map(|p| coeffs(&p)).map_err(value_error)
    }

    fn product(&self, other: &PyWeight) -> Self {
        PyWeight(self.0.product(&other.0))
    }

    fn is_prime(&self) -> PyResult<bool> {
        weights::is_prime(&self.0).map_err(value_error)
    }

    fn factorizations(&self) -> PyResult<Vec<Vec<PyWeight>>> {
        let all = weights::factorizations(&self.0).map_err(value_error)?;
        Ok(all.iter().map(|f| f.factors().iter().cloned().map(PyWeight).collect()).collect())
    }

    /// Monodromy polynomial from the Milnor–Orlik formula, as `Φ…` text.
    #[pyo3(signature = (ascii = false))]
    fn monodromy(&self, ascii: bool) -> PyResult<String> {
        let trace = weights::milnor_orlik(&self.0).map_err(value_error)?;
        Ok(trace.result.to_factored_string(ascii))
    }

    /// Coefficients of the monodromy polynomial in Coxeter normalization.
    fn coxeter_polynomial(&self) -> PyResult<Vec<BigInt>> {
        criterion::weight_coxeter_polynomial(&self.0).map(|p| coeffs(&p)).map_err(value_error)
    }

    #[pyo3(signature = (method = "milnor_orlik"))]
    fn eigen_multiplicities(&self, method: &str) -> PyResult<BTreeMap<u64, u64>> {
        let m = match method {
            "milnor_orlik" => EigenMethod::MilnorOrlik,
            "q_milnor" => EigenMethod::QMilnor,
            other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        };
        self.0.eigen_multiplicities(m).map_err(value_error)
    }

    /// Table name or product of table names, if any.
    fn name(&self) -> Option<String> {
        self.0.is_weight().then(|| WeightTable::bundled().describe(&self.0)).flatten()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Weight({:?}, {})", self.0.degrees(), self.0.total())
    }
}

/// A finite poset on `0..n`.
#[pyclass(name = "Poset", module = "pycoxweight", frozen)]
struct PyPoset(posets::Poset);

#[pymethods]
impl PyPoset {
    /// Build from cover (or any generating) pairs `i < j`.
    #[new]
    fn new(size: usize, covers: Vec<(usize, usize)>) -> PyResult<Self> {
        posets::Poset::from_covers(size, &covers).map(PyPoset).map_err(value_error)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        posets::Poset::from_json(text).map(PyPoset).map_err(value_error)
    }

    /// Member `n` of `chain`, `tamari`, `dyck` or `green-cyclic`.
    #[staticmethod]
    #[pyo3(signature = (name, n, seed_cap = DEFAULT_SEED_CAP))]
    fn family(name: &str, n: usize, seed_cap: usize) -> PyResult<Self> {
        let f: PosetFamily = name.parse().map_err(value_error)?;
        f.generate(n, seed_cap).map(PyPoset).map_err(value_error)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn leq(&self, i: usize, j: usize) -> PyResult<bool> {
        if i >= self.0.len() || j >= self.0.len() {
            return Err(PyValueError::new_err("element out of range"));
        }
        Ok(self.0.leq(i, j))
    }

    fn covers(&self) -> Vec<(usize, usize)> {
        self.0.covers()
    }

    fn product(&self, other: &PyPoset) -> Self {
        PyPoset(self.0.product(&other.0))
    }

    fn coxeter_matrix(&self) -> Vec<Vec<BigInt>> {
        self.0.coxeter_matrix().to_rows()
    }

    fn coxeter_polynomial(&self) -> Vec<BigInt> {
        coeffs(&self.0.coxeter_polynomial())
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        format!("Poset(size={})", self.0.len())
    }
}

/// Compare a poset with a Weight; returns the report as a dict.
#[pyfunction]
fn check<'py>(py: Python<'py>, poset: &PyPoset, weight: &PyWeight) -> PyResult<Bound<'py, PyAny>> {
    let report = criterion::check(&poset.0, &weight.0).map_err(value_error)?;
    from_json(py, &report_json(&report, None))
}

/// One report per `n` in `n_min..=n_max`.
#[pyfunction]
#[pyo3(signature = (posets, weights, n_min, n_max, seed_cap = DEFAULT_SEED_CAP))]
fn check_family<'py>(
    py: Python<'py>,
    posets: &str,
    weights: &str,
    n_min: usize,
    n_max: usize,
    seed_cap: usize,
) -> PyResult<Bound<'py, PyList>> {
    let pf: PosetFamily = posets.parse().map_err(value_error)?;
    let wf: WeightFamily = weights.parse().map_err(value_error)?;
    let rows = criterion::check_family(pf, wf, n_min..=n_max, seed_cap).map_err(value_error)?;
    let items = rows
        .iter()
        .map(|(n, r)| from_json(py, &report_json(r, Some(*n))))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Factor an integer polynomial (ascending coefficients) into cyclotomics.
/// Returns the factored text and the leftover coefficients.
#[pyfunction]
#[pyo3(signature = (coefficients, ascii = false))]
fn factor_cyclotomic(coefficients: Vec<BigInt>, ascii: bool) -> (String, Vec<BigInt>) {
    let (f, rem) = coxweight::algebra::factor_cyclotomic(&IntPolynomial::from_coeffs(coefficients));
    (f.to_factored_string(ascii), coeffs(&rem))
}

#[pymodule]
fn pycoxweight(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWeight>()?;
    m.add_class::<PyPoset>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(check_family, m)?)?;
    m.add_function(wrap_pyfunction!(factor_cyclotomic, m)?)?;
    Ok(())
}
