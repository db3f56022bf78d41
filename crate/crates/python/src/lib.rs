use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Rational64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use minuscule::{minrep, qchev, satake, sweep, ttstar, LieType, PolyMatrix, RootVec, Weight};

fn py_err(e: minuscule::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_type(name: &str) -> PyResult<LieType> {
    name.parse().map_err(py_err)
}

type PyPolyMatrix = Vec<Vec<Vec<(u32, BigInt)>>>;

/// Rows of entries; each entry is a list of `(exponent, coefficient)`.
fn matrix_to_py(m: &PolyMatrix) -> PyPolyMatrix {
    m.rows()
        .map(|row| {
            row.iter()
                .map(|p| p.terms().map(|(e, c)| (e, c.clone())).collect())
                .collect()
        })
        .collect()
}

#[pyclass(name = "RootSystem", frozen)]
struct PyRootSystem {
    inner: minuscule::RootSystem,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(lie_type: &str) -> PyResult<Self> {
        let inner = minuscule::RootSystem::build(parse_type(lie_type)?).map_err(py_err)?;
        Ok(PyRootSystem { inner })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn coxeter_number(&self) -> i64 {
        self.inner.coxeter_number
    }

    #[getter]
    fn cartan(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().to_vec()
    }

    #[getter]
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots.iter().map(|r| r.0.clone()).collect()
    }

    #[getter]
    fn highest_root(&self) -> Vec<i64> {
        self.inner.highest_root.0.clone()
    }

    fn minuscule_weights(&self) -> Vec<usize> {
        self.inner.minuscule_weights()
    }

    fn diagram_involution(&self) -> Vec<usize> {
        self.inner.diagram_involution()
    }

    /// `(mu, alpha^vee)` for a weight in pairing coordinates and a root in
    /// simple-root coordinates.
    fn pair(&self, mu: Vec<i64>, alpha: Vec<i64>) -> PyResult<i64> {
        self.inner.pair(&Weight(mu), &RootVec(alpha)).map_err(py_err)
    }

    fn reflect(&self, mu: Vec<i64>, alpha: Vec<i64>) -> PyResult<Vec<i64>> {
        self.inner
            .reflect(&Weight(mu), &RootVec(alpha))
            .map(|w| w.0)
            .map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.lie_type)
    }
}

#[pyclass(name = "Orbit", frozen)]
struct PyOrbit {
    inner: minuscule::Orbit,
}

#[pymethods]
impl PyOrbit {
    #[new]
    fn new(lie_type: &str, weight_index: usize) -> PyResult<Self> {
        let rs = minuscule::RootSystem::build(parse_type(lie_type)?).map_err(py_err)?;
        let inner = minuscule::Orbit::new(&rs, weight_index).map_err(py_err)?;
        Ok(PyOrbit { inner })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    #[getter]
    fn dim_complex(&self) -> usize {
        self.inner.dim_complex()
    }

    #[getter]
    fn weights(&self) -> Vec<Vec<i64>> {
        self.inner.elements().iter().map(|e| e.weight.0.clone()).collect()
    }

    #[getter]
    fn words(&self) -> Vec<Vec<usize>> {
        self.inner.elements().iter().map(|e| e.word.clone()).collect()
    }

    #[getter]
    fn lengths(&self) -> Vec<usize> {
        self.inner.elements().iter().map(|e| e.length).collect()
    }

    fn length(&self, mu: Vec<i64>) -> PyResult<usize> {
        self.inner.length(&Weight(mu)).map_err(py_err)
    }

    fn poincare_dual(&self, mu: Vec<i64>) -> PyResult<Vec<i64>> {
        self.inner.poincare_dual(&Weight(mu)).map(|w| w.0).map_err(py_err)
    }

    /// `(source, label, target)` triples.
    fn crystal_edges(&self) -> Vec<(Vec<i64>, usize, Vec<i64>)> {
        self.inner
            .crystal_edges()
            .into_iter()
            .map(|e| (e.source.0, e.label, e.target.0))
            .collect()
    }

    fn quantum_operator(&self) -> PyResult<PyPolyMatrix> {
        minrep::quantum_operator(&self.inner)
            .map(|m| matrix_to_py(&m))
            .map_err(py_err)
    }

    fn quantum_product_matrix(&self) -> PyResult<PyPolyMatrix> {
        qchev::quantum_product_matrix(&self.inner)
            .map(|m| matrix_to_py(&m))
            .map_err(py_err)
    }

    /// Terms `(target, q_power, coefficient)` of `sigma_{s_i} o sigma_u`.
    fn chevalley(&self, u: Vec<i64>) -> PyResult<Vec<(Vec<i64>, u32, i64)>> {
        qchev::chevalley_closed(&self.inner, &Weight(u))
            .map(|ts| {
                ts.into_iter()
                    .map(|t| (t.target.0, t.q_power, t.coefficient))
                    .collect()
            })
            .map_err(py_err)
    }

    fn verify_main_theorem(&self) -> PyResult<bool> {
        qchev::verify_main_theorem(&self.inner)
            .map(|r| r.passed())
            .map_err(py_err)
    }

    fn frobenius_check(&self) -> PyResult<bool> {
        qchev::frobenius_check(&self.inner).map_err(py_err)
    }

    fn grading_check(&self) -> PyResult<bool> {
        qchev::grading_check(&self.inner).map_err(py_err)
    }

    /// Coefficients of `det(x I - A(q))`, lowest power of `x` first.
    fn charpoly(&self) -> PyResult<Vec<Vec<(u32, BigInt)>>> {
        let a = minrep::quantum_operator(&self.inner).map_err(py_err)?;
        Ok(a.charpoly()
            .iter()
            .map(|p| p.terms().map(|(e, c)| (e, c.clone())).collect())
            .collect())
    }
}

/// Name -> passed, for every check of the case.
#[pyfunction]
fn verify_case(lie_type: &str, weight_index: usize) -> PyResult<BTreeMap<String, bool>> {
    let report = sweep::verify_case(parse_type(lie_type)?, weight_index, false).map_err(py_err)?;
    Ok(report
        .checks
        .iter()
        .map(|c| (c.name.to_string(), c.passed))
        .collect())
}

/// The `m = -h0` entry of the dictionary; rationals are returned as strings.
#[pyfunction]
fn distinguished_solution(lie_type: &str, weight_index: usize) -> PyResult<BTreeMap<String, Vec<String>>> {
    let rs = minuscule::RootSystem::build(parse_type(lie_type)?).map_err(py_err)?;
    let sol = ttstar::distinguished_solution(&rs, weight_index).map_err(py_err)?;
    let strs = |v: &[Rational64]| v.iter().map(|r| r.to_string()).collect();
    let mut out = BTreeMap::new();
    out.insert("asymptotic_data".to_string(), strs(&sol.asymptotic.values));
    out.insert("alcove_point".to_string(), strs(&sol.alcove.coords));
    out.insert("dpw_exponents".to_string(), strs(&sol.dpw.k));
    Ok(out)
}

/// Sign vector making `wedge^k A_{CP^n}` equal to `A_{Gr(k,n+1)}`, or `None`.
#[pyfunction]
fn satake_signs(n: usize, k: usize) -> PyResult<Option<Vec<i8>>> {
    let report = satake::satake_type_a(n, k).map_err(py_err)?;
    Ok(report.similarity.ok().map(|d| d.signs))
}

#[pyfunction]
fn half_wedge_dims(n: usize) -> PyResult<(String, String)> {
    let r = satake::half_wedge_dims(n).map_err(py_err)?;
    Ok((r.half_wedge_dim, r.endomorphism_dim))
}

/// Same bytes as `minuscule emit`.
#[pyfunction]
#[pyo3(signature = (lie_type, weight_index, what, format = "json"))]
fn emit(lie_type: &str, weight_index: usize, what: &str, format: &str) -> PyResult<String> {
    minuscule::cli::emit_document(parse_type(lie_type)?, weight_index, what, format)
        .map_err(|(_, msg)| PyValueError::new_err(msg))
}

#[pymodule]
fn minuscule_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyOrbit>()?;
    m.add_function(wrap_pyfunction!(verify_case, m)?)?;
    m.add_function(wrap_pyfunction!(distinguished_solution, m)?)?;
    m.add_function(wrap_pyfunction!(satake_signs, m)?)?;
    m.add_function(wrap_pyfunction!(half_wedge_dims, m)?)?;
    m.add_function(wrap_pyfunction!(emit, m)?)?;
    Ok(())
}
