//! Python bindings: graphs, products, A_alpha spectra and isospectrality checks.

use coronae::format::{parse_graph6, parse_edge_list, write_graph6};
use coronae::graph::parse_named;
use coronae::isospectral::{self, IsoReport};
use coronae::products::{build_product, ProductOp};
use coronae::{theorems, AlphaParam};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: coronae::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn alpha(a: f64) -> PyResult<AlphaParam> {
    AlphaParam::new(a).map_err(err)
}

fn op(name: &str) -> PyResult<ProductOp> {
    name.parse().map_err(err)
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pycoronae", frozen)]
struct PyGraph(coronae::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        coronae::Graph::from_edge_list(n, &edges).map(PyGraph).map_err(err)
    }

    /// `"petersen"`, `"cycle:5"`, `"complete_bipartite:2,3"`, ...
    #[staticmethod]
    fn named(spec: &str) -> PyResult<Self> {
        parse_named(spec).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph6(text.trim().as_bytes()).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        parse_edge_list(text).map(PyGraph).map_err(err)
    }

    fn graph6(&self) -> String {
        write_graph6(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        self.0.degree_sequence().0
    }

    /// Sorted eigenvalues of `alpha D + (1 - alpha) A`, with multiplicity.
    fn alpha_spectrum(&self, alpha_value: f64) -> PyResult<Vec<f64>> {
        isospectral::alpha_eigenvalues(&self.0, alpha(alpha_value)?).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.m())
    }
}

/// Builds `op(g1, g2)`; `g2` is ignored for `"r-graph"`.
#[pyfunction]
#[pyo3(signature = (name, g1, g2=None))]
fn product(name: &str, g1: &PyGraph, g2: Option<&PyGraph>) -> PyResult<PyGraph> {
    let op = op(name)?;
    let empty = coronae::Graph::empty(0);
    let g2 = match (g2, op.binary()) {
        (Some(g), _) => &g.0,
        (None, false) => &empty,
        (None, true) => return Err(PyValueError::new_err(format!("{op} needs a second graph"))),
    };
    build_product(op, &g1.0, g2).map(|(g, _)| PyGraph(g)).map_err(err)
}

/// Spectrum of `op(g1, g2)` from the coronal factorization, as `(value, multiplicity)` pairs.
#[pyfunction]
#[pyo3(signature = (name, g1, alpha_value, g2=None))]
fn product_spectrum(name: &str, g1: &PyGraph, alpha_value: f64, g2: Option<&PyGraph>) -> PyResult<Vec<(f64, usize)>> {
    let a = alpha(alpha_value)?;
    let op = op(name)?;
    let need = || g2.map(|g| &g.0).ok_or_else(|| PyValueError::new_err(format!("{op} needs a second graph")));
    let t = match op {
        ProductOp::Corona => theorems::corona_charpoly(&g1.0, need()?, a),
        ProductOp::EdgeCorona => theorems::edge_corona_charpoly(&g1.0, need()?, a),
        ProductOp::RGraph => theorems::edge_corona_charpoly(&g1.0, &coronae::Graph::empty(1), a),
        ProductOp::RVertex => theorems::r_vertex_charpoly(&g1.0, need()?, a),
        ProductOp::REdge => theorems::r_edge_charpoly(&g1.0, need()?, a),
    }
    .map_err(err)?;
    Ok(t.spectrum.pairs().to_vec())
}

fn report(py: Python<'_>, r: IsoReport) -> PyResult<Py<PyAny>> {
    let d = pyo3::types::PyDict::new(py);
    d.set_item("verdict", r.verdict)?;
    d.set_item("evidence", r.evidence)?;
    d.set_item("witness_alpha", r.witness_alpha)?;
    Ok(d.into_any().unbind())
}

#[pyfunction]
#[pyo3(signature = (g1, g2, alpha_value, tol=1e-8))]
fn check_at_alpha(py: Python<'_>, g1: &PyGraph, g2: &PyGraph, alpha_value: f64, tol: f64) -> PyResult<Py<PyAny>> {
    let r = isospectral::check_at_alpha(&g1.0, &g2.0, alpha(alpha_value)?, tol).map_err(err)?;
    report(py, r)
}

#[pyfunction]
#[pyo3(signature = (g1, g2, tol=1e-8))]
fn check_all_alpha(py: Python<'_>, g1: &PyGraph, g2: &PyGraph, tol: f64) -> PyResult<Py<PyAny>> {
    let r = isospectral::check_all_alpha(&g1.0, &g2.0, tol).map_err(err)?;
    report(py, r)
}

#[pyfunction]
fn coronal_equal(g1: &PyGraph, g2: &PyGraph, alpha_value: f64) -> PyResult<bool> {
    isospectral::coronal_equal(&g1.0, &g2.0, alpha(alpha_value)?).map_err(err)
}

#[pymodule]
fn pycoronae(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(product_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(check_at_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(check_all_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(coronal_equal, m)?)?;
    Ok(())
}
