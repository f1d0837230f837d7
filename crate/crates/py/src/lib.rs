//! Python bindings: a `Graph` class exposing the exact invariant engines,
//! the regularity computation for powers of the edge ideal, and the
//! bound-verification report as JSON.
//!
//! Budgets come from `EIL_BUDGET_VERTICES` / `EIL_BUDGET_SUBSET` /
//! `EIL_BUDGET_EDGES`, same as the CLI.

use pyo3::exceptions::{PyIOError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use eil_core::betti::power_betti_table;
use eil_core::bounds::{
    compute_invariants, evaluate_bounds, hereditary_witness_search, GraphDescriptor,
    HereditaryInvariant,
};
use eil_core::budget::Budget;
use eil_core::error::Error;
use eil_core::formats;
use eil_core::graph::{Girth, Graph};
use eil_core::homology::Field;
use eil_core::matchings;
use eil_core::structure;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidInput(_) => PyValueError::new_err(e.to_string()),
        Error::Io(_) => PyIOError::new_err(e.to_string()),
        Error::BudgetExceeded { .. } | Error::Inconsistency(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
    }
}

fn budget() -> Budget {
    Budget::from_env()
}

fn parse_field(name: &str) -> PyResult<Field> {
    name.parse().map_err(py_err)
}

/// An undirected simple graph together with every operation of the
/// edge-ideal toolkit that applies to it.
#[pyclass(name = "Graph", module = "eil_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

impl PyGraph {
    fn wrap(inner: Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    /// Graph(n, edges): n vertices 0..n, edges as (u, v) pairs.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self::wrap(Graph::from_edge_list(n, &edges).map_err(py_err)?))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(Self::wrap(Graph::cycle(n).map_err(py_err)?))
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Ok(Self::wrap(Graph::path(n).map_err(py_err)?))
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(Self::wrap(Graph::complete(n).map_err(py_err)?))
    }

    /// The 5n-vertex girth-5 construction ladder member.
    #[staticmethod]
    fn hn(n: usize) -> PyResult<Self> {
        Ok(Self::wrap(structure::build_hn(n).map_err(py_err)?))
    }

    /// Parse graph6, edge-list, or JSON text (format sniffed).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self::wrap(formats::parse_graph_auto(text).map_err(py_err)?))
    }

    #[staticmethod]
    fn disjoint_union(a: &PyGraph, b: &PyGraph) -> Self {
        Self::wrap(Graph::disjoint_union(&a.inner, &b.inner))
    }

    /// Glue `host` at its vertex `u` onto the whiskered ladder member
    /// W(H_n) at vertex `x`; the merged vertex comes last.
    #[staticmethod]
    fn gn(host: &PyGraph, u: usize, n: usize, x: usize) -> PyResult<Self> {
        Ok(Self::wrap(
            structure::build_gn(&host.inner, u, n, x).map_err(py_err)?,
        ))
    }

    /// The graph with one fresh pendant vertex attached to every vertex.
    fn whiskered(&self) -> Self {
        Self::wrap(structure::whisker(&self.inner))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn to_graph6(&self) -> String {
        formats::write_graph6(&self.inner)
    }

    fn to_edgelist(&self) -> String {
        formats::write_edgelist(&self.inner)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Shortest cycle length, or None for forests.
    fn girth(&self) -> Option<usize> {
        match self.inner.girth() {
            Girth::Finite(k) => Some(k),
            Girth::Acyclic => None,
        }
    }

    fn matching_number(&self) -> PyResult<usize> {
        matchings::matching_number(&self.inner, &budget()).map_err(py_err)
    }

    fn min_maximal_matching_number(&self) -> PyResult<usize> {
        matchings::min_maximal_matching_number(&self.inner, &budget()).map_err(py_err)
    }

    fn induced_matching_number(&self) -> PyResult<usize> {
        matchings::induced_matching_number(&self.inner, &budget()).map_err(py_err)
    }

    /// Largest matching number of an induced subgraph whose components
    /// are single edges or 5-cycles.
    fn ind_match_k2c5(&self) -> PyResult<usize> {
        Ok(matchings::ind_match_k2c5(&self.inner, &budget())
            .map_err(py_err)?
            .0)
    }

    /// Smallest matching number of a maximal subgraph whose components
    /// are single edges or 5-cycles.
    fn min_match_k2c5(&self) -> PyResult<usize> {
        Ok(matchings::min_match_k2c5(&self.inner, &budget())
            .map_err(py_err)?
            .0)
    }

    /// Minimum number of co-chordal subgraphs covering the edge set.
    fn cochord(&self) -> PyResult<usize> {
        Ok(eil_core::cochordal::cochord_number(&self.inner, &budget())
            .map_err(py_err)?
            .0)
    }

    fn independence_number(&self) -> PyResult<usize> {
        eil_core::graph::independence_number(&self.inner, &budget()).map_err(py_err)
    }

    fn is_vertex_decomposable(&self) -> PyResult<bool> {
        structure::is_vertex_decomposable(&self.inner, &budget()).map_err(py_err)
    }

    /// Cohen-Macaulay test for connected graphs of girth at least 5.
    fn is_cm_girth5(&self) -> PyResult<bool> {
        structure::is_cm_girth5(&self.inner, &budget()).map_err(py_err)
    }

    /// Every invariant at once, as a JSON string with a notes list for
    /// anything that was skipped over budget.
    fn invariants_json(&self) -> String {
        let mut notes = Vec::new();
        let block = compute_invariants(&self.inner, &budget(), &mut notes);
        serde_json::json!({
            "graph": GraphDescriptor::of(&self.inner).json_value(),
            "invariants": block.json_value(),
            "notes": notes,
        })
        .to_string()
    }

    /// Exact regularity of the s-th power of the edge ideal (ideal
    /// convention: reg of the quotient plus one).
    #[pyo3(signature = (s = 1, field = "gf2"))]
    fn regularity(&self, s: usize, field: &str) -> PyResult<usize> {
        let f = parse_field(field)?;
        eil_core::betti::regularity_of_power(&self.inner, s, f, &budget()).map_err(py_err)
    }

    /// Graded Betti numbers of the quotient by the s-th power, as
    /// (i, j, value) triples.
    #[pyo3(signature = (s = 1, field = "gf2"))]
    fn betti(&self, s: usize, field: &str) -> PyResult<Vec<(usize, usize, usize)>> {
        let f = parse_field(field)?;
        let table = power_betti_table(&self.inner, s, f, &budget()).map_err(py_err)?;
        Ok(table
            .entries()
            .iter()
            .map(|(&(i, j), &v)| (i, j, v))
            .collect())
    }

    /// Full bound-verification report for the s-th power, as JSON.
    #[pyo3(signature = (s = 1, field = "gf2"))]
    fn bounds_json(&self, s: usize, field: &str) -> PyResult<String> {
        let f = parse_field(field)?;
        Ok(evaluate_bounds(&self.inner, s, f, &budget())
            .json_value()
            .to_string())
    }

    /// Hereditary witness vertex for "cochord", "minmatch", or
    /// "minmatch-k2c5", as JSON.
    fn witness_json(&self, lemma: &str) -> PyResult<String> {
        let invariant: HereditaryInvariant = lemma.parse().map_err(py_err)?;
        let record =
            hereditary_witness_search(&self.inner, invariant, &budget()).map_err(py_err)?;
        Ok(record.json_value().to_string())
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// All non-isomorphic connected graphs on at most n_max vertices.
#[pyfunction]
fn exhaustive_connected(n_max: usize) -> PyResult<Vec<PyGraph>> {
    Ok(eil_core::scan::exhaustive_connected(n_max)
        .map_err(py_err)?
        .into_iter()
        .map(PyGraph::wrap)
        .collect())
}

#[pymodule]
fn eil_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(exhaustive_connected, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
