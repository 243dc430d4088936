//! Python extension module exposing the main vtchroma types and operations.
//!
//! Build with `cargo build --release -p vtchroma-py`, then place the produced
//! `libvtchroma_py.so` on `sys.path` as `vtchroma.so` (see
//! `python/smoke_test.py`, which does this automatically).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use vtchroma::{Budget, Error, VertexSet};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted(_) => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn budget_from(nodes: Option<u64>) -> Budget {
    match nodes {
        Some(n) => Budget { search_nodes: n, ..Budget::default() },
        None => Budget::default(),
    }
}

fn vertex_set(vertices: Vec<usize>, n: usize) -> PyResult<VertexSet> {
    for &v in &vertices {
        if v >= n {
            return Err(PyValueError::new_err(format!("vertex {v} out of range for n={n}")));
        }
    }
    Ok(vertices.into_iter().collect())
}

/// An immutable undirected graph on at most 128 vertices.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: vtchroma::Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph with the given vertex count and edge list.
    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: vtchroma::Graph::from_edges(n, &edges).map_err(to_py_err)? })
    }

    /// Parses a graph6 string.
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: vtchroma::parse_graph6(text).map_err(to_py_err)? })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: vtchroma::Graph::complete(n).map_err(to_py_err)? })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: vtchroma::Graph::cycle(n).map_err(to_py_err)? })
    }

    /// Circulant graph on Z_n with the given connection offsets.
    #[staticmethod]
    fn circulant(n: usize, gens: Vec<usize>) -> PyResult<Self> {
        Ok(PyGraph { inner: vtchroma::Graph::circulant(n, &gens).map_err(to_py_err)? })
    }

    /// Kneser graph on the k-subsets of an n-set.
    #[staticmethod]
    fn kneser(n: usize, k: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: vtchroma::Graph::kneser(n, k).map_err(to_py_err)? })
    }

    /// Line graph of the odd cycle C_{2t+1} with each edge duplicated k times.
    #[staticmethod]
    fn catlin(t: usize, k: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: vtchroma::Graph::catlin(t, k).map_err(to_py_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        if u >= self.inner.n() || v >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.has_edge(u, v))
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_regular(&self) -> bool {
        self.inner.is_regular()
    }

    fn to_graph6(&self) -> String {
        vtchroma::write_graph6(&self.inner)
    }

    fn complement(&self) -> Self {
        PyGraph { inner: self.inner.complement() }
    }

    fn join(&self, other: &PyGraph) -> PyResult<Self> {
        Ok(PyGraph { inner: self.inner.join(&other.inner).map_err(to_py_err)? })
    }

    fn blow_up(&self, m: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: self.inner.blow_up(m).map_err(to_py_err)? })
    }

    fn clique_number(&self) -> usize {
        vtchroma::clique_number(&self.inner)
    }

    /// (alpha, witness independent set)
    fn independence_number(&self) -> (usize, Vec<usize>) {
        let (alpha, witness) = vtchroma::independence_number(&self.inner);
        (alpha, witness.to_vec())
    }

    /// (chi, witness coloring as a list of colors per vertex)
    #[pyo3(signature = (budget=None))]
    fn chromatic_number(&self, budget: Option<u64>) -> PyResult<(usize, Vec<usize>)> {
        let (chi, coloring) =
            vtchroma::chromatic_number(&self.inner, &budget_from(budget)).map_err(to_py_err)?;
        Ok((chi, coloring.colors().to_vec()))
    }

    /// Exact fractional chromatic number as a "p/q" string (covering LP,
    /// certificate verified internally).
    #[pyo3(signature = (budget=None))]
    fn fractional_chromatic(&self, budget: Option<u64>) -> PyResult<String> {
        let cert = vtchroma::fractional_chromatic(&self.inner, &budget_from(budget))
            .map_err(to_py_err)?;
        Ok(vtchroma::rational_string(&cert.value))
    }

    #[pyo3(signature = (budget=None))]
    fn is_vertex_transitive(&self, budget: Option<u64>) -> PyResult<bool> {
        Ok(vtchroma::is_vertex_transitive(&self.inner, &budget_from(budget))
            .map_err(to_py_err)?
            .is_some())
    }

    #[pyo3(signature = (other, budget=None))]
    fn is_isomorphic_to(&self, other: &PyGraph, budget: Option<u64>) -> PyResult<bool> {
        vtchroma::are_isomorphic(&self.inner, &other.inner, &budget_from(budget)).map_err(to_py_err)
    }

    /// All maximum cliques as sorted vertex lists.
    #[pyo3(signature = (budget=None))]
    fn maximum_cliques(&self, budget: Option<u64>) -> PyResult<Vec<Vec<usize>>> {
        let q = vtchroma::maximum_cliques(&self.inner, &budget_from(budget)).map_err(to_py_err)?;
        Ok(q.sets().iter().map(|s| s.to_vec()).collect())
    }

    /// Maximum-clique cluster classification for a connected
    /// vertex-transitive graph with 3*omega >= 2*(Delta+1).
    #[pyo3(signature = (budget=None))]
    fn cluster_classification(&self, budget: Option<u64>) -> PyResult<String> {
        Ok(vtchroma::vt_classify(&self.inner, &budget_from(budget))
            .map_err(to_py_err)?
            .to_string())
    }

    /// Full analysis record (profile plus every check) as a JSON string.
    #[pyo3(signature = (budget=None))]
    fn analyze_json(&self, budget: Option<u64>) -> PyResult<String> {
        let rec =
            vtchroma::analyze_graph(&self.inner, &budget_from(budget)).map_err(to_py_err)?;
        Ok(vtchroma::report::record_to_json(&rec))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

/// Independent set meeting every part exactly once, or None when the
/// exhaustive search proves none exists.
#[pyfunction]
fn independent_transversal(g: &PyGraph, parts: Vec<Vec<usize>>) -> PyResult<Option<Vec<usize>>> {
    let sets = parts
        .into_iter()
        .map(|p| vertex_set(p, g.inner.n()))
        .collect::<PyResult<Vec<_>>>()?;
    let partition = vtchroma::VertexPartition::new(sets);
    let found = vtchroma::independent_transversal(&g.inner, &partition).map_err(to_py_err)?;
    Ok(found.map(|s| s.to_vec()))
}

/// Proper r-coloring rainbow on every part (padded with isolated vertices),
/// or None when infeasible for this partition. Returns colors for the padded
/// vertex set; the first g.n entries are the original vertices.
#[pyfunction]
#[pyo3(signature = (g, parts, r, budget=None))]
fn strong_coloring(
    g: &PyGraph,
    parts: Vec<Vec<usize>>,
    r: usize,
    budget: Option<u64>,
) -> PyResult<Option<Vec<usize>>> {
    let sets = parts
        .into_iter()
        .map(|p| vertex_set(p, g.inner.n()))
        .collect::<PyResult<Vec<_>>>()?;
    let partition = vtchroma::VertexPartition::new(sets);
    let found = vtchroma::strong_coloring(&g.inner, &partition, r, &budget_from(budget))
        .map_err(to_py_err)?;
    Ok(found.map(|sc| sc.coloring.colors().to_vec()))
}

/// True iff every partition of the padded vertex set into parts of size r
/// admits a strong coloring (exhaustive; padded size must stay <= 12).
#[pyfunction]
#[pyo3(signature = (g, r, budget=None))]
fn strongly_colorable(g: &PyGraph, r: usize, budget: Option<u64>) -> PyResult<bool> {
    Ok(vtchroma::strong_chromatic_number_exhaustive(&g.inner, r, &budget_from(budget))
        .map_err(to_py_err)?
        .holds())
}

/// Pads each clique of a clique partition to size r, strips intra-clique
/// edges, strong-colors, and returns the restricted proper coloring (every
/// clique rainbow) as a list of colors per vertex.
#[pyfunction]
#[pyo3(signature = (g, cliques, r, budget=None))]
fn clique_padding_reduction(
    g: &PyGraph,
    cliques: Vec<Vec<usize>>,
    r: usize,
    budget: Option<u64>,
) -> PyResult<Vec<usize>> {
    let sets = cliques
        .into_iter()
        .map(|c| vertex_set(c, g.inner.n()))
        .collect::<PyResult<Vec<_>>>()?;
    let coloring = vtchroma::clique_padding_reduction(&g.inner, &sets, r, &budget_from(budget))
        .map_err(to_py_err)?;
    Ok(coloring.colors().to_vec())
}

#[pymodule(name = "vtchroma")]
fn vtchroma_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(independent_transversal, m)?)?;
    m.add_function(wrap_pyfunction!(strong_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(strongly_colorable, m)?)?;
    m.add_function(wrap_pyfunction!(clique_padding_reduction, m)?)?;
    m.add("MAX_VERTICES", vtchroma::MAX_VERTICES)?;
    Ok(())
}
