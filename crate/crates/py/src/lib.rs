//! Python bindings for `partgraph`.
//!
//! Partitions cross the boundary as tuples of ints in weakly decreasing
//! order; anything that is not a valid partition raises `ValueError`.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use partgraph::atlas::{locus_statistics, render_atlas, AtlasMode, Summary};
use partgraph::oracle::brute_force_local_dimension;
use partgraph::pipeline::{compute_range, Computed};
use partgraph::{framework, verify, zones, Error, Partition};

type Parts = Vec<usize>;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyIOError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn size(n: i64) -> PyResult<usize> {
    match usize::try_from(n) {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(to_py(Error::InvalidSize(n))),
    }
}

fn partition(parts: Parts) -> PyResult<Partition> {
    Partition::new(parts).map_err(to_py)
}

fn parts_of(p: &Partition) -> Parts {
    p.parts().to_vec()
}

#[pyfunction]
fn enumerate_partitions(n: i64) -> PyResult<Vec<Parts>> {
    let all = partgraph::enumerate_partitions(size(n)?).map_err(to_py)?;
    Ok(all.iter().map(parts_of).collect())
}

#[pyfunction]
fn conjugate(parts: Parts) -> PyResult<Parts> {
    Ok(parts_of(&partition(parts)?.conjugate()))
}

#[pyfunction]
fn is_self_conjugate(parts: Parts) -> PyResult<bool> {
    Ok(partition(parts)?.is_self_conjugate())
}

#[pyfunction]
fn parse_partition(text: &str) -> PyResult<Parts> {
    let p: Partition = text.parse().map_err(to_py)?;
    Ok(parts_of(&p))
}

#[pyfunction]
fn format_partition(parts: Parts) -> PyResult<String> {
    Ok(partition(parts)?.to_string())
}

/// Neighbours in canonical (reverse-lex) order.
#[pyfunction]
fn neighbors(parts: Parts) -> PyResult<Vec<Parts>> {
    let p = partition(parts)?;
    Ok(partgraph::transfer_neighbors(&p).iter().rev().map(parts_of).collect())
}

/// `{r: n_r}` over `1..=n_max`.
#[pyfunction]
fn first_occurrences(py: Python<'_>, n_max: i64) -> PyResult<Vec<(usize, usize)>> {
    let n_max = size(n_max)?;
    let table = py
        .detach(|| {
            let all = compute_range(1, n_max, true)?;
            let profiles: Vec<_> = all.into_iter().map(|c| c.profile).collect();
            zones::first_occurrences(&profiles)
        })
        .map_err(to_py)?;
    Ok(table.entries.into_iter().collect())
}

/// Runs the verification suite; returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (n_min=1, n_max=30, jobs=0))]
fn run_verification(py: Python<'_>, n_min: i64, n_max: i64, jobs: usize) -> PyResult<(bool, String)> {
    let (n_min, n_max) = (size(n_min)?, size(n_max)?);
    let report = py.detach(|| verify::run(n_min, n_max, jobs)).map_err(to_py)?;
    Ok((report.passed(), report.to_string()))
}

/// The transfer graph of one `n` together with its thickness profile,
/// framework and zone decompositions.
#[pyclass(name = "PartitionGraph", frozen)]
struct PyPartitionGraph {
    inner: Computed,
}

impl PyPartitionGraph {
    fn index(&self, parts: Parts) -> PyResult<usize> {
        self.inner.graph.require_index(&partition(parts)?).map_err(to_py)
    }

    fn names(&self, set: &[usize]) -> Vec<Parts> {
        set.iter().map(|&v| parts_of(self.inner.graph.vertex(v))).collect()
    }
}

fn summary<'py>(py: Python<'py>, s: &Summary) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("min", s.min)?;
    d.set_item("mean", s.mean)?;
    d.set_item("max", s.max)?;
    Ok(d)
}

#[pymethods]
impl PyPartitionGraph {
    #[new]
    fn new(py: Python<'_>, n: i64) -> PyResult<Self> {
        let n = size(n)?;
        let inner = py.detach(|| Computed::new(n, true)).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.graph.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.graph.edge_count()
    }

    fn vertices(&self) -> Vec<Parts> {
        self.inner.graph.vertices().iter().map(parts_of).collect()
    }

    fn index_of(&self, parts: Parts) -> PyResult<usize> {
        self.index(parts)
    }

    fn neighbors(&self, parts: Parts) -> PyResult<Vec<Parts>> {
        let v = self.index(parts)?;
        Ok(self.names(self.inner.graph.neighbors(v)))
    }

    fn degree(&self, parts: Parts) -> PyResult<usize> {
        self.inner.graph.degree(&partition(parts)?).map_err(to_py)
    }

    fn is_connected(&self) -> bool {
        self.inner.graph.is_connected()
    }

    fn edges(&self) -> Vec<(Parts, Parts)> {
        let g = &self.inner.graph;
        g.edges().map(|(i, j)| (parts_of(g.vertex(i)), parts_of(g.vertex(j)))).collect()
    }

    /// Edge list in the `λ<TAB>μ` text format.
    fn edge_list(&self) -> PyResult<String> {
        let mut buf = Vec::new();
        self.inner
            .graph
            .write_edge_list(&mut buf)
            .map_err(|e| PyIOError::new_err(e.to_string()))?;
        Ok(String::from_utf8_lossy(&buf).into_owned())
    }

    fn thickness(&self, parts: Parts) -> PyResult<usize> {
        Ok(self.inner.profile.tau(self.index(parts)?))
    }

    fn brute_force_thickness(&self, parts: Parts) -> PyResult<usize> {
        brute_force_local_dimension(&self.inner.graph, &partition(parts)?).map_err(to_py)
    }

    /// `[(partition, tau), ...]` in canonical order.
    fn profile(&self) -> Vec<(Parts, usize)> {
        let g = &self.inner.graph;
        (0..g.vertex_count())
            .map(|v| (parts_of(g.vertex(v)), self.inner.profile.tau(v)))
            .collect()
    }

    #[getter]
    fn tau_max(&self) -> usize {
        self.inner.profile.tau_max()
    }

    fn max_locus(&self) -> Vec<Parts> {
        self.names(self.inner.profile.max_locus())
    }

    fn profile_csv(&self) -> PyResult<String> {
        self.inner.profile.to_csv(self.inner.graph.vertices()).map_err(to_py)
    }

    fn framework<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let b = &self.inner.framework;
        let d = PyDict::new(py);
        d.set_item("antennas", (parts_of(&b.antennas.0), parts_of(&b.antennas.1)))?;
        d.set_item("main_chain", b.main_chain.iter().map(parts_of).collect::<Vec<_>>())?;
        d.set_item("left_edge", b.left_edge.iter().map(parts_of).collect::<Vec<_>>())?;
        d.set_item("right_edge", b.right_edge.iter().map(parts_of).collect::<Vec<_>>())?;
        d.set_item("all_vertices", self.names(&b.all_vertices))?;
        Ok(d)
    }

    fn self_conjugate_axis(&self) -> PyResult<Vec<Parts>> {
        let axis = framework::self_conjugate_axis(self.inner.n()).map_err(to_py)?;
        Ok(axis.members.iter().map(parts_of).collect())
    }

    /// Threshold zone, exact regime, shell, core and components for order `r`.
    fn zones<'py>(&self, py: Python<'py>, r: usize) -> PyResult<Bound<'py, PyDict>> {
        let c = &self.inner;
        let z = zones::decompose(&c.graph, &c.framework, &c.profile, r).map_err(to_py)?;
        let d = PyDict::new(py);
        d.set_item("n", z.n)?;
        d.set_item("r", z.r)?;
        d.set_item("threshold", self.names(&z.threshold_zone))?;
        d.set_item("exact", self.names(&z.exact_regime))?;
        d.set_item("shell", self.names(&z.shell))?;
        d.set_item("core", self.names(&z.core))?;
        let comps: Vec<(Vec<Parts>, bool)> = z
            .components
            .iter()
            .map(|comp| (self.names(&comp.vertices), comp.boundary_attached))
            .collect();
        d.set_item("components", comps)?;
        Ok(d)
    }

    /// SVG text. `highlight` defaults to the maximal-thickness locus.
    #[pyo3(signature = (mode="thickness", highlight=None))]
    fn render(&self, mode: &str, highlight: Option<Vec<Parts>>) -> PyResult<String> {
        let mode: AtlasMode = mode.parse().map_err(to_py)?;
        let c = &self.inner;
        let marked = match highlight {
            Some(list) => list.into_iter().map(|p| self.index(p)).collect::<PyResult<Vec<_>>>()?,
            None => c.profile.max_locus().to_vec(),
        };
        render_atlas(&c.graph, &c.framework, &c.profile, mode, Some(&marked)).map_err(to_py)
    }

    /// Placement statistics for a set of partitions (default: `M_n`).
    #[pyo3(signature = (members=None))]
    fn locus_statistics<'py>(&self, py: Python<'py>, members: Option<Vec<Parts>>) -> PyResult<Bound<'py, PyDict>> {
        let c = &self.inner;
        let set = match members {
            Some(list) => list.into_iter().map(|p| self.index(p)).collect::<PyResult<Vec<_>>>()?,
            None => c.profile.max_locus().to_vec(),
        };
        let s = locus_statistics(&c.graph, &c.framework, &set).map_err(to_py)?;
        let d = PyDict::new(py);
        d.set_item("n", s.n)?;
        d.set_item("size", s.size)?;
        d.set_item("balance", summary(py, &s.balance)?)?;
        d.set_item("antenna_distance", summary(py, &s.antenna_distance)?)?;
        d.set_item("framework_distance", summary(py, &s.framework_distance)?)?;
        d.set_item("axis_fraction", s.axis_fraction)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "PartitionGraph(n={}, vertices={}, edges={}, tau_max={})",
            self.inner.n(),
            self.inner.graph.vertex_count(),
            self.inner.graph.edge_count(),
            self.inner.profile.tau_max()
        )
    }
}

#[pymodule]
fn pypartgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartitionGraph>()?;
    m.add_function(wrap_pyfunction!(enumerate_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(is_self_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(parse_partition, m)?)?;
    m.add_function(wrap_pyfunction!(format_partition, m)?)?;
    m.add_function(wrap_pyfunction!(neighbors, m)?)?;
    m.add_function(wrap_pyfunction!(first_occurrences, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    Ok(())
}
