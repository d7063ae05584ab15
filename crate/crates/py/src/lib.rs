//! Python bindings for `arclink-core`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use arclink_core::cusp::{check_duality, dual_sequence, fundamental_points, monodromy, recover_sequence, CuspSequence};
use arclink_core::graph::{intersection_matrix, is_negative_definite, parse_plumbing, PlumbingGraph};
use arclink_core::inoue::{inoue_cross_check, parse_field_file};
use arclink_core::quotient::{conjugacy_classes, cyclic_quotient_components, group_closure, mckay_report, parse_group_file, Center};
use arclink_core::{analyze_graph, checks, report, Mat2};

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

type PyMat = ((BigInt, BigInt), (BigInt, BigInt));

fn mat(m: &Mat2) -> PyMat {
    ((m.p.clone(), m.q.clone()), (m.r.clone(), m.s.clone()))
}

/// A plumbing graph.
#[pyclass(name = "Graph", module = "arclink")]
pub struct PyGraph {
    inner: PlumbingGraph,
}

#[pymethods]
impl PyGraph {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_plumbing(text).map_err(value_err)? })
    }

    #[staticmethod]
    fn chain(eulers: Vec<i64>) -> Self {
        PyGraph { inner: PlumbingGraph::chain("v", &eulers) }
    }

    #[staticmethod]
    fn cycle(eulers: Vec<i64>) -> Self {
        PyGraph { inner: PlumbingGraph::cycle("e", &eulers) }
    }

    #[staticmethod]
    #[pyo3(signature = (center_euler, legs, genus = 0))]
    fn star(center_euler: i64, legs: Vec<Vec<i64>>, genus: u32) -> Self {
        PyGraph { inner: PlumbingGraph::star(center_euler, genus, &legs) }
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!("Graph({} vertices, {} edges)", self.inner.vertex_count(), self.inner.edges.len())
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        intersection_matrix(&self.inner)
    }

    fn is_negative_definite(&self) -> bool {
        is_negative_definite(&intersection_matrix(&self.inner))
    }

    /// Singularity class label, e.g. `CyclicQuotient(5,4)`.
    fn classify(&self) -> PyResult<String> {
        Ok(analyze_graph(&self.inner).map_err(value_err)?.class.label())
    }

    /// Full analysis report as a JSON string.
    #[pyo3(signature = (bound = 3))]
    fn analyze(&self, bound: u64) -> PyResult<String> {
        Ok(report::analyze(&self.inner, bound).map_err(value_err)?.to_json())
    }
}

/// A cusp given by its cyclic sequence `b_1, ..., b_k`.
#[pyclass(name = "Cusp", module = "arclink")]
pub struct PyCusp {
    inner: CuspSequence,
}

#[pymethods]
impl PyCusp {
    #[new]
    fn new(terms: Vec<i64>) -> PyResult<Self> {
        Ok(PyCusp { inner: CuspSequence::new(terms).map_err(value_err)? })
    }

    #[getter]
    fn terms(&self) -> Vec<i64> {
        self.inner.terms().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Cusp{}", self.inner)
    }

    fn __eq__(&self, other: PyRef<'_, PyCusp>) -> bool {
        self.inner == other.inner
    }

    fn monodromy(&self) -> PyMat {
        mat(&monodromy(&self.inner))
    }

    fn dual(&self) -> PyCusp {
        PyCusp { inner: dual_sequence(&self.inner) }
    }

    fn canonical(&self) -> PyCusp {
        PyCusp { inner: self.inner.canonical() }
    }

    fn is_rotation_of(&self, other: PyRef<'_, PyCusp>) -> bool {
        self.inner.is_rotation_of(&other.inner)
    }

    /// `(M, M*, MT, TM*, identity_holds, traces_equal)` as a dict.
    fn check_duality<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = check_duality(&self.inner);
        let d = PyDict::new(py);
        d.set_item("dual", r.b_star.canonical().terms().to_vec())?;
        d.set_item("M", mat(&r.m))?;
        d.set_item("M_star", mat(&r.m_star))?;
        d.set_item("MT", mat(&r.mt))?;
        d.set_item("TM_star", mat(&r.tm_star))?;
        d.set_item("identity_holds", r.t_identity_holds)?;
        d.set_item("traces_equal", r.traces_equal)?;
        Ok(d)
    }

    #[pyo3(signature = (bound = 3))]
    fn fundamental_points(&self, bound: u64) -> Vec<(String, (BigInt, BigInt))> {
        fundamental_points(&self.inner, bound).into_iter().map(|(l, v)| (l.to_string(), (v.x, v.y))).collect()
    }
}

#[pyfunction]
fn recover(m: PyMat) -> PyResult<PyCusp> {
    let ((p, q), (r, s)) = m;
    let inner = recover_sequence(&Mat2 { p, q, r, s }).map_err(value_err)?;
    Ok(PyCusp { inner })
}

/// Closure, class count and McKay data of the group in a group file.
#[pyfunction]
fn quotient_report<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyDict>> {
    let g = group_closure(&parse_group_file(text).map_err(value_err)?).map_err(value_err)?;
    let r = mckay_report(&g).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("order", r.order)?;
    d.set_item("classes", conjugacy_classes(&g).count())?;
    d.set_item("type", r.ade.to_string())?;
    d.set_item("exceptional_curves", r.expected_exceptional_curves)?;
    d.set_item("matches", r.matches)?;
    Ok(d)
}

/// Labels `(a, m, on_curve)` of the cyclic quotient `(1/m)(1, q)` up to `bound`.
#[pyfunction]
fn cyclic_labels(m: BigInt, q: BigInt, bound: u64) -> PyResult<Vec<(BigInt, BigInt, bool)>> {
    let labels = cyclic_quotient_components(&m, &q, bound).map_err(value_err)?;
    Ok(labels.into_iter().map(|l| (l.a, l.m, l.center == Center::OnCurve)).collect())
}

/// Runs the quadratic-unit cross-check on a field file.
#[pyfunction]
#[pyo3(signature = (text, bound = 3))]
fn inoue_check<'py>(py: Python<'py>, text: &str, bound: u64) -> PyResult<Bound<'py, PyDict>> {
    let f = parse_field_file(text).map_err(value_err)?;
    let r = inoue_cross_check(&f.lattice, &f.u, bound).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("M_u", mat(&r.m_u))?;
    d.set_item("recovered", r.recovered.terms().to_vec())?;
    d.set_item("orientation", r.orientation.to_string())?;
    d.set_item("components", r.components)?;
    d.set_item("checks", r.checks.clone())?;
    d.set_item("witness", r.witness.clone())?;
    Ok(d)
}

/// The invariant sweeps of `arclink check` as `(name, passed, witness)`.
#[pyfunction]
fn run_checks() -> Vec<(String, bool, Option<String>)> {
    checks::run_all().into_iter().map(|o| (o.name.to_string(), o.passed(), o.witness)).collect()
}

#[pymodule]
fn arclink(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCusp>()?;
    m.add_function(wrap_pyfunction!(recover, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_report, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_labels, m)?)?;
    m.add_function(wrap_pyfunction!(inoue_check, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    Ok(())
}
