//! Python bindings: graphs, total graphs, the exact solvers, the closed-form
//! evaluators, the explicit constructions, and coloring verification.
//!
//! Objects of V ∪ E cross the boundary as tuples in paper notation:
//! `("v", k)` / `("u", k)` for vertices and `("e", a, b)` for edges, with the
//! numbers following the graph's display naming (wheel hubs are `("v", 0)`,
//! bipartite edges pair the v- and u-part numbers).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use tdtc::constructions as cons;
use tdtc::formulas;
use tdtc::graph::{
    are_isomorphic, cartesian_product, emit_graph, line_graph, parse_graph, total_graph,
    FamilySpec, ObjectId,
};
use tdtc::notation;
use tdtc::solve::{self, SolveError, SolveOptions, Witness};
use tdtc::verify::{self, Mode};

fn value_err(msg: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(msg.to_string())
}

fn solve_err(e: SolveError) -> PyErr {
    match e {
        SolveError::Budget { .. } | SolveError::InternalVerification { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        other => value_err(other),
    }
}

fn obj_to_py(py: Python<'_>, base: &tdtc::graph::Graph, obj: ObjectId) -> PyResult<Py<PyAny>> {
    let tuple = match obj {
        ObjectId::Vertex(v) => {
            let (tag, num) = notation::vertex_to_display(base, v);
            PyTuple::new(py, [tag.into_pyobject(py)?.as_any(), num.into_pyobject(py)?.as_any()])?
        }
        ObjectId::Edge(i, j) => {
            let (a, b) = notation::edge_to_display(base, i, j);
            PyTuple::new(
                py,
                [
                    "e".into_pyobject(py)?.as_any(),
                    a.into_pyobject(py)?.as_any(),
                    b.into_pyobject(py)?.as_any(),
                ],
            )?
        }
    };
    Ok(tuple.unbind().into())
}

fn obj_from_py(base: &tdtc::graph::Graph, obj: &Bound<'_, PyAny>) -> PyResult<ObjectId> {
    let parts: Vec<Bound<'_, PyAny>> = obj.try_iter()?.collect::<PyResult<_>>()?;
    let tag: String = parts
        .first()
        .ok_or_else(|| value_err("empty object tuple"))?
        .extract()?;
    match (tag.as_str(), parts.len()) {
        ("v", 2) | ("u", 2) => {
            let num: usize = parts[1].extract()?;
            notation::vertex_from_display(base, &tag, num)
                .map(ObjectId::Vertex)
                .ok_or_else(|| value_err(format!("vertex ({tag:?}, {num}) is not in the graph")))
        }
        ("e", 3) => {
            let a: usize = parts[1].extract()?;
            let b: usize = parts[2].extract()?;
            notation::edge_from_display(base, a, b)
                .map(|(i, j)| ObjectId::Edge(i, j))
                .ok_or_else(|| value_err(format!("edge ({a}, {b}) is not in the graph")))
        }
        _ => Err(value_err(
            "object must be (\"v\", k), (\"u\", k) or (\"e\", a, b)",
        )),
    }
}

fn classes_to_py(
    py: Python<'_>,
    base: &tdtc::graph::Graph,
    classes: &[Vec<ObjectId>],
) -> PyResult<Py<PyAny>> {
    let out: Vec<Vec<Py<PyAny>>> = classes
        .iter()
        .map(|cls| cls.iter().map(|&o| obj_to_py(py, base, o)).collect())
        .collect::<PyResult<_>>()?;
    Ok(out.into_pyobject(py)?.unbind())
}

fn classes_from_py(
    base: &tdtc::graph::Graph,
    classes: &Bound<'_, PyAny>,
) -> PyResult<Vec<Vec<ObjectId>>> {
    classes
        .try_iter()?
        .map(|cls| {
            cls?.try_iter()?
                .map(|obj| obj_from_py(base, &obj?))
                .collect()
        })
        .collect()
}

/// Outcome of an exact solve: the optimum, a re-verified witness in object
/// tuples, and the search effort in nodes.
#[pyclass(frozen)]
struct SolveResult {
    #[pyo3(get)]
    invariant: String,
    #[pyo3(get)]
    value: u64,
    #[pyo3(get)]
    witness: Py<PyAny>,
    #[pyo3(get)]
    nodes: u64,
    #[pyo3(get)]
    verified: bool,
}

#[pymethods]
impl SolveResult {
    fn __repr__(&self) -> String {
        format!(
            "SolveResult(invariant={:?}, value={}, nodes={})",
            self.invariant, self.value, self.nodes
        )
    }
}

/// Verification report: validity plus human-readable violations.
#[pyclass(frozen)]
struct VerifyReport {
    #[pyo3(get)]
    mode: String,
    #[pyo3(get)]
    valid: bool,
    #[pyo3(get)]
    violations: Vec<String>,
}

#[pymethods]
impl VerifyReport {
    fn __repr__(&self) -> String {
        format!(
            "VerifyReport(mode={:?}, valid={}, violations={})",
            self.mode,
            self.valid,
            self.violations.len()
        )
    }
}

/// An immutable undirected simple graph.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: tdtc::graph::Graph,
}

impl Graph {
    fn solve_with(
        &self,
        py: Python<'_>,
        budget: Option<u64>,
        run: impl FnOnce(
            &tdtc::graph::Graph,
            &SolveOptions,
        ) -> Result<solve::SolveResult, SolveError>,
    ) -> PyResult<SolveResult> {
        let opts = SolveOptions {
            node_budget: budget.unwrap_or(SolveOptions::default().node_budget),
        };
        let result = run(&self.inner, &opts).map_err(solve_err)?;
        let witness = match &result.witness {
            Witness::VertexSet(set) => {
                let objs: Vec<ObjectId> = set.iter().map(|&v| ObjectId::Vertex(v)).collect();
                let items: Vec<Py<PyAny>> = objs
                    .iter()
                    .map(|&o| obj_to_py(py, &self.inner, o))
                    .collect::<PyResult<_>>()?;
                items.into_pyobject(py)?.unbind()
            }
            Witness::MixedSet(ms) => {
                let items: Vec<Py<PyAny>> = ms
                    .objects
                    .iter()
                    .map(|&o| obj_to_py(py, &self.inner, o))
                    .collect::<PyResult<_>>()?;
                items.into_pyobject(py)?.unbind()
            }
            Witness::VertexColoring(classes) => {
                let obj_classes: Vec<Vec<ObjectId>> = classes
                    .iter()
                    .map(|c| c.iter().map(|&v| ObjectId::Vertex(v)).collect())
                    .collect();
                classes_to_py(py, &self.inner, &obj_classes)?
            }
            Witness::ObjectColoring(classes) => classes_to_py(py, &self.inner, classes)?,
        };
        Ok(SolveResult {
            invariant: result.invariant.name().to_string(),
            value: result.value,
            witness,
            nodes: result.nodes,
            verified: result.verified,
        })
    }
}

#[pymethods]
impl Graph {
    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Ok(Self { inner: FamilySpec::Path { n }.generate().map_err(value_err)? })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(Self { inner: FamilySpec::Cycle { n }.generate().map_err(value_err)? })
    }

    /// Wheel with rim size n (order n + 1, hub v_0).
    #[staticmethod]
    fn wheel(n: usize) -> PyResult<Self> {
        Ok(Self { inner: FamilySpec::Wheel { n }.generate().map_err(value_err)? })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(Self { inner: FamilySpec::Complete { n }.generate().map_err(value_err)? })
    }

    #[staticmethod]
    fn complete_bipartite(m: usize, n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: FamilySpec::CompleteBipartite { m, n }.generate().map_err(value_err)?,
        })
    }

    /// Parse edge-list text: "n m" header then 1-based "i j" lines.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(Self { inner: parse_graph(text).map_err(value_err)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn vertex_names(&self) -> Vec<String> {
        (0..self.inner.order()).map(|v| self.inner.vertex_name(v)).collect()
    }

    fn degrees(&self) -> Vec<usize> {
        (0..self.inner.order()).map(|v| self.inner.degree(v)).collect()
    }

    /// Canonical edge-list text.
    fn emit(&self) -> String {
        emit_graph(&self.inner)
    }

    /// The total graph T(G), with object names carried as vertex names.
    fn total(&self) -> Graph {
        Graph { inner: total_graph(&self.inner).graph().clone() }
    }

    fn line_graph(&self) -> Graph {
        Graph { inner: line_graph(&self.inner) }
    }

    fn cartesian(&self, other: &Graph) -> Graph {
        Graph { inner: cartesian_product(&self.inner, &other.inner) }
    }

    fn is_isomorphic_to(&self, other: &Graph) -> PyResult<bool> {
        Ok(are_isomorphic(&self.inner, &other.inner)
            .map_err(value_err)?
            .is_some())
    }

    #[pyo3(signature = (budget=None))]
    fn alpha(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<SolveResult> {
        self.solve_with(py, budget, solve::independence_number)
    }

    #[pyo3(signature = (budget=None))]
    fn alpha_mix(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<SolveResult> {
        self.solve_with(py, budget, solve::mixed_independence_number)
    }

    #[pyo3(signature = (budget=None))]
    fn gamma_t(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<SolveResult> {
        self.solve_with(py, budget, solve::total_domination_number)
    }

    #[pyo3(signature = (budget=None))]
    fn gamma_tm(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<SolveResult> {
        self.solve_with(py, budget, solve::total_mixed_domination_number)
    }

    #[pyo3(signature = (budget=None))]
    fn chi(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<SolveResult> {
        self.solve_with(py, budget, solve::chromatic_number)
    }

    #[pyo3(signature = (budget=None))]
    fn chi_total(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<SolveResult> {
        self.solve_with(py, budget, solve::total_chromatic_number)
    }

    #[pyo3(signature = (budget=None))]
    fn tdc_number(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<SolveResult> {
        self.solve_with(py, budget, solve::tdc_number)
    }

    #[pyo3(signature = (budget=None))]
    fn tdtc_number(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<SolveResult> {
        self.solve_with(py, budget, solve::tdtc_number)
    }

    /// Singleton classes on a minimum TDS plus an exact coloring of the rest.
    #[pyo3(signature = (budget=None))]
    fn tds_layered(&self, py: Python<'_>, budget: Option<u64>) -> PyResult<Py<PyAny>> {
        let opts = SolveOptions {
            node_budget: budget.unwrap_or(SolveOptions::default().node_budget),
        };
        let lc = solve::tds_layered_coloring(&self.inner, &opts).map_err(solve_err)?;
        let obj_classes: Vec<Vec<ObjectId>> = lc
            .classes
            .iter()
            .map(|c| c.iter().map(|&v| ObjectId::Vertex(v)).collect())
            .collect();
        classes_to_py(py, &self.inner, &obj_classes)
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

/// Closed-form value of chi-dtt, gamma-tm, alpha-mix or chi-dtt-offset on a
/// covered family. Raises ValueError when the source gives no closed form.
#[pyfunction]
#[pyo3(signature = (invariant, family, n, m=None))]
fn formula(invariant: &str, family: &str, n: usize, m: Option<usize>) -> PyResult<u64> {
    let spec = match family {
        "path" => FamilySpec::Path { n },
        "cycle" => FamilySpec::Cycle { n },
        "wheel" => FamilySpec::Wheel { n },
        "complete" => FamilySpec::Complete { n },
        "complete-bipartite" => FamilySpec::CompleteBipartite {
            m: m.ok_or_else(|| value_err("complete-bipartite needs m"))?,
            n,
        },
        other => return Err(value_err(format!("unknown family {other:?}"))),
    };
    let result = match invariant {
        "chi-dtt" => formulas::chi_dtt(spec),
        "gamma-tm" => formulas::gamma_tm(spec),
        "alpha-mix" => formulas::alpha_mix(spec),
        "chi-dtt-offset" => formulas::chi_dtt_gamma_offset(spec),
        other => return Err(value_err(format!("unknown invariant {other:?}"))),
    };
    result.map_err(value_err)
}

/// Check classes of object tuples against a graph in the given mode
/// (proper | total | tdc | tdtc). Total modes check on T(graph).
#[pyfunction]
fn check_coloring(
    graph: &Graph,
    classes: &Bound<'_, PyAny>,
    mode: &str,
) -> PyResult<VerifyReport> {
    let mode = Mode::parse(mode).ok_or_else(|| value_err(format!("unknown mode {mode:?}")))?;
    let object_classes = classes_from_py(&graph.inner, classes)?;
    let (report, names): (verify::VerifyReport, Vec<String>) = if mode.on_total_graph() {
        let total = total_graph(&graph.inner);
        let idx = verify::map_object_classes(&total, &object_classes).map_err(value_err)?;
        let report = verify::check_coloring(total.graph(), &idx, mode).map_err(value_err)?;
        let names = (0..total.order()).map(|i| total.object_name(i)).collect();
        (report, names)
    } else {
        let idx: Vec<Vec<usize>> = object_classes
            .iter()
            .map(|cls| {
                cls.iter()
                    .map(|&o| match o {
                        ObjectId::Vertex(v) => Ok(v),
                        ObjectId::Edge(..) => {
                            Err(value_err(format!("mode {mode} colors vertices only")))
                        }
                    })
                    .collect()
            })
            .collect::<PyResult<_>>()?;
        let report = verify::check_coloring(&graph.inner, &idx, mode).map_err(value_err)?;
        let names = (0..graph.inner.order())
            .map(|v| graph.inner.vertex_name(v))
            .collect();
        (report, names)
    };
    let name_of = |i: usize| names[i].clone();
    let violations = report
        .violations
        .iter()
        .map(|v| v.describe(&name_of))
        .collect();
    Ok(VerifyReport {
        mode: mode.to_string(),
        valid: report.valid,
        violations,
    })
}

fn built_to_py(py: Python<'_>, built: &cons::BuiltColoring) -> PyResult<Py<PyAny>> {
    classes_to_py(py, built.base(), built.classes())
}

/// Verified TDTC of the wheel W_n (rim size n).
#[pyfunction]
fn wheel_tdtc(py: Python<'_>, n: usize) -> PyResult<Py<PyAny>> {
    built_to_py(py, &cons::wheel_tdtc(n).map_err(value_err)?)
}

/// Verified TDTC of K_{m,n}, n >= m >= 1.
#[pyfunction]
fn bipartite_tdtc(py: Python<'_>, m: usize, n: usize) -> PyResult<Py<PyAny>> {
    built_to_py(py, &cons::bipartite_tdtc(m, n).map_err(value_err)?)
}

/// Published TDTC of K_n for n in {2,3,4,5,6,7,8,11}.
#[pyfunction]
fn complete_tdtc_fixture(py: Python<'_>, n: usize) -> PyResult<Py<PyAny>> {
    built_to_py(py, &cons::complete_tdtc_fixture(n).map_err(value_err)?)
}

/// An order-N graph with a verified N-class TDTC: (graph, classes).
#[pyfunction]
fn extremal_order_n(py: Python<'_>, n: usize) -> PyResult<(Graph, Py<PyAny>)> {
    let built = cons::extremal_order_n(n).map_err(value_err)?;
    let classes = built_to_py(py, &built)?;
    Ok((Graph { inner: built.base().clone() }, classes))
}

/// The n + 1 edge-disjoint K_n parts of T(K_n), as object tuples.
#[pyfunction]
fn tkn_parts(py: Python<'_>, n: usize) -> PyResult<Py<PyAny>> {
    let base = FamilySpec::Complete { n }.generate().map_err(value_err)?;
    let parts = cons::tkn_parts(n).map_err(value_err)?;
    classes_to_py(py, &base, &parts)
}

/// The swap automorphism phi_i of T(K_n) as (object, image) pairs.
#[pyfunction]
fn tkn_automorphism(py: Python<'_>, n: usize, i: usize) -> PyResult<Vec<(Py<PyAny>, Py<PyAny>)>> {
    let (total, perm) = cons::tkn_automorphism(n, i).map_err(value_err)?;
    (0..total.order())
        .map(|idx| {
            Ok((
                obj_to_py(py, total.base(), total.object(idx))?,
                obj_to_py(py, total.base(), total.object(perm[idx]))?,
            ))
        })
        .collect()
}

#[pymodule]
fn tdtc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<SolveResult>()?;
    m.add_class::<VerifyReport>()?;
    m.add_function(wrap_pyfunction!(formula, m)?)?;
    m.add_function(wrap_pyfunction!(check_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(wheel_tdtc, m)?)?;
    m.add_function(wrap_pyfunction!(bipartite_tdtc, m)?)?;
    m.add_function(wrap_pyfunction!(complete_tdtc_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_order_n, m)?)?;
    m.add_function(wrap_pyfunction!(tkn_parts, m)?)?;
    m.add_function(wrap_pyfunction!(tkn_automorphism, m)?)?;
    Ok(())
}
