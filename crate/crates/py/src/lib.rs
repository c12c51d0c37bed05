//! Python bindings for the EF-game depth toolkit.

use efdepth_core::cert;
use efdepth_core::game;
use efdepth_core::graph;
use efdepth_core::logic;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use std::collections::HashMap;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn game_err(e: game::GameError) -> PyErr {
    match e {
        game::GameError::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn cert_err(e: cert::CertError) -> PyErr {
    match e {
        cert::CertError::Game(game::GameError::BudgetExceeded { .. }) => {
            PyRuntimeError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

/// A finite simple undirected graph on 0-indexed vertices.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: graph::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: graph::Graph::build(n, &edges).map_err(value_err)?,
        })
    }

    /// Decode a graph6 string.
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: graph::decode(text.trim().as_bytes(), graph::GraphFormat::Graph6)
                .map_err(value_err)?,
        })
    }

    /// Decode edge-list text (`n <N>` then `e <u> <v>` lines).
    #[staticmethod]
    fn from_edgelist(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: graph::decode(text.as_bytes(), graph::GraphFormat::EdgeList)
                .map_err(value_err)?,
        })
    }

    /// Generate a family graph from a spec like "cycle(5)".
    #[staticmethod]
    fn generate(spec: &str) -> PyResult<Self> {
        let target: graph::GenTarget = spec.parse().map_err(value_err)?;
        match target {
            graph::GenTarget::Family(f) => Ok(Graph {
                inner: graph::generate(&f).map_err(value_err)?,
            }),
            graph::GenTarget::Instance(_) => Err(PyValueError::new_err(
                "instance specs produce bundles; use gen_instance()",
            )),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        if u >= self.inner.n() || v >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.has_edge(u, v))
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.degree(v))
    }

    fn complement(&self) -> Graph {
        Graph {
            inner: self.inner.complement(),
        }
    }

    fn union(&self, other: &Graph) -> PyResult<Graph> {
        Ok(Graph {
            inner: self.inner.union(&other.inner).map_err(value_err)?,
        })
    }

    fn copies(&self, m: usize) -> PyResult<Graph> {
        Ok(Graph {
            inner: self.inner.copies(m).map_err(value_err)?,
        })
    }

    fn to_graph6(&self) -> PyResult<String> {
        let bytes = graph::encode(&self.inner, graph::GraphFormat::Graph6).map_err(value_err)?;
        Ok(String::from_utf8(bytes).expect("graph6 is ASCII"))
    }

    fn to_edgelist(&self) -> PyResult<String> {
        let bytes = graph::encode(&self.inner, graph::GraphFormat::EdgeList).map_err(value_err)?;
        Ok(String::from_utf8(bytes).expect("edge lists are ASCII"))
    }

    /// Canonical form (graph6 of the canonical labeling); equal iff
    /// isomorphic.
    fn canonical_form(&self) -> PyResult<String> {
        let bytes = graph::canonicalize(&self.inner).map_err(value_err)?;
        Ok(String::from_utf8(bytes).expect("graph6 is ASCII"))
    }

    fn is_isomorphic(&self, other: &Graph) -> bool {
        graph::is_isomorphic(&self.inner, &other.inner)
    }

    fn chromatic_number(&self) -> PyResult<usize> {
        graph::chromatic_number(&self.inner).map_err(value_err)
    }

    /// Witness map embedding `pattern` as an induced subgraph, or None.
    fn contains_induced(&self, pattern: &Graph) -> Option<Vec<usize>> {
        graph::contains_induced(&self.inner, &pattern.inner)
    }

    fn automorphism_orbits(&self) -> Vec<Vec<usize>> {
        graph::automorphism_orbits(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }
}

/// A first-order sentence / formula over the graph signature.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Formula {
    inner: logic::Formula,
}

#[pymethods]
impl Formula {
    /// Parse formula text such as "Ex.Ey.(x~y)".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Formula {
            inner: logic::parse(text).map_err(value_err)?,
        })
    }

    #[getter]
    fn depth(&self) -> usize {
        self.inner.quantifier_depth()
    }

    fn text(&self) -> String {
        logic::print(&self.inner)
    }

    /// Evaluate on a graph; free variables come from `env`.
    #[pyo3(signature = (graph, env = None))]
    fn evaluate(&self, graph: &Graph, env: Option<HashMap<String, usize>>) -> PyResult<bool> {
        let mut assignment = logic::Assignment::new();
        if let Some(env) = env {
            let mut pairs: Vec<_> = env.into_iter().collect();
            pairs.sort();
            for (var, vertex) in pairs {
                assignment = assignment.bind(var, vertex);
            }
        }
        logic::evaluate(&self.inner, &graph.inner, &assignment).map_err(value_err)
    }

    /// Rewrite adjacency atoms so the result holds on G iff self holds on
    /// the complement of G.
    fn complement_transform(&self) -> Formula {
        Formula {
            inner: logic::complement_transform(&self.inner),
        }
    }

    fn __repr__(&self) -> String {
        format!("Formula({})", logic::print(&self.inner))
    }

    fn __str__(&self) -> String {
        logic::print(&self.inner)
    }

    fn __eq__(&self, other: &Formula) -> bool {
        self.inner == other.inner
    }
}

/// A named registry instance: pattern, host pair, and round count.
#[pyclass(frozen, skip_from_py_object)]
struct Instance {
    #[pyo3(get)]
    name: String,
    #[pyo3(get)]
    pattern: Py<Graph>,
    #[pyo3(get)]
    positive: Py<Graph>,
    #[pyo3(get)]
    negative: Py<Graph>,
    #[pyo3(get)]
    rounds: usize,
}

/// Build a registry instance from a spec like "thm1_2(2)" or "thm3_c5".
#[pyfunction]
fn gen_instance(py: Python<'_>, spec: &str) -> PyResult<Instance> {
    let target: graph::GenTarget = spec.parse().map_err(value_err)?;
    let graph::GenTarget::Instance(inst) = target else {
        return Err(PyValueError::new_err(
            "family specs produce single graphs; use Graph.generate()",
        ));
    };
    let bundle = graph::gen_instance(&inst).map_err(value_err)?;
    Ok(Instance {
        name: bundle.name,
        pattern: Py::new(py, Graph { inner: bundle.pattern })?,
        positive: Py::new(py, Graph { inner: bundle.positive })?,
        negative: Py::new(py, Graph { inner: bundle.negative })?,
        rounds: bundle.rounds,
    })
}

/// The depth-v(F) sentence for "contains an induced copy of the pattern".
#[pyfunction]
fn synth_trivial(pattern: &Graph) -> Formula {
    Formula {
        inner: logic::synth_trivial(&pattern.inner),
    }
}

/// The depth-(v(H)+3) sentence for "contains P3 + K1 + H".
#[pyfunction]
fn synth_thm11(extension: &Graph) -> Formula {
    Formula {
        inner: logic::synth_thm11(&extension.inner),
    }
}

/// Winner ("spoiler" or "duplicator") of the r-round game.
#[pyfunction]
#[pyo3(signature = (left, right, rounds, budget = None))]
fn solve(left: &Graph, right: &Graph, rounds: usize, budget: Option<u64>) -> PyResult<String> {
    let outcome = game::solve_with_budget(
        &left.inner,
        &right.inner,
        rounds,
        budget.unwrap_or(game::DEFAULT_NODE_BUDGET),
    )
    .map_err(game_err)?;
    Ok(outcome.winner.to_string())
}

/// A depth-<=r sentence true on `left`, false on `right`; raises if the
/// Duplicator wins.
#[pyfunction]
fn extract_distinguishing(left: &Graph, right: &Graph, rounds: usize) -> PyResult<Formula> {
    Ok(Formula {
        inner: game::extract_distinguishing(&left.inner, &right.inner, rounds)
            .map_err(game_err)?,
    })
}

/// Exhaustively verify the scripted policy for an instance spec; returns
/// (ok, counterexample_transcript).
#[pyfunction]
fn verify_policy(spec: &str) -> PyResult<(bool, Option<String>)> {
    let target: graph::GenTarget = spec.parse().map_err(value_err)?;
    let graph::GenTarget::Instance(inst) = target else {
        return Err(PyValueError::new_err("expected an instance spec"));
    };
    let policy = game::scripted_policy(&inst).map_err(game_err)?;
    let bundle = graph::gen_instance(&inst).map_err(value_err)?;
    let (ok, cex) = game::verify_policy(
        &bundle.positive,
        &bundle.negative,
        bundle.rounds,
        policy.as_ref(),
    );
    Ok((ok, cex.map(|t| t.to_string())))
}

/// Verified lower-bound certificate as a JSON string; raises ValueError
/// with the rejection reason otherwise.
#[pyfunction]
fn certify_lower(pattern: &Graph, left: &Graph, right: &Graph, rounds: usize) -> PyResult<String> {
    let cert = cert::certify_lower(&pattern.inner, &left.inner, &right.inner, rounds)
        .map_err(cert_err)?;
    Ok(cert.to_json())
}

/// Certificate JSON plus an optional counterexample graph for a formula
/// checked against brute force up to `max_n` vertices.
#[pyfunction]
fn certify_upper(
    pattern: &Graph,
    formula: &Formula,
    max_n: usize,
) -> PyResult<(String, Option<Graph>)> {
    let (cert, cex) =
        cert::certify_upper(&pattern.inner, &formula.inner, max_n).map_err(cert_err)?;
    Ok((cert.to_json(), cex.map(|g| Graph { inner: g })))
}

/// The arithmetic lower bound (real maximum, integer ceiling).
#[pyfunction]
#[pyo3(signature = (pattern, use_complement = false))]
fn general_lower_bound(pattern: &Graph, use_complement: bool) -> PyResult<(f64, usize)> {
    cert::general_lower_bound(&pattern.inner, use_complement).map_err(cert_err)
}

/// One canonical representative per isomorphism class on exactly n vertices.
#[pyfunction]
fn enumerate_up_to_iso(n: usize) -> PyResult<Vec<Graph>> {
    Ok(graph::enumerate_up_to_iso(n)
        .map_err(value_err)?
        .into_iter()
        .map(|g| Graph { inner: g })
        .collect())
}

/// Search host pairs up to `max_n` vertices for a lower-bound certificate;
/// returns (certificate_json_or_None, budget_exhausted, games_solved).
#[pyfunction]
fn search_pair(
    pattern: &Graph,
    rounds: usize,
    max_n: usize,
    budget: u64,
) -> PyResult<(Option<String>, bool, u64)> {
    let out = cert::search_pair(&pattern.inner, rounds, max_n, budget).map_err(cert_err)?;
    Ok((
        out.certificate.map(|c| c.to_json()),
        out.budget_exhausted,
        out.games_solved,
    ))
}

/// Run the verification suite; returns (report_text, passed).
#[pyfunction]
#[pyo3(signature = (level = "core", seed = 0xefde))]
fn run_suite(level: &str, seed: u64) -> PyResult<(String, bool)> {
    let level = match level {
        "core" => cert::SuiteLevel::Core,
        "extended" => cert::SuiteLevel::Extended,
        other => return Err(PyValueError::new_err(format!("unknown level `{other}`"))),
    };
    let report = cert::run_suite(
        level,
        &cert::SuiteOptions {
            seed,
            cert_dir: None,
        },
    );
    Ok((report.to_string(), report.passed))
}

#[pymodule]
fn efdepth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Formula>()?;
    m.add_class::<Instance>()?;
    m.add_function(wrap_pyfunction!(gen_instance, m)?)?;
    m.add_function(wrap_pyfunction!(synth_trivial, m)?)?;
    m.add_function(wrap_pyfunction!(synth_thm11, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(extract_distinguishing, m)?)?;
    m.add_function(wrap_pyfunction!(verify_policy, m)?)?;
    m.add_function(wrap_pyfunction!(certify_lower, m)?)?;
    m.add_function(wrap_pyfunction!(certify_upper, m)?)?;
    m.add_function(wrap_pyfunction!(general_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_up_to_iso, m)?)?;
    m.add_function(wrap_pyfunction!(search_pair, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
