//! Python bindings. Facets cross the boundary as lists of integers: sorted
//! subsets for the Gale order, tuples for the configuration order.

use std::fmt::Display;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use shellings::bruhat;
use shellings::cli::dot::export_dot;
use shellings::cli::format::{parse_input, serialize_sequence, Parsed};
use shellings::cli::suites::{run_suite, Suite, SuiteConfig};
use shellings::matroid;
use shellings::promotion::{self, graph_of};
use shellings::shelling;
use shellings::subdivision;
use shellings::{FacetSequence, FlagTuple, GraphKind, KSubset, OrderKind};

type Facets = Vec<Vec<usize>>;

fn value_error(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn subsets(n: usize, facets: &[Vec<usize>]) -> PyResult<FacetSequence<KSubset>> {
    let items = facets
        .iter()
        .map(|f| KSubset::new(n, f))
        .collect::<Result<Vec<_>, _>>()
        .map_err(value_error)?;
    FacetSequence::new(items).map_err(value_error)
}

fn tuples(n: usize, facets: &[Vec<usize>]) -> PyResult<FacetSequence<FlagTuple>> {
    let items = facets
        .iter()
        .map(|f| FlagTuple::new(n, f))
        .collect::<Result<Vec<_>, _>>()
        .map_err(value_error)?;
    FacetSequence::new(items).map_err(value_error)
}

fn subset_lists(items: &[KSubset]) -> Facets {
    items.iter().map(KSubset::members).collect()
}

fn tuple_lists(items: &[FlagTuple]) -> Facets {
    items.iter().map(FlagTuple::entries).collect()
}

fn order_kind(order: &str) -> PyResult<OrderKind> {
    match order {
        "gale" => Ok(OrderKind::Gale),
        "conf" => Ok(OrderKind::Conf),
        "perm" => Ok(OrderKind::Perm),
        _ => Err(PyValueError::new_err(format!(
            "unknown order {order:?}; expected gale, conf or perm"
        ))),
    }
}

fn graph_kind(graph: &str, order: OrderKind) -> PyResult<GraphKind> {
    match graph {
        "dual" => Ok(GraphKind::Dual),
        "hasse" => Ok(GraphKind::Hasse(order)),
        _ => Err(PyValueError::new_err(format!(
            "unknown graph {graph:?}; expected dual or hasse"
        ))),
    }
}

/// Runs `f` on subsets for the Gale order and on tuples otherwise.
macro_rules! by_order {
    ($n:expr, $facets:expr, $order:expr, |$c:ident| $body:expr) => {
        match order_kind($order)? {
            OrderKind::Gale => {
                let $c = subsets($n, &$facets)?;
                $body
            }
            _ => {
                let $c = tuples($n, &$facets)?;
                $body
            }
        }
    };
}

trait Lists {
    fn lists(&self) -> Facets;
}

impl Lists for FacetSequence<KSubset> {
    fn lists(&self) -> Facets {
        subset_lists(self.items())
    }
}

impl Lists for FacetSequence<FlagTuple> {
    fn lists(&self) -> Facets {
        tuple_lists(self.items())
    }
}

#[pyfunction]
fn gale_leq(n: usize, a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
    let (a, b) = (
        KSubset::new(n, &a).map_err(value_error)?,
        KSubset::new(n, &b).map_err(value_error)?,
    );
    bruhat::gale_leq(&a, &b).map_err(value_error)
}

#[pyfunction]
fn conf_leq(n: usize, x: Vec<usize>, y: Vec<usize>) -> PyResult<bool> {
    let (x, y) = (
        FlagTuple::new(n, &x).map_err(value_error)?,
        FlagTuple::new(n, &y).map_err(value_error)?,
    );
    bruhat::conf_leq(&x, &y).map_err(value_error)
}

#[pyfunction]
fn perm_leq(u: Vec<usize>, v: Vec<usize>) -> PyResult<bool> {
    let n = u.len();
    let (u, v) = (
        FlagTuple::new(n, &u).map_err(value_error)?,
        FlagTuple::new(n, &v).map_err(value_error)?,
    );
    bruhat::perm_leq(&u, &v).map_err(value_error)
}

/// Sorted facets in canonical order.
#[pyfunction]
fn canonical(n: usize, facets: Facets) -> PyResult<Facets> {
    Ok(subset_lists(subsets(n, &facets)?.support().facets()))
}

#[pyfunction]
fn is_shelling_order(n: usize, facets: Facets) -> PyResult<bool> {
    Ok(shelling::is_shelling_order(&subsets(n, &facets)?))
}

/// The first pair `(i, j)` without a certificate, or `None` for a shelling.
#[pyfunction]
fn shelling_failure(n: usize, facets: Facets) -> PyResult<Option<(usize, usize)>> {
    Ok(shelling::shelling_witness(&subsets(n, &facets)?)
        .err()
        .map(|f| (f.i, f.j)))
}

#[pyfunction]
fn is_flag_shelling_order(n: usize, facets: Facets) -> PyResult<bool> {
    Ok(subdivision::is_flag_shelling_order(&tuples(n, &facets)?))
}

#[pyfunction]
fn find_shelling_order(n: usize, facets: Facets) -> PyResult<Option<Facets>> {
    let x = subsets(n, &facets)?.support();
    Ok(shelling::find_shelling_order(&x).map(|c| c.lists()))
}

#[pyfunction]
fn are_isomorphic(n: usize, a: Facets, b: Facets) -> PyResult<bool> {
    shelling::are_isomorphic(&subsets(n, &a)?, &subsets(n, &b)?).map_err(value_error)
}

#[pyfunction]
fn is_matroid(n: usize, facets: Facets) -> PyResult<bool> {
    Ok(matroid::is_matroid(&subsets(n, &facets)?.support()).holds)
}

#[pyfunction]
fn has_quasi_exchange(n: usize, facets: Facets) -> PyResult<bool> {
    Ok(matroid::has_quasi_exchange(&subsets(n, &facets)?.support()).holds)
}

#[pyfunction]
#[pyo3(signature = (n, facets, order = "gale"))]
fn is_coxeter_matroid(n: usize, facets: Facets, order: &str) -> PyResult<bool> {
    let kind = order_kind(order)?;
    by_order!(n, facets, order, |c| matroid::is_coxeter_matroid(
        &c.support(),
        kind
    )
    .map_err(value_error))
}

#[pyfunction]
#[pyo3(signature = (n, facets, order = "gale"))]
fn is_order_ideal(n: usize, facets: Facets, order: &str) -> PyResult<bool> {
    let kind = order_kind(order)?;
    by_order!(n, facets, order, |c| bruhat::is_order_ideal(
        &c.support(),
        kind
    )
    .map_err(value_error))
}

#[pyfunction]
#[pyo3(signature = (n, facets, order = "gale"))]
fn is_linear_extension(n: usize, facets: Facets, order: &str) -> PyResult<bool> {
    let kind = order_kind(order)?;
    by_order!(n, facets, order, |c| bruhat::is_linear_extension(
        &c,
        &c.support(),
        kind
    )
    .map_err(value_error))
}

#[pyfunction]
#[pyo3(signature = (n, facets, order = "gale", limit = None))]
fn linear_extensions(
    n: usize,
    facets: Facets,
    order: &str,
    limit: Option<usize>,
) -> PyResult<Vec<Facets>> {
    let kind = order_kind(order)?;
    let limit = limit.unwrap_or(usize::MAX);
    by_order!(n, facets, order, |c| Ok(bruhat::linear_extensions(
        &c.support(),
        kind
    )
    .map_err(value_error)?
    .take(limit)
    .map(|l| l.lists())
    .collect()))
}

#[pyfunction]
fn barycentric(n: usize, facets: Facets) -> PyResult<Facets> {
    let b = subdivision::barycentric(&subsets(n, &facets)?.support()).map_err(value_error)?;
    Ok(tuple_lists(b.facets()))
}

/// Edges `(i, j)`, `i < j`, of the dual or Hasse graph on positions.
#[pyfunction]
#[pyo3(signature = (n, facets, graph = "dual", order = "gale"))]
fn graph_edges(
    n: usize,
    facets: Facets,
    graph: &str,
    order: &str,
) -> PyResult<Vec<(usize, usize)>> {
    let kind = graph_kind(graph, order_kind(order)?)?;
    by_order!(n, facets, order, |c| Ok(graph_of(&c, kind)
        .map_err(value_error)?
        .edges()))
}

#[pyfunction]
#[pyo3(signature = (n, facets, graph = "dual", order = "gale"))]
fn track(n: usize, facets: Facets, graph: &str, order: &str) -> PyResult<Vec<usize>> {
    let kind = graph_kind(graph, order_kind(order)?)?;
    by_order!(n, facets, order, |c| Ok(promotion::track(
        &graph_of(&c, kind).map_err(value_error)?
    )
    .vertices()
    .to_vec()))
}

#[pyfunction]
#[pyo3(signature = (n, facets, graph = "dual", order = "gale"))]
fn promotion_permutation(
    n: usize,
    facets: Facets,
    graph: &str,
    order: &str,
) -> PyResult<Vec<usize>> {
    let kind = graph_kind(graph, order_kind(order)?)?;
    by_order!(n, facets, order, |c| Ok(promotion::promotion_permutation(
        &graph_of(&c, kind).map_err(value_error)?
    )
    .one_line()
    .to_vec()))
}

#[pyfunction]
#[pyo3(signature = (n, facets, graph = "dual", order = "gale"))]
fn promote(n: usize, facets: Facets, graph: &str, order: &str) -> PyResult<Facets> {
    let kind = graph_kind(graph, order_kind(order)?)?;
    by_order!(n, facets, order, |c| Ok(promotion::promote(&c, kind)
        .map_err(value_error)?
        .lists()))
}

#[pyfunction]
#[pyo3(signature = (n, facets, graph = "dual", order = "gale"))]
fn evacuate(n: usize, facets: Facets, graph: &str, order: &str) -> PyResult<Facets> {
    let kind = graph_kind(graph, order_kind(order)?)?;
    by_order!(n, facets, order, |c| Ok(promotion::evacuate(&c, kind)
        .map_err(value_error)?
        .lists()))
}

#[pyfunction]
#[pyo3(signature = (n, facets, graph = "dual", order = "gale"))]
fn to_dot(n: usize, facets: Facets, graph: &str, order: &str) -> PyResult<String> {
    let kind = graph_kind(graph, order_kind(order)?)?;
    by_order!(n, facets, order, |c| export_dot(&c, kind)
        .map_err(value_error))
}

/// Parses facet-file text into `(n, mode, facets)`.
#[pyfunction]
fn parse(text: &str) -> PyResult<(usize, String, Facets)> {
    Ok(match parse_input(text).map_err(value_error)? {
        Parsed::Subsets(c) => (c.universe(), "sorted".into(), c.lists()),
        Parsed::Tuples(c) => (c.universe(), "tuple".into(), c.lists()),
    })
}

#[pyfunction]
#[pyo3(signature = (n, facets, mode = "sorted"))]
fn serialize(n: usize, facets: Facets, mode: &str) -> PyResult<String> {
    match mode {
        "sorted" => Ok(serialize_sequence(&subsets(n, &facets)?)),
        "tuple" => Ok(serialize_sequence(&tuples(n, &facets)?)),
        _ => Err(PyValueError::new_err(format!(
            "unknown mode {mode:?}; expected sorted or tuple"
        ))),
    }
}

/// Runs a verification suite and returns its report as a dict.
#[pyfunction]
#[pyo3(signature = (suite, n = None, k = None, max_facets = 5, samples = 1000, seed = 0, jobs = 0))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    n: Option<usize>,
    k: Option<usize>,
    max_facets: usize,
    samples: usize,
    seed: u64,
    jobs: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let suite = Suite::ALL
        .into_iter()
        .find(|s| s.name() == suite)
        .ok_or_else(|| PyValueError::new_err(format!("unknown suite {suite:?}")))?;
    let mut cfg = SuiteConfig::new(suite);
    cfg.n = n.unwrap_or(cfg.n);
    cfg.k = k.unwrap_or(cfg.k);
    (cfg.max_facets, cfg.samples, cfg.seed, cfg.jobs) = (max_facets, samples, seed, jobs);
    let report = py.detach(|| run_suite(suite, &cfg)).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("suite", suite.name())?;
    d.set_item("instances", report.instances)?;
    d.set_item("checks", report.checks)?;
    d.set_item("passed", report.passed)?;
    d.set_item("failed", report.failed)?;
    d.set_item("counterexample", report.counterexample)?;
    d.set_item("elapsed", report.elapsed.as_secs_f64())?;
    Ok(d)
}

#[pymodule(name = "shellings")]
pub fn shellings_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(gale_leq, m)?)?;
    m.add_function(wrap_pyfunction!(conf_leq, m)?)?;
    m.add_function(wrap_pyfunction!(perm_leq, m)?)?;
    m.add_function(wrap_pyfunction!(canonical, m)?)?;
    m.add_function(wrap_pyfunction!(is_shelling_order, m)?)?;
    m.add_function(wrap_pyfunction!(shelling_failure, m)?)?;
    m.add_function(wrap_pyfunction!(is_flag_shelling_order, m)?)?;
    m.add_function(wrap_pyfunction!(find_shelling_order, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(is_matroid, m)?)?;
    m.add_function(wrap_pyfunction!(has_quasi_exchange, m)?)?;
    m.add_function(wrap_pyfunction!(is_coxeter_matroid, m)?)?;
    m.add_function(wrap_pyfunction!(is_order_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(is_linear_extension, m)?)?;
    m.add_function(wrap_pyfunction!(linear_extensions, m)?)?;
    m.add_function(wrap_pyfunction!(barycentric, m)?)?;
    m.add_function(wrap_pyfunction!(graph_edges, m)?)?;
    m.add_function(wrap_pyfunction!(track, m)?)?;
    m.add_function(wrap_pyfunction!(promotion_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(promote, m)?)?;
    m.add_function(wrap_pyfunction!(evacuate, m)?)?;
    m.add_function(wrap_pyfunction!(to_dot, m)?)?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(serialize, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
