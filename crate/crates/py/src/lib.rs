use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use torelli_core::algebra::fmt_rational;
use torelli_core::colored_trees::{enumerate_with, ColoredTree, Partition};
use torelli_core::{emit, excess, invariants, lambda_ring, stargraphs};

fn err(e: torelli_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

/// A colored extremal tree.
#[pyclass(frozen, name = "Tree")]
struct PyTree {
    inner: ColoredTree,
}

#[pymethods]
impl PyTree {
    #[getter]
    fn encoding(&self) -> String {
        self.inner.encoding()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.inner.num_edges()
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.inner.num_vertices()
    }

    fn automorphism_order(&self) -> u64 {
        self.inner.automorphism_order()
    }

    fn is_irreducible(&self) -> bool {
        self.inner.is_irreducible()
    }

    /// `Cont_T`; grouped by Chern monomial when `chern_form` is set.
    #[pyo3(signature = (chern_form = false))]
    fn cont(&self, chern_form: bool) -> PyResult<String> {
        let c = excess::cont_recursive(&self.inner).map_err(err)?;
        Ok(if chern_form { c.render_chern() } else { c.poly.render() })
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tree('{}')", self.inner.encoding())
    }
}

/// A star-shaped graph of the wall-crossing formula.
#[pyclass(frozen, name = "StarGraph")]
struct PyStar {
    inner: stargraphs::StarGraph,
}

#[pymethods]
impl PyStar {
    #[getter]
    fn r(&self) -> u32 {
        self.inner.r
    }

    #[getter]
    fn g0(&self) -> u32 {
        self.inner.g0
    }

    #[getter]
    fn legs(&self) -> Vec<(u32, Vec<u32>)> {
        self.inner.legs.iter().map(|l| (l.g, l.mu.clone())).collect()
    }

    fn aut_order(&self) -> u64 {
        stargraphs::aut_order_star(&self.inner)
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!("StarGraph('{}')", self.inner)
    }
}

#[pyfunction]
#[pyo3(signature = (parts, max_edges = None))]
fn enumerate_trees(parts: Vec<u32>, max_edges: Option<usize>) -> PyResult<Vec<PyTree>> {
    let mu = partition(parts)?;
    Ok(enumerate_with(&mu, max_edges).into_iter().map(|inner| PyTree { inner }).collect())
}

#[pyfunction]
fn count_trees(parts: Vec<u32>) -> PyResult<usize> {
    Ok(enumerate_with(&partition(parts)?, None).len())
}

/// admcycles script for `Tor^*` of the product locus.
#[pyfunction]
#[pyo3(signature = (parts, dialect = "v1"))]
fn pullback_script(py: Python<'_>, parts: Vec<u32>, dialect: &str) -> PyResult<String> {
    let mu = partition(parts)?;
    let pb = py.detach(|| excess::torelli_pullback(&mu)).map_err(err)?;
    emit::emit_script(&pb.total, dialect).map_err(err)
}

#[pyfunction]
fn vanishing(parts: Vec<u32>) -> PyResult<(bool, String)> {
    let mu = partition(parts)?;
    Ok((excess::vanishing_predicate(&mu), excess::vanishing_message(&mu)))
}

#[pyfunction]
fn lambda_dims(g: u32) -> PyResult<Vec<usize>> {
    Ok(lambda_ring::LambdaBasis::build(g).map_err(err)?.dims())
}

/// Socle evaluation of a λ-polynomial such as `"l1*l2"`, as a fraction string.
#[pyfunction]
fn lambda_eval(g: u32, expr: &str) -> PyResult<String> {
    let b = lambda_ring::LambdaBasis::build(g).map_err(err)?;
    let x = lambda_ring::parse_lambda(g, expr).map_err(err)?;
    Ok(fmt_rational(&b.socle_eval(&x).map_err(err)?))
}

#[pyfunction]
fn integrate(g: u32, s: u32, monomial: &str) -> PyResult<String> {
    let x = invariants::parse_inv(s, monomial).map_err(err)?;
    Ok(fmt_rational(&invariants::integrate(g, s, &x).map_err(err)?))
}

#[pyfunction]
fn capelli_check(g: u32, s: u32) -> PyResult<bool> {
    invariants::capelli_check(g, s).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, s, solve = false))]
fn project_pr(g: u32, s: u32, solve: bool) -> PyResult<String> {
    let c = if solve {
        invariants::project_pr_solve(g, s)
    } else {
        invariants::project_pr_formula(g, s)
    };
    Ok(c.map_err(err)?.to_string())
}

#[pyfunction]
fn product_prefactor(g: u32, s: u32) -> PyResult<String> {
    Ok(fmt_rational(&invariants::product_prefactor(g, s).map_err(err)?))
}

#[pyfunction]
fn enumerate_stars(g: u32, r: u32) -> PyResult<Vec<PyStar>> {
    let s = stargraphs::enumerate_stars(g, r).map_err(err)?;
    Ok(s.into_iter().map(|inner| PyStar { inner }).collect())
}

#[pyfunction]
fn z_degree(h: u32, mu: Vec<u32>, r: u32) -> i64 {
    stargraphs::z_degree(h, &mu, r)
}

/// Coefficients of `z^0, z^1, …` of the I-function.
#[pyfunction]
fn i_function(h: u32, mu: Vec<u32>, r: u32) -> PyResult<Vec<String>> {
    let f = stargraphs::i_function(h, &mu, r).map_err(err)?;
    Ok(f.coefficients.iter().map(|c| c.render()).collect())
}

#[pyfunction]
fn blowup_component_count(k: u32) -> PyResult<u64> {
    stargraphs::blowup_component_count(k).map_err(err)
}

#[pyfunction]
fn constant(name: &str, params: Vec<i64>) -> PyResult<String> {
    Ok(match emit::constants(name, &params).map_err(err)? {
        emit::ConstValue::Scalar(x) => fmt_rational(&x),
        emit::ConstValue::Class(c, p) => format!("{} * ({})", fmt_rational(&c), p.render()),
    })
}

#[pyfunction]
fn theta_script(v: Vec<i64>, g: u32) -> PyResult<String> {
    emit::emit_script(&emit::theta_pullback(&v, g), "v1").map_err(err)
}

#[pyfunction]
fn delta_script(g: u32) -> PyResult<String> {
    emit::delta_emit(g, 1).map_err(err)
}

#[pymodule]
fn torelli(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", torelli_core::VERSION)?;
    m.add_class::<PyTree>()?;
    m.add_class::<PyStar>()?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(count_trees, m)?)?;
    m.add_function(wrap_pyfunction!(pullback_script, m)?)?;
    m.add_function(wrap_pyfunction!(vanishing, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_dims, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_eval, m)?)?;
    m.add_function(wrap_pyfunction!(integrate, m)?)?;
    m.add_function(wrap_pyfunction!(capelli_check, m)?)?;
    m.add_function(wrap_pyfunction!(project_pr, m)?)?;
    m.add_function(wrap_pyfunction!(product_prefactor, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_stars, m)?)?;
    m.add_function(wrap_pyfunction!(z_degree, m)?)?;
    m.add_function(wrap_pyfunction!(i_function, m)?)?;
    m.add_function(wrap_pyfunction!(blowup_component_count, m)?)?;
    m.add_function(wrap_pyfunction!(constant, m)?)?;
    m.add_function(wrap_pyfunction!(theta_script, m)?)?;
    m.add_function(wrap_pyfunction!(delta_script, m)?)?;
    Ok(())
}
