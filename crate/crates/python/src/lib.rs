//! Python bindings: `import ordlab`.

use std::cmp::Ordering;

use ordlab::formula::{self, Formula, Style};
use ordlab::notation::{self, PredicateExpr, Presentation};
use ordlab::ordinal::{enumerate_terms, parse_ordinal};
use ordlab::theory::{self, Engine};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    ordlab,
    OrdlabError,
    PyValueError,
    "Domain error raised by ordlab."
);

fn err(e: impl std::fmt::Display) -> PyErr {
    OrdlabError::new_err(e.to_string())
}

/// An ordinal below Γ₀ in Veblen normal form.
#[pyclass(
    name = "Ordinal",
    module = "ordlab",
    frozen,
    eq,
    ord,
    hash,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyOrdinal(ordlab::Ordinal);

impl std::fmt::Display for PyOrdinal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Accepts an `Ordinal`, a non-negative int or ordinal text.
fn to_ordinal(obj: &Bound<'_, PyAny>) -> PyResult<ordlab::Ordinal> {
    if let Ok(o) = obj.cast::<PyOrdinal>() {
        return Ok(o.get().0.clone());
    }
    if let Ok(n) = obj.extract::<u64>() {
        return Ok(ordlab::Ordinal::nat(n));
    }
    let text: String = obj.extract()?;
    parse_ordinal(&text).map_err(err)
}

#[pymethods]
impl PyOrdinal {
    #[new]
    fn new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        to_ordinal(value).map(PyOrdinal)
    }

    #[staticmethod]
    fn omega() -> Self {
        PyOrdinal(ordlab::Ordinal::omega())
    }

    #[staticmethod]
    fn epsilon_zero() -> Self {
        PyOrdinal(ordlab::Ordinal::epsilon_zero())
    }

    /// φ(index, arg).
    #[staticmethod]
    fn veblen(index: &Bound<'_, PyAny>, arg: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyOrdinal(ordlab::Ordinal::veblen(
            &to_ordinal(index)?,
            &to_ordinal(arg)?,
        )))
    }

    /// Canonical terms with at most `max_nodes` atoms, in increasing order.
    #[staticmethod]
    #[pyo3(signature = (max_nodes, cap = ordlab::ordinal::DEFAULT_ENUMERATION_CAP))]
    fn enumerate(max_nodes: usize, cap: usize) -> PyResult<Vec<Self>> {
        let terms = enumerate_terms(max_nodes, cap).map_err(err)?;
        Ok(terms.into_iter().map(PyOrdinal).collect())
    }

    fn __repr__(&self) -> String {
        format!("Ordinal('{}')", self.0)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        let rhs = to_ordinal(other)?;
        self.0
            .checked_add(&rhs)
            .map(PyOrdinal)
            .ok_or_else(|| err("coefficient overflow"))
    }

    fn __mul__(&self, n: u64) -> PyResult<Self> {
        self.0
            .checked_mul_nat(n)
            .map(PyOrdinal)
            .ok_or_else(|| err("coefficient overflow"))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn node_count(&self) -> u64 {
        self.0.node_count()
    }

    /// ω raised to this ordinal.
    fn omega_pow(&self) -> Self {
        PyOrdinal(self.0.omega_pow())
    }

    /// The least φ_index value strictly above this ordinal.
    fn next_phi_value(&self, index: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyOrdinal(self.0.next_phi_value(&to_ordinal(index)?)))
    }

    /// The gamma-th φ_index value above this ordinal, counting from zero.
    fn phi_plus_iter(&self, index: &Bound<'_, PyAny>, gamma: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyOrdinal(
            self.0
                .phi_plus_iter(&to_ordinal(index)?, &to_ordinal(gamma)?),
        ))
    }
}

/// A worm: a word over the naturals.
#[pyclass(
    name = "Worm",
    module = "ordlab",
    frozen,
    eq,
    hash,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWorm(ordlab::Worm);

impl std::fmt::Display for PyWorm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyWorm {
    /// From a list of letters or worm text such as `"1 0 1"`.
    #[new]
    fn new(letters: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(text) = letters.extract::<String>() {
            return text.parse().map(PyWorm).map_err(err);
        }
        Ok(PyWorm(ordlab::Worm::new(letters.extract()?)))
    }

    #[staticmethod]
    fn of_ordinal(alpha: &Bound<'_, PyAny>) -> PyResult<Self> {
        ordlab::Worm::of_ordinal(&to_ordinal(alpha)?)
            .map(PyWorm)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Worm('{}')", self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    #[getter]
    fn letters(&self) -> Vec<u32> {
        self.0.letters().to_vec()
    }

    fn ordinal(&self) -> PyOrdinal {
        PyOrdinal(self.0.ordinal())
    }

    fn lift(&self, k: u32) -> PyResult<Self> {
        self.0.lift(k).map(PyWorm).map_err(err)
    }

    fn drop(&self) -> PyResult<Self> {
        self.0.drop().map(PyWorm).map_err(err)
    }

    fn theory(&self) -> PyTheory {
        PyTheory(self.0.theory())
    }

    /// -1, 0 or 1 according to the order of the worms' ordinals.
    fn compare(&self, other: &PyWorm) -> i8 {
        match self.0.compare(&other.0) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }
}

/// A theory built from EA+ or PA by iterated reflection.
#[pyclass(
    name = "Theory",
    module = "ordlab",
    frozen,
    eq,
    hash,
    str,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTheory(ordlab::TheoryExpr);

impl std::fmt::Display for PyTheory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn theory_of(text: &str) -> PyResult<ordlab::TheoryExpr> {
    let text = text.trim();
    if text.starts_with('(') {
        text.parse().map_err(err)
    } else {
        theory::catalog_lookup(text).map_err(err)
    }
}

#[pymethods]
impl PyTheory {
    /// From s-expression text such as `"(rfn 2 1 EA+)"` or a catalog name.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        theory_of(text).map(PyTheory)
    }

    /// Names and theories in the shipped catalog.
    #[staticmethod]
    fn catalog() -> Vec<(String, PyTheory)> {
        theory::Catalog::shipped()
            .entries()
            .iter()
            .map(|(name, t)| (name.clone(), PyTheory(t.clone())))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Theory('{}')", self.0)
    }

    fn pi_ordinal(&self, k: u32) -> PyResult<PyOrdinal> {
        theory::pi_ordinal(&self.0, k).map(PyOrdinal).map_err(err)
    }

    fn reduce_to_level(&self, k: u32) -> PyResult<PyTheory> {
        theory::reduce_to_level(&self.0, k)
            .map(PyTheory)
            .map_err(err)
    }

    /// Names of the rules a reduction to level k applies.
    fn reduction_trace(&self, k: u32) -> PyResult<Vec<String>> {
        Ok(Engine::shipped().reduce(&self.0, k).map_err(err)?.steps)
    }

    fn progression_stage(&self, alpha: &Bound<'_, PyAny>) -> PyResult<PyTheory> {
        theory::progression_stage(&self.0, &to_ordinal(alpha)?)
            .map(PyTheory)
            .map_err(err)
    }
}

/// φ⁺_{1+α}(β).
#[pyfunction]
fn omega_model_dilator(alpha: &Bound<'_, PyAny>, beta: &Bound<'_, PyAny>) -> PyResult<PyOrdinal> {
    Ok(PyOrdinal(theory::omega_model_dilator(
        &to_ordinal(alpha)?,
        &to_ordinal(beta)?,
    )))
}

fn presentation(predicate: &str) -> PyResult<Presentation> {
    let p: PredicateExpr = predicate.parse().map_err(err)?;
    Ok(Presentation::kreisel(p))
}

/// Whether a precedes b in the presentation of ω gated on the predicate.
#[pyfunction]
fn kreisel_less(predicate: &str, a: u64, b: u64) -> PyResult<bool> {
    Ok(presentation(predicate)?.less(a, b))
}

#[pyfunction]
fn check_ascending(predicate: &str, n: u64) -> PyResult<bool> {
    Ok(notation::check_ascending(&presentation(predicate)?, n))
}

#[pyfunction]
fn find_descending(predicate: &str, fuel: u64) -> PyResult<Option<Vec<u64>>> {
    Ok(notation::find_descending(&presentation(predicate)?, fuel))
}

#[pyfunction]
fn audit<'py>(py: Python<'py>, predicate: &str, n: u64) -> PyResult<Bound<'py, PyDict>> {
    let r = notation::audit(&presentation(predicate)?, n);
    let d = PyDict::new(py);
    d.set_item("predicate", &r.predicate)?;
    d.set_item("window", r.window)?;
    d.set_item("counterexamples", r.counterexamples)?;
    d.set_item("least_counterexample", r.least_counterexample)?;
    d.set_item("descents", r.descents)?;
    d.set_item("standard_prefix", r.standard_prefix)?;
    d.set_item("predicate_total_below", r.predicate_total_below)?;
    d.set_item("equivalent", r.equivalent())?;
    Ok(d)
}

fn formula_arg(text: &str) -> PyResult<Formula> {
    match text.trim() {
        "true" | "⊤" | "T" => Ok(Formula::Verum),
        name => Formula::hole(name).map_err(err),
    }
}

fn style(ascii: bool) -> Style {
    if ascii {
        Style::Ascii
    } else {
        Style::Unicode
    }
}

#[pyfunction]
#[pyo3(signature = (phi = "phi", ascii = false))]
fn slowcon(phi: &str, ascii: bool) -> PyResult<String> {
    let f = formula::slowcon(&formula_arg(phi)?).map_err(err)?;
    Ok(f.pretty(style(ascii)))
}

#[pyfunction]
#[pyo3(signature = (phi = "phi", ascii = false))]
fn sv(phi: &str, ascii: bool) -> PyResult<String> {
    let f = formula::sv(&formula_arg(phi)?).map_err(err)?;
    Ok(f.pretty(style(ascii)))
}

#[pyfunction]
#[pyo3(signature = (phi = "phi", psi = "psi", ascii = false))]
fn sv_star(phi: &str, psi: &str, ascii: bool) -> PyResult<String> {
    let f = formula::sv_star(&formula_arg(phi)?, &formula_arg(psi)?).map_err(err)?;
    Ok(f.pretty(style(ascii)))
}

#[pyfunction]
#[pyo3(signature = (phi = "phi", psi = "psi", theta = "theta", ascii = false))]
fn rosser_combination(phi: &str, psi: &str, theta: &str, ascii: bool) -> PyResult<String> {
    let f =
        formula::rosser_combination(&formula_arg(phi)?, &formula_arg(psi)?, &formula_arg(theta)?);
    Ok(f.pretty(style(ascii)))
}

#[pyfunction]
#[pyo3(signature = (alpha = "alpha", theory = "T", ascii = false))]
fn con_star_equation(alpha: &str, theory: &str, ascii: bool) -> PyResult<String> {
    formula::con_star_equation(alpha, theory, style(ascii)).map_err(err)
}

#[pymodule]
#[pyo3(name = "ordlab")]
fn ordlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("OrdlabError", m.py().get_type::<OrdlabError>())?;
    m.add_class::<PyOrdinal>()?;
    m.add_class::<PyWorm>()?;
    m.add_class::<PyTheory>()?;
    m.add_function(wrap_pyfunction!(omega_model_dilator, m)?)?;
    m.add_function(wrap_pyfunction!(kreisel_less, m)?)?;
    m.add_function(wrap_pyfunction!(check_ascending, m)?)?;
    m.add_function(wrap_pyfunction!(find_descending, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add_function(wrap_pyfunction!(slowcon, m)?)?;
    m.add_function(wrap_pyfunction!(sv, m)?)?;
    m.add_function(wrap_pyfunction!(sv_star, m)?)?;
    m.add_function(wrap_pyfunction!(rosser_combination, m)?)?;
    m.add_function(wrap_pyfunction!(con_star_equation, m)?)?;
    Ok(())
}
