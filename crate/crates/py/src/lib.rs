//! Python bindings: generator families, exact polynomials, states of the
//! charged polynomial space, the operator calculus on them, and the
//! verification suites.
//!
//! Coefficients cross the boundary as exact `"p/q"` strings, never as
//! floats.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use jtvo_core as core;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A family of generators `h(r, k)` determining all determinants.
#[pyclass(name = "Family", frozen)]
struct PyFamily {
    inner: core::Family,
    label: String,
}

#[pymethods]
impl PyFamily {
    /// Complete functions: `h(r, k)` is `h_{k+r}` for every row shift.
    #[staticmethod]
    fn classical() -> Self {
        PyFamily {
            inner: core::Family::classical(),
            label: "classical".into(),
        }
    }

    /// Character-style generators: `h(r, k) = J_{k+r} + J_{k-r}` for
    /// positive shifts.
    #[staticmethod]
    fn lie_character() -> Self {
        PyFamily {
            inner: core::Family::lie_character(),
            label: "lie-character".into(),
        }
    }

    /// Shifted generators built from the automorphism `h*_k -> h*_k +
    /// (k-1) h*_{k-1}`.
    #[staticmethod]
    fn shifted() -> Self {
        PyFamily {
            inner: core::Family::shifted(),
            label: "shifted".into(),
        }
    }

    /// Generators obeying the ladder recursion with the given constant
    /// coefficients, each an exact rational string such as `"1"` or
    /// `"-2/3"`.
    #[staticmethod]
    fn linear_recurrence(coeffs: Vec<String>) -> PyResult<Self> {
        let parsed = coeffs
            .iter()
            .map(|s| core::parse_coeff(s))
            .collect::<core::Result<Vec<_>>>()
            .map_err(err)?;
        let label = format!("linear-recurrence({})", coeffs.join(","));
        Ok(PyFamily {
            inner: core::Family::linear_recurrence(parsed).map_err(err)?,
            label,
        })
    }

    /// The generator at row shift `r` and index `k`.
    fn h(&self, r: i64, k: i64) -> PyPoly {
        PyPoly(self.inner.h(r, k))
    }

    fn name(&self) -> &str {
        &self.label
    }

    fn __repr__(&self) -> String {
        format!("Family({})", self.label)
    }
}

/// Exact multivariate polynomial in the family's generator alphabet.
#[pyclass(name = "Poly", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPoly(core::Poly);

#[pymethods]
impl PyPoly {
    /// The zero polynomial.
    #[staticmethod]
    fn zero() -> Self {
        PyPoly(core::Poly::zero())
    }

    /// The constant polynomial one.
    #[staticmethod]
    fn one() -> Self {
        PyPoly(core::Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Total degree under `deg(tag_k) = k`, or `None` for the zero
    /// polynomial.
    fn degree(&self) -> Option<i64> {
        self.0.degree()
    }

    /// The number of monomials with nonzero coefficient.
    fn num_terms(&self) -> usize {
        self.0.num_terms()
    }

    /// JSON rendering: a list of `{"monomial": ..., "coeff": "p/q"}`.
    fn json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.0 == other.0
    }

    fn __add__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 * &other.0)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(-&self.0)
    }

    fn __pow__(&self, e: u32, modulo: Option<u32>) -> PyResult<PyPoly> {
        if modulo.is_some() {
            return Err(PyValueError::new_err("modular power is not defined"));
        }
        Ok(PyPoly(self.0.pow(e)))
    }
}

/// A linear combination of charged basis vectors `[shape@charge]`.
#[pyclass(name = "State", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyState(core::BosonState);

#[pymethods]
impl PyState {
    /// Parse a state such as `"2,1@0"` (the empty shape is `"@0"`).
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyState(text.parse().map_err(err)?))
    }

    /// The basis vector for one shape and charge.
    #[staticmethod]
    fn basis(shape: Vec<i64>, charge: i64) -> PyResult<Self> {
        let p = core::Partition::new(shape).map_err(err)?;
        Ok(PyState(core::BosonState::basis(p, charge)))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The common charge of all terms, or `None` if zero or mixed.
    fn charge(&self) -> Option<i64> {
        self.0.charge()
    }

    /// Apply an operator word such as `"psi:2,psistar:0"`; the rightmost
    /// letter acts first.
    fn apply(&self, word: &str) -> PyResult<Self> {
        let w: core::OperatorWord = word.parse().map_err(err)?;
        Ok(PyState(core::apply_word(&w, &self.0)))
    }

    /// Expand each basis vector into its polynomial for the family,
    /// ignoring charge.
    fn expand(&self, family: &PyFamily) -> PyPoly {
        PyPoly(core::expand_state(&family.inner, &self.0))
    }

    /// The terms as `(shape, charge, coeff)` triples with exact string
    /// coefficients.
    fn terms(&self) -> Vec<(Vec<i64>, i64, String)> {
        self.0
            .terms()
            .map(|(shape, m, c)| (shape.parts().to_vec(), m, c.to_string()))
            .collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }

    fn __eq__(&self, other: &PyState) -> bool {
        self.0 == other.0
    }

    fn __add__(&self, other: &PyState) -> PyState {
        let mut out = self.0.clone();
        out += &other.0;
        PyState(out)
    }

    fn __sub__(&self, other: &PyState) -> PyState {
        let mut out = self.0.clone();
        out -= &other.0;
        PyState(out)
    }
}

/// The polynomial for an arbitrary integer index vector (straightened
/// automatically, so the result may carry a sign or vanish).
#[pyfunction]
fn schur(family: &PyFamily, index: Vec<i64>) -> PyPoly {
    PyPoly(core::schur(&family.inner, &index))
}

/// The complementary determinant `e(p, a)`.
#[pyfunction]
fn elementary(family: &PyFamily, p: i64, a: i64) -> PyPoly {
    PyPoly(core::elementary(&family.inner, p, a))
}

/// The two-parameter hook polynomial.
#[pyfunction]
fn hook(family: &PyFamily, m: i64, n: i64) -> PyPoly {
    PyPoly(core::hook_schur(&family.inner, m, n))
}

/// The pairing sum of the two ladders; `"1"` on the diagonal and `"0"`
/// off it.
#[pyfunction]
fn newton_sum(family: &PyFamily, a: i64, b: i64) -> PyResult<String> {
    Ok(core::newton_sum(&family.inner, a, b)
        .map_err(err)?
        .to_string())
}

/// Straighten an index vector: returns `(sign, parts)` with sign 0 when
/// the vector collapses to zero.
#[pyfunction]
fn straighten(index: Vec<i64>) -> (i64, Vec<i64>) {
    let sp = core::straighten(&index);
    (i64::from(sp.sign), sp.shape.parts().to_vec())
}

/// Apply an operator word to a state; a convenience wrapper around
/// `State.apply`.
#[pyfunction]
fn apply_word(word: &str, state: &PyState) -> PyResult<PyState> {
    state.apply(word)
}

/// Both halves of the expansion identity for one operator index on one
/// basis vector: `(h_side_ok, e_side_ok)`.
#[pyfunction]
fn verify_prop42(family: &PyFamily, k: i64, m: i64, shape: Vec<i64>) -> PyResult<(bool, bool)> {
    let p = core::Partition::new(shape).map_err(err)?;
    Ok(core::verify_prop42(&family.inner, k, m, &p))
}

/// The names accepted by `verify_suite`.
#[pyfunction]
fn suite_names() -> Vec<&'static str> {
    core::SUITE_NAMES.to_vec()
}

/// Run one verification suite; returns a dict with `name`, `cases`,
/// `failures`, `pass`, and `counterexample`.
#[pyfunction]
#[pyo3(signature = (name, seed = 0, max_weight = None))]
fn verify_suite<'py>(
    py: Python<'py>,
    name: &str,
    seed: u64,
    max_weight: Option<i64>,
) -> PyResult<Bound<'py, PyDict>> {
    let report = core::run_named_suite(name, seed, max_weight)
        .ok_or_else(|| PyValueError::new_err(format!("unknown suite {name:?}")))?;
    let d = PyDict::new(py);
    d.set_item("name", report.name)?;
    d.set_item("cases", report.cases)?;
    d.set_item("failures", report.failures)?;
    d.set_item("pass", report.passed())?;
    d.set_item("counterexample", report.first_counterexample.clone())?;
    Ok(d)
}

#[pymodule]
fn jtvo(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFamily>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyState>()?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(elementary, m)?)?;
    m.add_function(wrap_pyfunction!(hook, m)?)?;
    m.add_function(wrap_pyfunction!(newton_sum, m)?)?;
    m.add_function(wrap_pyfunction!(straighten, m)?)?;
    m.add_function(wrap_pyfunction!(apply_word, m)?)?;
    m.add_function(wrap_pyfunction!(verify_prop42, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
