//! Python bindings: parameterizations, classification, witnesses and the
//! float oracle.

use polyimage::classify::{classify as classify_input, mode_json, Classification};
use polyimage::curve::{implicitize_plane, PLANE_VARS};
use polyimage::exact::parse_rat;
use polyimage::oracle::sample_input;
use polyimage::param::{param_from_json, param_to_json, print_poly, Mode, ProjParam, SemialgInput};
use polyimage::witness::{
    laurent_from_real, real_from_laurent, verify_witness, witness_circle, witness_interval, witness_laurent,
    witness_sphere_k, LaurentPoly, RealPolyMap, Witness,
};
use polyimage::Error;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde_json::Value;

create_exception!(polyimage, PolyimageError, PyException, "Rejection raised by polyimage; `args[1]` is the reason tag.");

fn err(e: Error) -> PyErr {
    PolyimageError::new_err((e.to_string(), e.reason()))
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn from_text(text: &str) -> PyResult<Value> {
    serde_json::from_str(text).map_err(|e| PyValueError::new_err(format!("invalid JSON: {e}")))
}

/// A reduced projective parameterization `[P0 : ... : Pm]` of a rational curve.
#[pyclass(name = "Param", module = "polyimage", frozen)]
struct PyParam(ProjParam);

#[pymethods]
impl PyParam {
    /// Builds a parameterization from homogeneous forms in `t0, t1`.
    #[new]
    fn new(components: Vec<String>) -> PyResult<Self> {
        ProjParam::from_strings(&components).map(PyParam).map_err(err)
    }

    /// Reads a parameterization document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        param_from_json(&from_text(text)?).map(PyParam).map_err(err)
    }

    fn to_json(&self) -> String {
        param_to_json(&self.0).to_string()
    }

    #[getter]
    fn components(&self) -> Vec<String> {
        self.0.to_strings()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Target dimension `m`.
    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    /// Implicit equation of a plane curve in `x0, x1, x2`.
    fn implicitize(&self) -> PyResult<String> {
        implicitize_plane(&self.0).map(|f| print_poly(&f, &PLANE_VARS)).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Param({:?})", self.0.to_strings())
    }
}

/// The full real trace of a parameterization, or the image of an arc.
#[pyclass(name = "Input", module = "polyimage", frozen)]
struct PyInput(SemialgInput);

#[pymethods]
impl PyInput {
    #[staticmethod]
    fn full(param: &PyParam) -> Self {
        PyInput(SemialgInput::full(param.0.clone()))
    }

    /// The image of `[a, b]`; the bounds are rational strings such as `"-1/2"`.
    #[staticmethod]
    fn arc(param: &PyParam, a: &str, b: &str) -> PyResult<Self> {
        let q = |s: &str| parse_rat(s).ok_or_else(|| PyValueError::new_err(format!("not a rational number: {s:?}")));
        SemialgInput::arc(param.0.clone(), q(a)?, q(b)?).map(PyInput).map_err(err)
    }

    #[getter]
    fn param(&self) -> PyParam {
        PyParam(self.0.param().clone())
    }

    #[getter]
    fn mode<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &mode_json(self.0.mode()))
    }

    fn __repr__(&self) -> String {
        match self.0.mode() {
            Mode::FullTrace => format!("Input.full({:?})", self.0.param().to_strings()),
            Mode::Arc { a, b } => format!("Input.arc({:?}, {a}, {b})", self.0.param().to_strings()),
        }
    }
}

/// Decided invariants of a set.
#[pyclass(name = "Classification", module = "polyimage", frozen)]
struct PyClassification(Classification);

#[pymethods]
impl PyClassification {
    #[getter]
    fn case_label(&self) -> &'static str {
        self.0.case_label.as_str()
    }

    /// `1` or `None` for infinity.
    #[getter]
    fn p_ball(&self) -> Option<u32> {
        self.0.p_ball.is_one().then_some(1)
    }

    #[getter]
    fn p_sphere1(&self) -> Option<u32> {
        self.0.p_sphere1.is_one().then_some(1)
    }

    #[getter]
    fn p_sphere_k_ge2(&self) -> bool {
        self.0.p_sphere_k_ge2
    }

    #[getter]
    fn r_ball_sphere(&self) -> Option<u32> {
        self.0.r_ball_sphere.is_one().then_some(1)
    }

    #[getter]
    fn compact(&self) -> bool {
        self.0.s_compact
    }

    /// The classification document as a dict.
    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.to_json())
    }

    fn table(&self) -> String {
        self.0.table()
    }

    fn __repr__(&self) -> String {
        format!("Classification({})", self.0.case_label.as_str())
    }
}

#[pyfunction]
fn classify(input: &PyInput) -> PyResult<PyClassification> {
    classify_input(&input.0).map(PyClassification).map_err(err)
}

/// Witness document for `target` in `interval`, `circle`, `sphere2` or
/// `laurent`, as a dict.
#[pyfunction]
fn witness<'py>(py: Python<'py>, input: &PyInput, target: &str) -> PyResult<Bound<'py, PyAny>> {
    let doc = match target {
        "interval" => witness_interval(&input.0).map(|w| w.to_json()),
        "circle" => witness_circle(&input.0).map(|w| w.to_json()),
        "sphere2" => witness_sphere_k(&input.0, 2).map(|w| w.to_json()),
        "laurent" => witness_laurent(&input.0).map(|w| w.to_json()),
        _ => return Err(PyValueError::new_err(format!("unknown target {target:?}"))),
    };
    let mut doc = doc.map_err(err)?;
    doc["input"] = mode_json(input.0.mode());
    to_py(py, &doc)
}

/// Verifies a witness document (JSON text) against a set and returns the
/// report as a dict.
#[pyfunction]
#[pyo3(signature = (witness, input, tol = 1e-3, n = 10_000))]
fn check<'py>(py: Python<'py>, witness: &str, input: &PyInput, tol: f64, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let w = Witness::from_json(&from_text(witness)?).map_err(err)?;
    let report = py.detach(|| verify_witness(&w, &input.0, tol, n)).map_err(err)?;
    let mut doc = report.to_json();
    doc["input"] = mode_json(input.0.mode());
    to_py(py, &doc)
}

/// Circle map of a Laurent polynomial document.
#[pyfunction]
fn laurent_to_real<'py>(py: Python<'py>, laurent: &str) -> PyResult<Bound<'py, PyAny>> {
    let l = LaurentPoly::from_json(&from_text(laurent)?).map_err(err)?;
    to_py(py, &real_from_laurent(&l).map_err(err)?.to_json())
}

/// Laurent polynomial of a circle map document.
#[pyfunction]
fn real_to_laurent<'py>(py: Python<'py>, map: &str) -> PyResult<Bound<'py, PyAny>> {
    let g = RealPolyMap::from_json(&from_text(map)?).map_err(err)?;
    to_py(py, &laurent_from_real(&g).map_err(err)?.to_json())
}

/// `n` points of the set (poles dropped).
#[pyfunction]
#[pyo3(signature = (input, n = 10_000))]
fn sample(py: Python<'_>, input: &PyInput, n: usize) -> PyResult<Vec<Vec<f64>>> {
    let cloud = py.detach(|| sample_input(&input.0, n)).map_err(err)?;
    Ok(cloud.points().map(|p| p.to_vec()).collect())
}

#[pymodule]
#[pyo3(name = "polyimage")]
fn polyimage_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParam>()?;
    m.add_class::<PyInput>()?;
    m.add_class::<PyClassification>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(laurent_to_real, m)?)?;
    m.add_function(wrap_pyfunction!(real_to_laurent, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add("PolyimageError", m.py().get_type::<PolyimageError>())?;
    Ok(())
}
