//! Python bindings. Rationals cross the boundary as strings such as `"-3/2"`;
//! structured results come back as the same dictionaries the CLI prints.

use btcompact::apartment::{self, AffineRootPattern, Apartment, ExtensionSpec};
use btcompact::checks::{checks_json, run_checks};
use btcompact::compactify::{self, Limit};
use btcompact::fans;
use btcompact::gaussnorm::{self, ToyGroupDatum};
use btcompact::json;
use btcompact::num::{parse_q, Q};
use btcompact::parabolics;
use btcompact::rootdata::{self, DiagramSubset};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

fn err(e: impl std::fmt::Debug + std::fmt::Display) -> PyErr {
    let dbg = format!("{e:?}");
    let code: String = dbg.chars().take_while(|c| c.is_alphanumeric()).collect();
    PyValueError::new_err(format!("{code}: {e}"))
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn point(xs: Vec<String>) -> PyResult<Vec<Q>> {
    xs.iter().map(|s| parse_q(s).map_err(err)).collect()
}

#[pyclass(frozen)]
struct RootDatum {
    inner: rootdata::RootDatum,
}

#[pymethods]
impl RootDatum {
    /// A catalogue datum such as "A2", "BC2" or "A1xG2".
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(RootDatum { inner: rootdata::RootDatum::catalogue(name).map_err(err)? })
    }

    /// Builds a datum from the JSON accepted by `btcompact --datum file.json`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: Value = serde_json::from_str(text).map_err(err)?;
        Ok(RootDatum { inner: json::datum_from_json(&v).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn num_roots(&self) -> usize {
        self.inner.num_roots()
    }

    fn weyl_order(&self) -> usize {
        self.inner.weyl_group().order()
    }

    fn root_labels(&self) -> Vec<String> {
        (0..self.inner.num_roots()).map(|a| self.inner.root_label(a)).collect()
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().to_vec()
    }

    fn describe<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &json::datum_json(&self.inner))
    }

    fn to_json(&self) -> String {
        json::datum_json(&self.inner).to_string()
    }

    fn __repr__(&self) -> String {
        format!("RootDatum('{}')", self.inner.name())
    }
}

impl RootDatum {
    fn subset(&self, s: &str) -> PyResult<DiagramSubset> {
        self.inner.parse_subset(s).map_err(err)
    }
}

#[pyclass(frozen)]
struct Fan {
    inner: fans::Fan,
}

#[pymethods]
impl Fan {
    /// The fan F^J; `j` lists simple roots, e.g. "a1,a3".
    #[new]
    #[pyo3(signature = (datum, j = ""))]
    fn new(datum: &RootDatum, j: &str) -> PyResult<Self> {
        Ok(Fan { inner: fans::Fan::build(&datum.inner, datum.subset(j)?).map_err(err)? })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn cone_containing(&self, v: Vec<String>) -> PyResult<usize> {
        let v = point(v)?;
        if v.len() != self.inner.dim() {
            return Err(PyValueError::new_err("DimensionMismatch: wrong number of coordinates"));
        }
        Ok(self.inner.cone_containing(&v))
    }

    fn is_face(&self, f: usize, g: usize) -> PyResult<bool> {
        if f >= self.inner.len() || g >= self.inner.len() {
            return Err(PyValueError::new_err("IndexError: no such cone"));
        }
        Ok(self.inner.is_face(f, g))
    }

    #[pyo3(signature = (faces = false))]
    fn describe<'py>(&self, py: Python<'py>, faces: bool) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &json::fan_json(&self.inner, faces))
    }

    /// Limit of `base + t·dir` in the compactified apartment.
    fn limit_of_ray<'py>(&self, py: Python<'py>, base: Vec<String>, dir: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
        let p = compactify::limit_of_ray(&self.inner, &point(base)?, &point(dir)?).map_err(err)?;
        to_py(py, &json::point_json(&self.inner, &p))
    }

    /// Limit of a profile mapping root labels to "p/q", "inf" or "-inf";
    /// `None` when no cone matches.
    fn limit_of_profile<'py>(&self, py: Python<'py>, profile: &str) -> PyResult<Option<Bound<'py, PyAny>>> {
        let v: Value = serde_json::from_str(profile).map_err(err)?;
        let p = json::profile_from_json(self.inner.datum(), &v).map_err(err)?;
        match compactify::limit_of_profile(&self.inner, &p) {
            Limit::Point(pt) => Ok(Some(to_py(py, &json::point_json(&self.inner, &pt))?)),
            Limit::NoLimit => Ok(None),
        }
    }
}

#[pyfunction]
#[pyo3(signature = (datum, j = "", conjugates = false))]
fn strata<'py>(py: Python<'py>, datum: &RootDatum, j: &str, conjugates: bool) -> PyResult<Bound<'py, PyAny>> {
    let j = datum.subset(j)?;
    let d = &datum.inner;
    let s = if conjugates { parabolics::enumerate_strata_conjugates(d, j) } else { parabolics::enumerate_strata(d, j) }
        .map_err(err)?;
    to_py(py, &Value::Array(s.iter().map(|x| json::stratum_json(d, x)).collect()))
}

#[pyfunction]
fn is_non_degenerate(datum: &RootDatum, t: &str) -> PyResult<bool> {
    parabolics::is_non_degenerate(&datum.inner, datum.subset(t)?).map_err(err)
}

#[pyfunction]
fn is_j_relevant(datum: &RootDatum, j: &str, t: &str) -> PyResult<bool> {
    parabolics::is_j_relevant(&datum.inner, datum.subset(j)?, datum.subset(t)?).map_err(err)
}

fn uniform(datum: &RootDatum, d: u64) -> PyResult<Apartment> {
    Ok(Apartment::new(&datum.inner, AffineRootPattern::uniform(&datum.inner, d).map_err(err)?))
}

/// `(special, witness)` for the value groups `(1/d)ℤ`.
#[pyfunction]
#[pyo3(signature = (datum, x, d = 1))]
fn special(datum: &RootDatum, x: Vec<String>, d: u64) -> PyResult<(bool, String)> {
    let apt = uniform(datum, d)?;
    let x = point(x)?;
    apt.check_dim(&x).map_err(err)?;
    Ok((apartment::is_special_vertex(&apt, &x), apartment::special_witness(&apt, &x).to_string()))
}

/// Whether `x` is special after a ramified extension of index `e`.
#[pyfunction]
#[pyo3(signature = (datum, x, e, d = 1))]
fn special_after_extension(datum: &RootDatum, x: Vec<String>, e: u64, d: u64) -> PyResult<bool> {
    let apt = apartment::embed_extension(&uniform(datum, d)?, &ExtensionSpec::ramified(e)).map_err(err)?;
    let x = point(x)?;
    apt.check_dim(&x).map_err(err)?;
    Ok(apartment::is_special_vertex(&apt, &x))
}

/// `(N, D, coefficients, translation)`.
#[pyfunction]
fn transitivity(datum: &RootDatum, x: Vec<String>, y: Vec<String>) -> PyResult<(String, i64, Vec<String>, Vec<String>)> {
    let s = apartment::transitivity_solve(&datum.inner, &point(x)?, &point(y)?).map_err(err)?;
    Ok((
        s.n_denominator.to_string(),
        s.cartan_det,
        s.coefficients.iter().map(|c| c.to_string()).collect(),
        s.translation.iter().map(|c| c.to_string()).collect(),
    ))
}

/// θ_P at `x` as a map from coordinate labels to log-values; with `poly`
/// (polynomial JSON) returns its value instead.
#[pyfunction]
#[pyo3(signature = (datum, t, x, poly = None))]
fn seminorm<'py>(
    py: Python<'py>,
    datum: &RootDatum,
    t: &str,
    x: Vec<String>,
    poly: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let g = ToyGroupDatum::new(&datum.inner, datum.subset(t)?);
    let s = gaussnorm::theta_p(&g, &point(x)?).map_err(err)?;
    match poly {
        None => to_py(py, &json::seminorm_json(&g, &s)),
        Some(text) => {
            let v: Value = serde_json::from_str(text).map_err(err)?;
            let f = json::polynomial_from_json(&g, &v).map_err(err)?;
            to_py(py, &json::ext_json(&s.eval(&f).map_err(err)?))
        }
    }
}

#[pyfunction]
#[pyo3(signature = (datum, samples = 500, seed = 0))]
fn check<'py>(py: Python<'py>, datum: &RootDatum, samples: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let res = run_checks(&datum.inner, samples, seed);
    to_py(py, &checks_json(&datum.inner, &res))
}

#[pymodule]
#[pyo3(name = "btcompact")]
fn btcompact_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootDatum>()?;
    m.add_class::<Fan>()?;
    m.add_function(wrap_pyfunction!(strata, m)?)?;
    m.add_function(wrap_pyfunction!(is_non_degenerate, m)?)?;
    m.add_function(wrap_pyfunction!(is_j_relevant, m)?)?;
    m.add_function(wrap_pyfunction!(special, m)?)?;
    m.add_function(wrap_pyfunction!(special_after_extension, m)?)?;
    m.add_function(wrap_pyfunction!(transitivity, m)?)?;
    m.add_function(wrap_pyfunction!(seminorm, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
