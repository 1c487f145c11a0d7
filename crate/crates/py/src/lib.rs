use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};
use serde_json::Value;

use finlat::completion::{self, CompletionLattice};
use finlat::harness::{self, Context, Dedupe};
use finlat::io::{poset_dot, read_poset_json, write_poset_json};

fn err(e: finlat::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for x in items {
                list.append(to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let d = PyDict::new(py);
            for (k, x) in map {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn ser<'py, T: serde::Serialize>(py: Python<'py>, t: &T) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &serde_json::to_value(t).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

/// A finite poset with labeled elements.
#[pyclass(name = "Poset", module = "finlat", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPoset {
    inner: finlat::Poset,
}

impl PyPoset {
    fn index(&self, label: &str) -> PyResult<usize> {
        self.inner.index_of(label).ok_or_else(|| PyIndexError::new_err(format!("no element labeled `{label}`")))
    }

    fn labels_of(&self, s: &finlat::Subset) -> Vec<String> {
        s.iter().map(|i| self.inner.label(i).to_string()).collect()
    }
}

#[pymethods]
impl PyPoset {
    /// `covers` are index pairs `(i, j)` with `i` below `j`; the order is
    /// their reflexive-transitive closure.
    #[new]
    #[pyo3(signature = (elements, covers, name = "P"))]
    fn new(elements: Vec<String>, covers: Vec<(usize, usize)>, name: &str) -> PyResult<Self> {
        let p = finlat::Poset::from_covers(elements, &covers).map_err(err)?.with_name(name);
        Ok(PyPoset { inner: p })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPoset { inner: read_poset_json(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        write_poset_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        poset_dot(&self.inner)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn covers(&self) -> Vec<(String, String)> {
        self.inner.covers().into_iter().map(|(i, j)| (self.inner.label(i).to_string(), self.inner.label(j).to_string())).collect()
    }

    fn leq(&self, a: &str, b: &str) -> PyResult<bool> {
        Ok(self.inner.leq(self.index(a)?, self.index(b)?))
    }

    fn meet(&self, a: &str, b: &str) -> PyResult<Option<String>> {
        Ok(self.inner.meet(self.index(a)?, self.index(b)?).map(|m| self.inner.label(m).to_string()))
    }

    fn join(&self, a: &str, b: &str) -> PyResult<Option<String>> {
        Ok(self.inner.join(self.index(a)?, self.index(b)?).map(|m| self.inner.label(m).to_string()))
    }

    fn is_lattice(&self) -> bool {
        finlat::lattice::is_lattice(&self.inner).is_some()
    }

    fn is_isomorphic(&self, other: &PyPoset) -> bool {
        finlat::iso::is_isomorphic(&self.inner, &other.inner).is_some()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Poset({:?}, {} elements)", self.inner.name(), self.inner.len())
    }
}

/// A DM or BL completion: the members are downsets of the base.
#[pyclass(name = "Completion", module = "finlat", frozen)]
struct PyCompletion {
    inner: CompletionLattice,
}

#[pymethods]
impl PyCompletion {
    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind().as_str()
    }

    /// Members as label lists, in canonical order.
    fn members(&self) -> Vec<Vec<String>> {
        let base = PyPoset { inner: self.inner.base().clone() };
        self.inner.members().iter().map(|m| base.labels_of(m)).collect()
    }

    fn to_poset(&self) -> PyPoset {
        PyPoset { inner: self.inner.to_poset() }
    }

    fn is_frame(&self) -> bool {
        self.inner.frame_witness().is_none()
    }

    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let iso = finlat::generate::identify(&self.inner.to_poset()).map(|f| f.to_string());
        ser(py, &self.inner.report(iso))
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot(&[])
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

#[pyfunction]
#[pyo3(signature = (family, *params))]
fn generate(family: &str, params: Vec<usize>) -> PyResult<PyPoset> {
    Ok(PyPoset { inner: finlat::generate::generate(family, &params).map_err(err)? })
}

#[pyfunction]
fn dm_completion(p: &PyPoset) -> PyCompletion {
    PyCompletion { inner: completion::dm_completion(&p.inner) }
}

#[pyfunction]
fn bl_completion(p: &PyPoset) -> PyResult<PyCompletion> {
    Ok(PyCompletion { inner: completion::bl_completion(&p.inner).map_err(err)? })
}

/// The relative annihilator `<a,b>` as a label list.
#[pyfunction]
fn annihilator(p: &PyPoset, a: &str, b: &str) -> PyResult<Vec<String>> {
    let s = finlat::tower::annihilator(&p.inner, p.index(a)?, p.index(b)?).map_err(err)?;
    Ok(p.labels_of(&s))
}

#[pyfunction]
fn normal_closure(p: &PyPoset, labels: Vec<String>) -> PyResult<Vec<String>> {
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let s = p.inner.subset_of_labels(&refs).ok_or_else(|| PyIndexError::new_err("unknown label"))?;
    Ok(p.labels_of(&completion::normal_closure(&p.inner, &s)))
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, p: &PyPoset) -> PyResult<Bound<'py, PyAny>> {
    ser(py, &finlat::tower::classify(&p.inner).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (p, members = false))]
fn tower<'py>(py: Python<'py>, p: &PyPoset, members: bool) -> PyResult<Bound<'py, PyAny>> {
    ser(py, &finlat::tower::tower_report(&p.inner, members).map_err(err)?)
}

#[pyfunction]
fn dualize<'py>(py: Python<'py>, p: &PyPoset) -> PyResult<Bound<'py, PyAny>> {
    ser(py, &finlat::duality::dual_space(&p.inner).map_err(err)?.to_json())
}

/// Runs the theorem suite; returns one report dict per (theorem, instance).
#[pyfunction]
#[pyo3(signature = (max_n, suite = "all", labeled = false))]
fn verify<'py>(py: Python<'py>, max_n: usize, suite: &str, labeled: bool) -> PyResult<Bound<'py, PyAny>> {
    let ids = harness::parse_suite(suite).map_err(err)?;
    let dedupe = if labeled { Dedupe::Labeled } else { Dedupe::UpToIso };
    let inst = harness::suite_instances(max_n, dedupe).map_err(err)?;
    let mut reports = py.detach(|| harness::run_suite(&Context::default(), &ids, &inst)).map_err(err)?;
    for r in &mut reports {
        r.timing_us = None;
    }
    ser(py, &reports)
}

#[pymodule]
#[pyo3(name = "finlat")]
fn finlat_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add_class::<PyCompletion>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(dm_completion, m)?)?;
    m.add_function(wrap_pyfunction!(bl_completion, m)?)?;
    m.add_function(wrap_pyfunction!(annihilator, m)?)?;
    m.add_function(wrap_pyfunction!(normal_closure, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(tower, m)?)?;
    m.add_function(wrap_pyfunction!(dualize, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
