//! Python bindings. Parameters may be ints, floats or strings; ints and
//! `"p/q"` strings are exact, floats and decimal strings use the float path
//! unless `exact=True`. A family is evaluated exactly only when every
//! parameter is exact.

use std::fs::File;
use std::io::BufWriter;

use extremal_zeros::closed_bounds::{self, BoundValue};
use extremal_zeros::euler_rayleigh::{extreme_zero_bracket, smallest_zero_bracket};
use extremal_zeros::poly_core::transformed_coeffs;
use extremal_zeros::power_sums::newton_power_sums;
use extremal_zeros::scalar::rational_text;
use extremal_zeros::verification::{self, GridReport, GridSpec};
use extremal_zeros::zero_oracle::{self, ZeroSet};
use extremal_zeros::{Error, GegenbauerParams, JacobiParams, LaguerreParams, Number, Rational, Scalar};
use pyo3::exceptions::{PyRuntimeError, PyTypeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Domain(_) | Error::Parse(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn number(obj: &Bound<'_, PyAny>, exact: bool) -> PyResult<Number> {
    if let Ok(v) = obj.extract::<i64>() {
        return Ok(Number::Exact(Rational::from_integer(v.into())));
    }
    if let Ok(s) = obj.extract::<String>() {
        return if exact { Number::parse_exact(&s) } else { Number::parse(&s) }.map_err(py_err);
    }
    if let Ok(v) = obj.extract::<f64>() {
        if !v.is_finite() {
            return Err(PyValueError::new_err("parameter must be finite"));
        }
        // Shortest round-trip decimal, so that 0.1 means 1/10.
        return if exact { Number::parse_exact(&format!("{v}")).map_err(py_err) } else { Ok(Number::Float(v)) };
    }
    Err(PyTypeError::new_err("parameters must be int, float or str"))
}

fn rational(n: &Number) -> Rational {
    n.to_rational().expect("finite by construction")
}

fn number_text(n: &Number) -> String {
    match n {
        Number::Exact(r) => rational_text(r),
        Number::Float(v) => format!("{v}"),
    }
}

/// One closed-form or Euler-Rayleigh bound.
#[pyclass(name = "Bound", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyBound {
    method: String,
    quantity: String,
    direction: String,
    applicable: bool,
    value: f64,
    /// `"p/q"` on the exact path.
    exact: Option<String>,
}

#[pymethods]
impl PyBound {
    fn __repr__(&self) -> String {
        format!(
            "Bound({} {} {} {}{})",
            self.method,
            self.quantity,
            self.direction,
            self.value,
            if self.applicable { "" } else { ", not applicable" }
        )
    }
}

trait Exactness: Scalar {
    fn text(&self) -> Option<String>;
}

impl Exactness for f64 {
    fn text(&self) -> Option<String> {
        None
    }
}

impl Exactness for Rational {
    fn text(&self) -> Option<String> {
        Some(rational_text(self))
    }
}

fn bound<T: Exactness>(b: &BoundValue<T>) -> PyBound {
    PyBound {
        method: b.source.label().into(),
        quantity: b.quantity.label().into(),
        direction: b.direction.label().into(),
        applicable: b.applicable(),
        value: b.value.to_f64(),
        exact: b.value.text(),
    }
}

fn bracket_rows<T: Exactness>(p: &JacobiParams<T>, k: usize) -> PyResult<Vec<PyBound>> {
    let (lo, hi) = extreme_zero_bracket(p, k).map_err(py_err)?;
    let row = |v: &T, dir: &str| PyBound {
        method: format!("EULER_RAYLEIGH_K{k}"),
        quantity: "ONE_MINUS_XNN".into(),
        direction: dir.into(),
        applicable: true,
        value: v.to_f64(),
        exact: v.text(),
    };
    Ok(vec![row(&lo, "LOWER"), row(&hi, "UPPER")])
}

fn pair<T: Exactness>((lo, hi): (T, T)) -> (f64, f64) {
    (lo.to_f64(), hi.to_f64())
}

/// Certified zeros of one polynomial.
#[pyclass(name = "ZeroSet", frozen, get_all)]
struct PyZeroSet {
    zeros: Vec<f64>,
    certified_abs_error: f64,
}

#[pymethods]
impl PyZeroSet {
    fn largest(&self) -> f64 {
        self.zeros[self.zeros.len() - 1]
    }

    fn smallest(&self) -> f64 {
        self.zeros[0]
    }

    fn __len__(&self) -> usize {
        self.zeros.len()
    }

    fn __repr__(&self) -> String {
        format!("ZeroSet({:?}, certified_abs_error={:e})", self.zeros, self.certified_abs_error)
    }
}

impl From<ZeroSet> for PyZeroSet {
    fn from(z: ZeroSet) -> Self {
        PyZeroSet { zeros: z.zeros, certified_abs_error: z.certified_abs_error }
    }
}

#[pyclass(name = "Jacobi", frozen)]
struct PyJacobi {
    exact: Option<JacobiParams<Rational>>,
    float: JacobiParams<f64>,
}

#[pymethods]
impl PyJacobi {
    #[new]
    #[pyo3(signature = (n, alpha, beta, exact = false))]
    fn new(n: usize, alpha: &Bound<'_, PyAny>, beta: &Bound<'_, PyAny>, exact: bool) -> PyResult<Self> {
        let (a, b) = (number(alpha, exact)?, number(beta, exact)?);
        let float = JacobiParams::new(n, a.to_f64(), b.to_f64()).map_err(py_err)?;
        let exact = if a.is_exact() && b.is_exact() {
            Some(JacobiParams::new(n, rational(&a), rational(&b)).map_err(py_err)?)
        } else {
            None
        };
        Ok(PyJacobi { exact, float })
    }

    #[getter]
    fn n(&self) -> usize {
        self.float.n
    }

    #[getter]
    fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Every closed-form bound followed by the k-th Euler-Rayleigh bracket.
    #[pyo3(signature = (k = 3))]
    fn bounds(&self, k: usize) -> PyResult<Vec<PyBound>> {
        let mut out: Vec<PyBound>;
        match &self.exact {
            Some(p) => {
                out = closed_bounds::jacobi_bounds(p).iter().map(bound).collect();
                out.extend(bracket_rows(p, k)?);
            }
            None => {
                out = closed_bounds::jacobi_bounds(&self.float).iter().map(bound).collect();
                out.extend(bracket_rows(&self.float, k)?);
            }
        }
        Ok(out)
    }

    /// `(lower, upper)` bounds on `1 - x_nn`.
    #[pyo3(signature = (k = 3))]
    fn bracket(&self, k: usize) -> PyResult<(f64, f64)> {
        match &self.exact {
            Some(p) => extreme_zero_bracket(p, k).map(pair),
            None => extreme_zero_bracket(&self.float, k).map(pair),
        }
        .map_err(py_err)
    }

    /// `(lower, upper)` bounds on `1 + x_1n`.
    #[pyo3(signature = (k = 3))]
    fn smallest_bracket(&self, k: usize) -> PyResult<(f64, f64)> {
        match &self.exact {
            Some(p) => smallest_zero_bracket(p, k).map(pair),
            None => smallest_zero_bracket(&self.float, k).map(pair),
        }
        .map_err(py_err)
    }

    /// Exact power sums `p_0 ..= p_k` of the transformed zeros, as `"p/q"`.
    fn power_sums(&self, k: usize) -> PyResult<Vec<String>> {
        let p = self.exact.as_ref().ok_or_else(|| PyValueError::new_err("power sums need exact parameters"))?;
        Ok(newton_power_sums(&transformed_coeffs(p), k).values.iter().map(rational_text).collect())
    }

    fn zeros(&self) -> PyResult<PyZeroSet> {
        zero_oracle::jacobi_zeros(&self.float).map(Into::into).map_err(py_err)
    }

    /// `(1 - x_nn, 2 / (1 - x_nn), relative error)`.
    fn largest_zero_shifted(&self) -> PyResult<(f64, f64, f64)> {
        let s = zero_oracle::largest_zero_shifted(&self.float).map_err(py_err)?;
        Ok((s.one_minus_x, s.z, s.rel_error))
    }

    fn __repr__(&self) -> String {
        match &self.exact {
            Some(p) => format!("Jacobi(n={}, alpha={}, beta={})", p.n, rational_text(&p.alpha), rational_text(&p.beta)),
            None => format!("Jacobi(n={}, alpha={}, beta={})", self.float.n, self.float.alpha, self.float.beta),
        }
    }
}

#[pyclass(name = "Gegenbauer", frozen)]
struct PyGegenbauer {
    exact: Option<GegenbauerParams<Rational>>,
    float: GegenbauerParams<f64>,
    lambda: Number,
}

#[pymethods]
impl PyGegenbauer {
    #[new]
    #[pyo3(signature = (n, lam, exact = false))]
    fn new(n: usize, lam: &Bound<'_, PyAny>, exact: bool) -> PyResult<Self> {
        let lambda = number(lam, exact)?;
        let float = GegenbauerParams::new(n, lambda.to_f64()).map_err(py_err)?;
        let exact = match &lambda {
            Number::Exact(r) => Some(GegenbauerParams::new(n, r.clone()).map_err(py_err)?),
            Number::Float(_) => None,
        };
        Ok(PyGegenbauer { exact, float, lambda })
    }

    #[getter]
    fn n(&self) -> usize {
        self.float.n
    }

    #[getter]
    fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    #[pyo3(signature = (k = 3))]
    fn bounds(&self, k: usize) -> PyResult<Vec<PyBound>> {
        let mut out: Vec<PyBound>;
        match &self.exact {
            Some(g) => {
                out = closed_bounds::gegenbauer_bounds(g).map_err(py_err)?.iter().map(bound).collect();
                let p = extremal_zeros::poly_core::gegenbauer_as_jacobi(g).map_err(py_err)?;
                out.extend(bracket_rows(&p, k)?);
            }
            None => {
                let g = &self.float;
                out = closed_bounds::gegenbauer_bounds(g).map_err(py_err)?.iter().map(bound).collect();
                let p = extremal_zeros::poly_core::gegenbauer_as_jacobi(g).map_err(py_err)?;
                out.extend(bracket_rows(&p, k)?);
            }
        }
        Ok(out)
    }

    /// `(rho, phi, r)` with `r = rho * phi` the ratio of the upper to the
    /// lower bound on `1 - x_nn²`.
    fn ratio(&self) -> (f64, f64, f64) {
        let d = closed_bounds::ratio_decomposition(&self.float);
        (d.rho, d.phi, d.r)
    }

    fn zeros(&self) -> PyResult<PyZeroSet> {
        zero_oracle::gegenbauer_zeros(&self.float).map(Into::into).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Gegenbauer(n={}, lam={})", self.float.n, number_text(&self.lambda))
    }
}

#[pyclass(name = "Laguerre", frozen)]
struct PyLaguerre {
    exact: Option<LaguerreParams<Rational>>,
    float: LaguerreParams<f64>,
    alpha: Number,
}

#[pymethods]
impl PyLaguerre {
    #[new]
    #[pyo3(signature = (n, alpha, exact = false))]
    fn new(n: usize, alpha: &Bound<'_, PyAny>, exact: bool) -> PyResult<Self> {
        let alpha = number(alpha, exact)?;
        let float = LaguerreParams::new(n, alpha.to_f64()).map_err(py_err)?;
        let exact = match &alpha {
            Number::Exact(r) => Some(LaguerreParams::new(n, r.clone()).map_err(py_err)?),
            Number::Float(_) => None,
        };
        Ok(PyLaguerre { exact, float, alpha })
    }

    #[getter]
    fn n(&self) -> usize {
        self.float.n
    }

    fn bounds(&self) -> Vec<PyBound> {
        match &self.exact {
            Some(l) => closed_bounds::laguerre_bounds(l).iter().map(bound).collect(),
            None => closed_bounds::laguerre_bounds(&self.float).iter().map(bound).collect(),
        }
    }

    fn zeros(&self) -> PyResult<PyZeroSet> {
        zero_oracle::laguerre_zeros(&self.float).map(Into::into).map_err(py_err)
    }

    /// `beta / z_n(alpha, beta)` for each beta, next to the smallest zero.
    fn limit_estimates(&self, betas: Vec<f64>) -> PyResult<(f64, Vec<f64>)> {
        let rep = verification::laguerre_limit_check(&self.float, &betas).map_err(py_err)?;
        Ok((rep.target, rep.estimates))
    }

    fn __repr__(&self) -> String {
        format!("Laguerre(n={}, alpha={})", self.float.n, number_text(&self.alpha))
    }
}

#[pyclass(name = "GridReport", frozen)]
struct PyGridReport {
    inner: GridReport,
}

#[pymethods]
impl PyGridReport {
    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn rows(&self) -> usize {
        self.inner.summary.rows
    }

    #[getter]
    fn passed(&self) -> usize {
        self.inner.summary.passed
    }

    #[getter]
    fn failed(&self) -> usize {
        self.inner.summary.failed
    }

    #[getter]
    fn not_applicable(&self) -> usize {
        self.inner.summary.not_applicable
    }

    fn all_passed(&self) -> bool {
        self.inner.all_passed()
    }

    /// CSV records of every row, as lists of strings.
    #[pyo3(signature = (digits = 12))]
    fn records(&self, digits: u32) -> Vec<Vec<String>> {
        self.inner.rows.iter().map(|r| r.record(digits).to_vec()).collect()
    }

    #[pyo3(signature = (path, digits = 12))]
    fn write_csv(&self, path: &str, digits: u32) -> PyResult<()> {
        let file = File::create(path).map_err(|e| PyRuntimeError::new_err(format!("{path}: {e}")))?;
        self.inner.write_csv(BufWriter::new(file), digits).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        let s = &self.inner.summary;
        format!(
            "GridReport({}: {} rows, {} passed, {} failed, {} not applicable)",
            self.inner.name, s.rows, s.passed, s.failed, s.not_applicable
        )
    }
}

/// Runs a built-in grid (`default`, `small`, `empty`) or a TOML grid file.
#[pyfunction]
#[pyo3(signature = (grid = "default", threads = 0))]
fn verify(py: Python<'_>, grid: &str, threads: usize) -> PyResult<PyGridReport> {
    let spec = GridSpec::resolve(grid).map_err(py_err)?;
    let inner = py.detach(|| verification::run_grid(&spec, threads)).map_err(py_err)?;
    Ok(PyGridReport { inner })
}

/// `rho(lambda)`; returns `"p/q"` text for exact input.
#[pyfunction]
#[pyo3(signature = (lam, exact = false))]
fn rho(py: Python<'_>, lam: &Bound<'_, PyAny>, exact: bool) -> PyResult<Py<PyAny>> {
    Ok(match number(lam, exact)? {
        Number::Exact(r) => rational_text(&closed_bounds::rho(&r)).into_pyobject(py)?.into_any().unbind(),
        Number::Float(v) => closed_bounds::rho(&v).into_pyobject(py)?.into_any().unbind(),
    })
}

/// Checks both proof identities exactly at rational `(a, b)`; raises on failure.
#[pyfunction]
fn check_identities(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<bool> {
    let (a, b) = (rational(&number(a, true)?), rational(&number(b, true)?));
    verification::verify_identity_r2(&a, &b).map_err(py_err)?;
    verification::verify_identity_s2(&a, &b).map_err(py_err)?;
    Ok(true)
}

#[pymodule(name = "extremal_zeros")]
fn extremal_zeros_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBound>()?;
    m.add_class::<PyZeroSet>()?;
    m.add_class::<PyJacobi>()?;
    m.add_class::<PyGegenbauer>()?;
    m.add_class::<PyLaguerre>()?;
    m.add_class::<PyGridReport>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(check_identities, m)?)?;
    Ok(())
}
