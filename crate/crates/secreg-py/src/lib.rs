//! Python module `secreg`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pythonize::pythonize;
use serde_json::{json, Value};

use secreg::catalog;
use secreg::coeffs::PrimeField;
use secreg::cohom::{default_window, e_invariant, index_of_normality, sheaf_cohomology_table, InvariantReport};
use secreg::error::Error;
use secreg::formulas;
use secreg::gb::write_ideal;
use secreg::geom::{sample_secant_lines, secant_length_by_hilbert, SurfaceKind};
use secreg::resolve::minimal_resolution;
use secreg::verify::{verify_surface, ArtifactOptions, Artifacts, Verdict};

fn err(e: Error) -> PyErr {
    match e {
        Error::Precondition(_) | Error::Parse { .. } | Error::UnknownVariable(_) => PyValueError::new_err(e.to_string()),
        e => PyRuntimeError::new_err(e.to_string()),
    }
}

fn field(characteristic: u32) -> PyResult<PrimeField> {
    PrimeField::new(characteristic).map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    pythonize(py, v).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Graded Betti numbers of S/I.
#[pyclass(module = "secreg", frozen)]
struct BettiTable(secreg::resolve::BettiTable);

#[pymethods]
impl BettiTable {
    /// β_{i,j}
    fn get(&self, i: usize, j: i64) -> usize {
        self.0.get(i, j)
    }

    #[getter]
    fn pd(&self) -> usize {
        self.0.pd()
    }

    /// Regularity of S/I.
    #[getter]
    fn reg(&self) -> i64 {
        self.0.reg()
    }

    #[getter]
    fn depth(&self) -> usize {
        self.0.depth()
    }

    /// Nonzero `(i, j, β_{i,j})` with i ≥ 1.
    fn entries(&self) -> Vec<(usize, i64, usize)> {
        self.0.nonzero().filter(|t| t.0 > 0).collect()
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.to_json())
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }

    fn __eq__(&self, other: &BettiTable) -> bool {
        self.0 == other.0
    }
}

/// Outcome of a verification run.
#[pyclass(module = "secreg", frozen)]
struct VerificationReport(secreg::verify::VerificationReport);

#[pymethods]
impl VerificationReport {
    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    /// Names of failed claims.
    fn failures(&self) -> Vec<String> {
        self.0.failures().map(|c| c.claim.clone()).collect()
    }

    fn counts(&self) -> (usize, usize, usize) {
        (self.0.count(Verdict::Pass), self.0.count(Verdict::Fail), self.0.count(Verdict::Skipped))
    }

    fn claims<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.to_json())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("plain data")
    }

    fn __len__(&self) -> usize {
        self.0.claims.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// A constructed surface with its ideal over 𝔽_p.
#[pyclass(module = "secreg", frozen)]
struct Surface(secreg::geom::Surface<PrimeField>);

impl Surface {
    fn build(py: Python<'_>, kind: SurfaceKind, characteristic: u32) -> PyResult<Self> {
        let f = field(characteristic)?;
        py.detach(|| secreg::geom::Surface::build(&f, &kind)).map(Surface).map_err(err)
    }
}

#[pymethods]
impl Surface {
    /// Divisor of degree d on the Segre threefold in P^5.
    #[staticmethod]
    #[pyo3(signature = (d, characteristic = 32003))]
    fn type1(py: Python<'_>, d: u32, characteristic: u32) -> PyResult<Self> {
        Self::build(py, SurfaceKind::TypeI { d }, characteristic)
    }

    /// Projection of the scroll S(a, b) along the binary form f of degree b.
    #[staticmethod]
    #[pyo3(signature = (a, b, f, characteristic = 32003))]
    fn type2(py: Python<'_>, a: u32, b: u32, f: String, characteristic: u32) -> PyResult<Self> {
        Self::build(py, SurfaceKind::TypeII { a, b, f }, characteristic)
    }

    #[staticmethod]
    #[pyo3(signature = (degrees, characteristic = 32003))]
    fn scroll(py: Python<'_>, degrees: Vec<u32>, characteristic: u32) -> PyResult<Self> {
        Self::build(py, SurfaceKind::Scroll { degrees }, characteristic)
    }

    #[getter]
    fn r(&self) -> u32 {
        self.0.spec.r
    }

    #[getter]
    fn d(&self) -> u32 {
        self.0.spec.d
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.0.ideal.gens().iter().map(|g| g.to_string()).collect()
    }

    /// Contents of an ideal file, with the construction recorded in a header.
    fn ideal_file(&self) -> String {
        format!("{}\n{}", self.0.spec.header_line(), write_ideal(&self.0.ideal))
    }

    fn betti(&self, py: Python<'_>) -> PyResult<BettiTable> {
        py.detach(|| minimal_resolution(&self.0.ideal)?.betti_table()).map(BettiTable).map_err(err)
    }

    /// `h^i(I_X(j))` for i = 1, 2, 3 on `lo..=hi`, with `e` and `N`.
    #[pyo3(signature = (lo = None, hi = None))]
    fn cohomology<'py>(&self, py: Python<'py>, lo: Option<i64>, hi: Option<i64>) -> PyResult<Bound<'py, PyAny>> {
        let (dlo, dhi) = default_window(self.0.spec.d as i64, self.0.spec.r as i64);
        let (lo, hi) = (lo.unwrap_or(dlo), hi.unwrap_or(dhi));
        let v = py
            .detach(|| {
                let (mut t, def) = sheaf_cohomology_table(&self.0.ideal, lo, hi)?;
                t.e = Some(e_invariant(&def)?);
                t.normality = index_of_normality(&def)?;
                Ok(t.to_json())
            })
            .map_err(err)?;
        to_py(py, &v)
    }

    /// sreg, depth, τ, e, N, σ and h¹(I_X(1)), h¹(I_X(2)).
    #[pyo3(signature = (samples = 3, seed = 0))]
    fn invariants<'py>(&self, py: Python<'py>, samples: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let v = py
            .detach(|| {
                let y = self.0.union()?;
                let rep = InvariantReport::compute(&self.0.ideal, y.as_ref(), samples, seed)?;
                let mut v = serde_json::to_value(&rep)?;
                v["normality"] = rep.normality.map_or(json!("-inf"), |n| json!(n));
                Ok(v)
            })
            .map_err(err)?;
        to_py(py, &v)
    }

    /// Lengths of `n` seeded extremal secant lines, by GCD and by Hilbert polynomial.
    #[pyo3(signature = (n = 20, seed = 0))]
    fn secant_lengths(&self, py: Python<'_>, n: usize, seed: u64) -> PyResult<Vec<(String, String)>> {
        py.detach(|| {
            let samples = sample_secant_lines(&self.0.spec, &self.0.ideal, n, seed)?;
            samples
                .iter()
                .map(|s| Ok((s.length.to_string(), secant_length_by_hilbert(&self.0.ideal, &s.line)?.to_string())))
                .collect::<secreg::Result<Vec<_>>>()
        })
        .map_err(err)
    }

    /// Runs every check that applies to this surface.
    #[pyo3(signature = (samples = 20, seed = 0))]
    fn verify(&self, py: Python<'_>, samples: usize, seed: u64) -> PyResult<VerificationReport> {
        py.detach(|| {
            let a = Artifacts::compute(&self.0, ArtifactOptions { secant_samples: samples, seed })?;
            Ok(match catalog::EXAMPLES.iter().find(|e| e.family.kind() == self.0.spec.kind) {
                Some(ex) => ex.verify(&self.0.spec, &a),
                None => verify_surface(&self.0.spec, &a),
            })
        })
        .map(VerificationReport)
        .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("<Surface {} in P^{}, degree {}>", self.0.spec, self.0.spec.r, self.0.spec.d)
    }
}

/// Ids of the tabulated examples.
#[pyfunction]
fn catalog_ids() -> Vec<&'static str> {
    catalog::EXAMPLES.iter().map(|e| e.id).collect()
}

/// Builds, computes and checks one tabulated example.
#[pyfunction]
#[pyo3(signature = (id, seed = 0, samples = 20))]
fn run_example(py: Python<'_>, id: &str, seed: u64, samples: usize) -> PyResult<VerificationReport> {
    let ex = catalog::example(id).ok_or_else(|| PyValueError::new_err(format!("unknown example `{id}`")))?;
    let f = field(secreg::coeffs::DEFAULT_PRIME)?;
    py.detach(|| catalog::run_example(&f, ex, ArtifactOptions { secant_samples: samples, seed }))
        .map(VerificationReport)
        .map_err(err)
}

#[pyfunction]
fn type1_betti_formula(d: i64) -> PyResult<BettiTable> {
    formulas::type1_betti_formula(d).map(BettiTable).map_err(err)
}

#[pyfunction]
fn extremal_secant_length(d: i64, r: i64) -> i64 {
    formulas::extremal_secant_length(d, r)
}

#[pymodule]
#[pyo3(name = "secreg")]
fn secreg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Surface>()?;
    m.add_class::<BettiTable>()?;
    m.add_class::<VerificationReport>()?;
    m.add_function(wrap_pyfunction!(catalog_ids, m)?)?;
    m.add_function(wrap_pyfunction!(run_example, m)?)?;
    m.add_function(wrap_pyfunction!(type1_betti_formula, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_secant_length, m)?)?;
    Ok(())
}
