//! Python bindings for `desitter_core`.
//!
//! Matrices cross the boundary as nested lists of Python `complex`.

use std::collections::BTreeMap;

use desitter_core::cli::{self, Format, TableKind};
use desitter_core::fock::{self, FockOperator, FockSpace};
use desitter_core::jordan::{self, JordanKind};
use desitter_core::lie_matrix::{self, Classification};
use desitter_core::quantization::{self, QuantizationConvention};
use desitter_core::suites::{self, Suite, SuiteConfig};
use desitter_core::symplectic::{self, LinearField, QuadraticForm};
use desitter_core::{ComplexMatrix, GeneratorSet, C64};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn py_err(e: desitter_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for desitter_core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// Square complex matrix.
#[pyclass(name = "Matrix", module = "desitter", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMatrix(pub ComplexMatrix);

pub fn rows_to_matrix(rows: &[Vec<C64>]) -> PyResult<ComplexMatrix> {
    let dim = rows.len();
    if rows.iter().any(|r| r.len() != dim) {
        return Err(PyValueError::new_err("matrix rows must form a square array"));
    }
    ComplexMatrix::new(dim, rows.concat()).py()
}

pub fn matrix_to_rows(m: &ComplexMatrix) -> Vec<Vec<C64>> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| m.get(i, j)).collect()).collect()
}

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(rows: Vec<Vec<C64>>) -> PyResult<Self> {
        Ok(Self(rows_to_matrix(&rows)?))
    }

    #[staticmethod]
    fn identity(dim: usize) -> Self {
        Self(ComplexMatrix::identity(dim))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn tolist(&self) -> Vec<Vec<C64>> {
        matrix_to_rows(&self.0)
    }

    fn __getitem__(&self, idx: (usize, usize)) -> PyResult<C64> {
        let (i, j) = idx;
        if i >= self.0.dim() || j >= self.0.dim() {
            return Err(pyo3::exceptions::PyIndexError::new_err("matrix index out of range"));
        }
        Ok(self.0.get(i, j))
    }

    fn __add__(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(Self(self.0.try_add(&other.0).py()?))
    }

    fn __sub__(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(Self(self.0.try_sub(&other.0).py()?))
    }

    fn __matmul__(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(Self(self.0.try_mul(&other.0).py()?))
    }

    fn __mul__(&self, s: C64) -> Self {
        Self(self.0.scale(s))
    }

    fn __rmul__(&self, s: C64) -> Self {
        Self(self.0.scale(s))
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    fn commutator(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(Self(lie_matrix::commutator(&self.0, &other.0).py()?))
    }

    fn anticommutator(&self, other: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(Self(lie_matrix::anticommutator(&self.0, &other.0).py()?))
    }

    fn max_abs(&self) -> f64 {
        self.0.max_abs()
    }

    fn max_abs_diff(&self, other: PyRef<'_, PyMatrix>) -> PyResult<f64> {
        self.0.check_dim(&other.0).py()?;
        Ok(self.0.max_abs_diff(&other.0))
    }

    fn trace(&self) -> C64 {
        self.0.trace()
    }

    fn __repr__(&self) -> String {
        format!("Matrix(dim={})\n{}", self.0.dim(), self.0)
    }
}

/// `f = ½ zᵀ A z` on `(q₁..qₙ, p₁..pₙ)`.
#[pyclass(name = "QuadraticForm", module = "desitter", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyQuadraticForm(pub QuadraticForm);

#[pymethods]
impl PyQuadraticForm {
    #[new]
    fn new(a: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        Ok(Self(QuadraticForm::new(a.0.clone()).py()?))
    }

    /// Inverse of `field`: the form whose Hamiltonian field is `m`.
    #[staticmethod]
    fn from_field(m: PyRef<'_, PyMatrix>) -> PyResult<Self> {
        let xi = LinearField::new(m.0.clone()).py()?;
        Ok(Self(symplectic::form_from_field(&xi).py()?))
    }

    #[getter]
    fn n_pairs(&self) -> usize {
        self.0.n_pairs()
    }

    #[getter]
    fn matrix(&self) -> PyMatrix {
        PyMatrix(self.0.matrix().clone())
    }

    /// Matrix of the linear Hamiltonian field.
    fn field(&self) -> PyMatrix {
        PyMatrix(symplectic::field_from_form(&self.0).matrix().clone())
    }

    fn poisson(&self, other: PyRef<'_, PyQuadraticForm>) -> PyResult<Self> {
        Ok(Self(symplectic::poisson_bracket(&self.0, &other.0).py()?))
    }

    fn eval(&self, z: Vec<C64>) -> PyResult<C64> {
        self.0.eval(&z).py()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuadraticForm({})", self.0)
    }
}

#[pyclass(name = "FockSpace", module = "desitter", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
pub struct PyFockSpace(pub FockSpace);

#[pymethods]
impl PyFockSpace {
    #[new]
    fn new(modes: usize, cutoff: usize) -> PyResult<Self> {
        Ok(Self(FockSpace::new(modes, cutoff).py()?))
    }

    #[getter]
    fn modes(&self) -> usize {
        self.0.modes()
    }

    #[getter]
    fn cutoff(&self) -> usize {
        self.0.cutoff()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn occupation(&self, index: usize) -> PyResult<Vec<usize>> {
        if index >= self.0.dim() {
            return Err(pyo3::exceptions::PyIndexError::new_err("basis index out of range"));
        }
        Ok(self.0.occupation(index))
    }

    fn index_of(&self, occupation: Vec<usize>) -> PyResult<usize> {
        self.0.index_of(&occupation).py()
    }

    fn __repr__(&self) -> String {
        format!("FockSpace(modes={}, cutoff={})", self.0.modes(), self.0.cutoff())
    }
}

/// Sparse operator on a truncated Fock space.
#[pyclass(name = "FockOperator", module = "desitter", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyFockOperator(pub FockOperator);

#[pymethods]
impl PyFockOperator {
    #[getter]
    fn space(&self) -> PyFockSpace {
        PyFockSpace(self.0.space())
    }

    #[getter]
    fn degree_shift(&self) -> Vec<i32> {
        self.0.degree_shift().iter().copied().collect()
    }

    fn dense(&self) -> PyMatrix {
        PyMatrix(self.0.to_dense())
    }

    fn tolist(&self) -> Vec<Vec<C64>> {
        matrix_to_rows(&self.0.to_dense())
    }

    fn element(&self, bra: Vec<usize>, ket: Vec<usize>) -> PyResult<C64> {
        self.0.element(&bra, &ket).py()
    }

    fn __add__(&self, other: PyRef<'_, PyFockOperator>) -> PyResult<Self> {
        Ok(Self(self.0.try_add(&other.0).py()?))
    }

    fn __sub__(&self, other: PyRef<'_, PyFockOperator>) -> PyResult<Self> {
        Ok(Self(self.0.try_sub(&other.0).py()?))
    }

    fn __matmul__(&self, other: PyRef<'_, PyFockOperator>) -> PyResult<Self> {
        Ok(Self(self.0.try_mul(&other.0).py()?))
    }

    fn __mul__(&self, s: C64) -> Self {
        Self(self.0.scale(s))
    }

    fn __rmul__(&self, s: C64) -> Self {
        Self(self.0.scale(s))
    }

    fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    fn commutator(&self, other: PyRef<'_, PyFockOperator>) -> PyResult<Self> {
        Ok(Self(self.0.commutator(&other.0).py()?))
    }

    /// `max |[X,Y] − expected|` over the columns unaffected by truncation.
    fn commutator_deviation(
        &self,
        other: PyRef<'_, PyFockOperator>,
        expected: PyRef<'_, PyFockOperator>,
    ) -> PyResult<f64> {
        fock::safe_commutator(&self.0, &other.0).py()?.deviation(&expected.0).py()
    }

    fn hermitian_defect(&self) -> f64 {
        self.0.hermitian_defect()
    }

    fn is_hermitian(&self, tol: f64) -> bool {
        self.0.is_hermitian(tol)
    }

    fn max_abs(&self) -> f64 {
        self.0.max_abs()
    }

    #[pyo3(signature = (other, safe_cutoff=None))]
    fn max_abs_diff(&self, other: PyRef<'_, PyFockOperator>, safe_cutoff: Option<usize>) -> PyResult<f64> {
        match safe_cutoff {
            Some(k) => self.0.max_abs_diff_on(&other.0, k).py(),
            None => self.0.max_abs_diff(&other.0).py(),
        }
    }

    /// Sorted eigenvalues of a hermitian operator.
    fn spectrum(&self) -> PyResult<Vec<f64>> {
        fock::spectrum(&self.0).py()
    }

    fn __repr__(&self) -> String {
        let s = self.0.space();
        format!("FockOperator(modes={}, cutoff={}, dim={})", s.modes(), s.cutoff(), s.dim())
    }
}

fn matrices(ms: Vec<ComplexMatrix>) -> Vec<PyMatrix> {
    ms.into_iter().map(PyMatrix).collect()
}

fn labelled<T: desitter_core::generators::GeneratorCarrier, U>(
    set: &GeneratorSet<T>,
    wrap: impl Fn(&T) -> U,
) -> BTreeMap<String, U> {
    set.iter().map(|(l, x)| (l.name().to_string(), wrap(x))).collect()
}

/// Pauli matrix `σ₀..σ₃`.
#[pyfunction]
fn pauli(index: usize) -> PyResult<PyMatrix> {
    Ok(PyMatrix(lie_matrix::pauli(index).py()?))
}

#[pyfunction]
fn canonical_j(n_pairs: usize) -> PyResult<PyMatrix> {
    Ok(PyMatrix(lie_matrix::canonical_j(n_pairs).py()?))
}

/// The ten 4×4 generators keyed by label.
#[pyfunction]
fn sp4_generators() -> BTreeMap<String, PyMatrix> {
    labelled(&lie_matrix::sp4_generators(), |m| PyMatrix(m.clone()))
}

#[pyfunction]
fn generator_labels() -> Vec<String> {
    desitter_core::Label::names()
}

/// `"first_set"`, `"second_set"` or `"not_generator"`.
#[pyfunction]
#[pyo3(signature = (g, j=None))]
fn classify(g: PyRef<'_, PyMatrix>, j: Option<PyRef<'_, PyMatrix>>) -> PyResult<&'static str> {
    let j = match j {
        Some(j) => j.0.clone(),
        None => lie_matrix::canonical_j(g.0.dim() / 2).py()?,
    };
    Ok(match lie_matrix::is_symplectic_generator(&g.0, &j).py()? {
        Classification::FirstSet => "first_set",
        Classification::SecondSet => "second_set",
        Classification::NotGenerator => "not_generator",
    })
}

/// `{(A, B): {C: coefficient}}` for the nonzero structure constants of the
/// matrix generators.
#[pyfunction]
fn structure_constants(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let table = lie_matrix::sp4_generators().structure_constants().py()?;
    let out = PyDict::new(py);
    let labels = table.labels();
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate() {
            let terms = PyDict::new(py);
            for (k, c) in labels.iter().enumerate() {
                let v = table.get(i, j, k);
                if v.norm() > 1e-12 {
                    terms.set_item(c, v)?;
                }
            }
            out.set_item((a, b), terms)?;
        }
    }
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (form, space, convention="symplectic"))]
fn quantize(
    form: PyRef<'_, PyQuadraticForm>,
    space: PyRef<'_, PyFockSpace>,
    convention: &str,
) -> PyResult<PyFockOperator> {
    let conv = match convention {
        "symplectic" => QuantizationConvention::symplectic(),
        "physical" => QuantizationConvention::physical(),
        other => return Err(PyValueError::new_err(format!("unknown convention '{other}'"))),
    };
    Ok(PyFockOperator(quantization::quantize_with(&form.0, space.0, &conv).py()?))
}

/// Quantize the form whose Hamiltonian field is the matrix generator `g`.
#[pyfunction]
fn quantize_generator(g: PyRef<'_, PyMatrix>, space: PyRef<'_, PyFockSpace>) -> PyResult<PyFockOperator> {
    Ok(PyFockOperator(quantization::quantize_generator(&g.0, space.0).py()?))
}

/// Hand-written ladder-operator representation on two modes.
#[pyfunction]
fn dirac_representation(space: PyRef<'_, PyFockSpace>) -> PyResult<BTreeMap<String, PyFockOperator>> {
    let set = quantization::dirac_representation(space.0).py()?;
    Ok(labelled(&set, |x| PyFockOperator(x.clone())))
}

/// Same ten operators obtained by quantizing the matrix generators.
#[pyfunction]
fn pipeline_representation(space: PyRef<'_, PyFockSpace>) -> PyResult<BTreeMap<String, PyFockOperator>> {
    let set = quantization::pipeline_representation(space.0).py()?;
    Ok(labelled(&set, |x| PyFockOperator(x.clone())))
}

#[pyfunction]
fn four_mode_representation(space: PyRef<'_, PyFockSpace>) -> PyResult<BTreeMap<String, PyFockOperator>> {
    let set = jordan::four_mode_representation(space.0).py()?;
    Ok(labelled(&set, |x| PyFockOperator(x.clone())))
}

/// Jordan map of `m`; `kind` is `"bilinear"`, `"plus"` or `"minus"`.
#[pyfunction]
#[pyo3(signature = (m, space, kind="bilinear"))]
fn jordan_map(m: PyRef<'_, PyMatrix>, space: PyRef<'_, PyFockSpace>, kind: &str) -> PyResult<PyFockOperator> {
    let kind = match kind {
        "bilinear" => JordanKind::Bilinear,
        "plus" => JordanKind::Plus,
        "minus" => JordanKind::Minus,
        other => return Err(PyValueError::new_err(format!("unknown Jordan map '{other}'"))),
    };
    Ok(PyFockOperator(jordan::jordan_map(kind, &m.0, space.0).py()?))
}

#[pyfunction]
fn sp2n_basis(n: usize) -> PyResult<Vec<PyMatrix>> {
    Ok(matrices(jordan::sp2n_basis(n).py()?))
}

/// Quantized sp(2n) basis on `n` modes.
#[pyfunction]
fn minimal_representation(n: usize, space: PyRef<'_, PyFockSpace>) -> PyResult<Vec<PyFockOperator>> {
    let ops = jordan::minimal_representation(n, space.0).py()?;
    Ok(ops.into_iter().map(PyFockOperator).collect())
}

/// `(H, J)` from the composed pair of opposite-chirality oscillators.
#[pyfunction]
fn chiral_pair(space: PyRef<'_, PyFockSpace>) -> PyResult<(PyFockOperator, PyFockOperator)> {
    let (h, j) = desitter_core::chiral::compose_chiral_pair(space.0).py()?;
    Ok((PyFockOperator(h), PyFockOperator(j)))
}

/// `H`, `L3`, `J` or any generator label on the two-mode space.
#[pyfunction]
#[pyo3(signature = (name, cutoff=8))]
fn operator(name: &str, cutoff: usize) -> PyResult<PyFockOperator> {
    let space = FockSpace::new(2, cutoff).py()?;
    Ok(PyFockOperator(cli::named_operator(name, space).py()?))
}

/// `[(eigenvalue, multiplicity)]` of a named operator.
#[pyfunction]
#[pyo3(signature = (name, cutoff=8))]
fn spectrum(name: &str, cutoff: usize) -> PyResult<Vec<(f64, usize)>> {
    let space = FockSpace::new(2, cutoff).py()?;
    let op = cli::named_operator(name, space).py()?;
    Ok(fock::multiplicities(&fock::spectrum(&op).py()?, 1e-8))
}

/// Run a verification suite and return its report as a dict.
#[pyfunction]
#[pyo3(signature = (suite="all", cutoff=8, n=2))]
fn verify<'py>(py: Python<'py>, suite: &str, cutoff: usize, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let suite: Suite = suite.parse().py()?;
    let cfg = SuiteConfig { cutoff, n };
    suites::validate(suite, &cfg).py()?;
    let report = suites::run(suite, &cfg).py()?;
    let out = PyDict::new(py);
    out.set_item("suite", &report.suite)?;
    out.set_item("passed", report.passed)?;
    out.set_item("failed", report.failed)?;
    let checks = report
        .checks
        .iter()
        .map(|c| {
            let d = PyDict::new(py);
            d.set_item("label", &c.label)?;
            d.set_item("residual", c.residual)?;
            d.set_item("tolerance", c.tolerance)?;
            d.set_item("pass", c.pass)?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    out.set_item("checks", checks)?;
    Ok(out)
}

/// Text rendering of the generator, structure or polynomial table.
#[pyfunction]
#[pyo3(signature = (what="generators", n=2, format="pretty"))]
fn table(what: &str, n: usize, format: &str) -> PyResult<String> {
    let what = match what {
        "generators" => TableKind::Generators,
        "structure" => TableKind::Structure,
        "polynomials" => TableKind::Polynomials,
        other => return Err(PyValueError::new_err(format!("unknown table '{other}'"))),
    };
    let format = match format {
        "pretty" => Format::Pretty,
        "json" => Format::Json,
        "csv" => Format::Csv,
        other => return Err(PyValueError::new_err(format!("unknown format '{other}'"))),
    };
    cli::render_table(what, n, format).py()
}

#[pymodule(name = "desitter")]
pub fn desitter_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyQuadraticForm>()?;
    m.add_class::<PyFockSpace>()?;
    m.add_class::<PyFockOperator>()?;
    m.add_function(wrap_pyfunction!(pauli, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_j, m)?)?;
    m.add_function(wrap_pyfunction!(sp4_generators, m)?)?;
    m.add_function(wrap_pyfunction!(generator_labels, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(structure_constants, m)?)?;
    m.add_function(wrap_pyfunction!(quantize, m)?)?;
    m.add_function(wrap_pyfunction!(quantize_generator, m)?)?;
    m.add_function(wrap_pyfunction!(dirac_representation, m)?)?;
    m.add_function(wrap_pyfunction!(pipeline_representation, m)?)?;
    m.add_function(wrap_pyfunction!(four_mode_representation, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_map, m)?)?;
    m.add_function(wrap_pyfunction!(sp2n_basis, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_representation, m)?)?;
    m.add_function(wrap_pyfunction!(chiral_pair, m)?)?;
    m.add_function(wrap_pyfunction!(operator, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
