//! Python bindings: algebras as structure-constant objects, the checkers,
//! the constructions and the verification suites.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use homhopf::catalog::{lookup, CatalogEntry, CATALOG_NAMES};
use homhopf::constructions::{
    bicrossproduct, canonical_cocycles, co_opposite, cocycle_twist, drinfeld_double, drinfeld_double_tilde, dual,
    dual_pair_double, evaluation_pairing, heisenberg_double, opposite, self_bicross, Precheck,
};
use homhopf::exactlin::{format_scalar, Matrix, Scalar};
use homhopf::format::{self, dual_labels, pair_labels, AlgebraFile, Structure};
use homhopf::structures::{
    check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hopf_suite, check_quasitriangular, CheckReport,
    HomHopfAlgebra,
};
use homhopf::verify::{run_suite, SuiteKind};
use homhopf::HomError;

create_exception!(homhopf_py, HomHopfError, PyException);
create_exception!(homhopf_py, PreconditionError, HomHopfError);

fn err(e: HomError) -> PyErr {
    match e.report() {
        Some(r) => PreconditionError::new_err((e.to_string(), serde_json::to_string(r).unwrap_or_default())),
        None => HomHopfError::new_err(e.to_string()),
    }
}

fn fraction(py: Python<'_>, x: &Scalar) -> PyResult<Py<PyAny>> {
    Ok(py.import("fractions")?.getattr("Fraction")?.call1((format_scalar(x),))?.unbind())
}

fn json(py: Python<'_>, value: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| HomHopfError::new_err(e.to_string()))?;
    Ok(py.import("json")?.getattr("loads")?.call1((text,))?.unbind())
}

fn matrix(py: Python<'_>, m: &Matrix) -> PyResult<Vec<Vec<Py<PyAny>>>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| fraction(py, x)).collect()).collect()
}

/// `((j, k), coefficient)` of a coproduct.
type Term = ((usize, usize), Py<PyAny>);

fn precheck(force: bool) -> Precheck {
    if force {
        Precheck::Skip
    } else {
        Precheck::Verify
    }
}

/// A Hom-algebra, Hom-bialgebra or Hom-Hopf algebra given by exact
/// structure constants.
#[pyclass(module = "homhopf_py", frozen)]
pub struct Algebra {
    file: AlgebraFile,
    entry: Option<CatalogEntry>,
}

impl Algebra {
    fn from_file(file: AlgebraFile) -> Self {
        Algebra { file, entry: None }
    }

    fn structure(&self) -> PyResult<Structure> {
        self.file.structure().map_err(err)
    }

    fn hopf(&self) -> PyResult<HomHopfAlgebra> {
        self.file.hopf().map_err(err)
    }

    fn entry(&self) -> PyResult<CatalogEntry> {
        match &self.entry {
            Some(e) => Ok(e.clone()),
            None => self.file.to_entry().map_err(err),
        }
    }
}

#[pymethods]
impl Algebra {
    /// Catalog entry such as `ax1`, `cyclic:3` or `sweedler_hom:2`.
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let entry = lookup(name).map_err(err)?;
        Ok(Algebra { file: AlgebraFile::from_entry(&entry), entry: Some(entry) })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        format::parse(text).map(Algebra::from_file).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| HomHopfError::new_err(format!("{path}: {e}")))?;
        Self::parse(&text)
    }

    #[getter]
    fn name(&self) -> String {
        self.file.name.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.file.dim
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.file.basis.clone()
    }

    /// `"algebra"`, `"bialgebra"` or `"hopf"`.
    #[getter]
    fn level(&self) -> PyResult<&'static str> {
        Ok(match self.structure()? {
            Structure::Algebra(_) => "algebra",
            Structure::Bialgebra(_) => "bialgebra",
            Structure::Hopf(_) => "hopf",
        })
    }

    fn to_text(&self) -> String {
        format::serialize(&self.file)
    }

    fn digest(&self) -> String {
        format::digest(&format::serialize(&self.file))
    }

    /// Coordinates of `e_i e_j`.
    fn product(&self, py: Python<'_>, i: usize, j: usize) -> PyResult<Vec<Py<PyAny>>> {
        let s = self.structure()?;
        let mul = s.algebra().mul();
        let n = self.file.dim;
        if i >= n || j >= n {
            return Err(HomHopfError::new_err(format!("index out of range for dimension {n}")));
        }
        mul.fiber(i, j).iter().map(|x| fraction(py, x)).collect()
    }

    /// Nonzero coefficients of `Delta(e_i)` keyed by `(j, k)`.
    fn coproduct(&self, py: Python<'_>, i: usize) -> PyResult<Vec<Term>> {
        let s = self.structure()?;
        let b = s.bialgebra().ok_or_else(|| HomHopfError::new_err("no comultiplication"))?;
        let n = self.file.dim;
        if i >= n {
            return Err(HomHopfError::new_err(format!("index out of range for dimension {n}")));
        }
        b.comul()
            .nonzero()
            .filter(|((a, _, _), _)| *a == i)
            .map(|((_, j, k), v)| Ok(((j, k), fraction(py, v)?)))
            .collect()
    }

    /// Structure map as a row-image matrix.
    fn alpha(&self, py: Python<'_>) -> PyResult<Vec<Vec<Py<PyAny>>>> {
        matrix(py, self.structure()?.algebra().alpha())
    }

    fn antipode(&self, py: Python<'_>) -> PyResult<Vec<Vec<Py<PyAny>>>> {
        matrix(py, self.hopf()?.antipode())
    }

    /// Runs the checkers up to `level` and returns the report as a dict.
    #[pyo3(signature = (level = "hopf"))]
    fn check(&self, py: Python<'_>, level: &str) -> PyResult<Py<PyAny>> {
        let s = self.structure()?;
        let need_bi = || s.bialgebra().ok_or_else(|| HomHopfError::new_err(format!("level {level} needs a coalgebra")));
        let mut r = CheckReport::new();
        match level {
            "algebra" => r.extend(check_hom_algebra(s.algebra())),
            "coalgebra" => r.extend(check_hom_coalgebra(need_bi()?.coalgebra())),
            "bialgebra" | "quasitriangular" => {
                let b = need_bi()?;
                r.extend_prefixed("algebra", check_hom_algebra(b.algebra()));
                r.extend_prefixed("coalgebra", check_hom_coalgebra(b.coalgebra()));
                r.extend_prefixed("bialgebra", check_hom_bialgebra(b));
                if level == "quasitriangular" {
                    let rm = self.file.r_matrix().map_err(err)?.ok_or_else(|| HomHopfError::new_err("no R-matrix"))?;
                    r.extend_prefixed("quasitriangular", check_quasitriangular(b, &rm));
                }
            }
            "hopf" => r.extend(check_hopf_suite(&self.hopf()?)),
            other => return Err(HomHopfError::new_err(format!("unknown level {other:?}"))),
        }
        json(py, &r)
    }

    fn dual(&self) -> PyResult<Self> {
        let d = dual(&self.hopf()?).map_err(err)?;
        Ok(Self::from_file(AlgebraFile::from_hopf(
            &format!("dual({})", self.file.name),
            Some(dual_labels(&self.file.basis)),
            &d,
        )))
    }

    fn opposite(&self) -> PyResult<Self> {
        let o = opposite(&self.hopf()?);
        Ok(Self::from_file(AlgebraFile::from_hopf(
            &format!("op({})", self.file.name),
            Some(self.file.basis.clone()),
            &o,
        )))
    }

    fn co_opposite(&self) -> PyResult<Self> {
        let o = co_opposite(&self.hopf()?);
        Ok(Self::from_file(AlgebraFile::from_hopf(
            &format!("coop({})", self.file.name),
            Some(self.file.basis.clone()),
            &o,
        )))
    }

    /// Drinfel'd double on `H^op (x) H*`.
    fn double(&self) -> PyResult<Self> {
        let d = drinfeld_double(&self.hopf()?).map_err(err)?;
        let labels = pair_labels(&self.file.basis, "|", &dual_labels(&self.file.basis));
        Ok(Self::from_file(AlgebraFile::from_hopf(&format!("double({})", self.file.name), Some(labels), &d)))
    }

    /// Second form of the double on `(A^op)* (x) A`.
    fn double_tilde(&self) -> PyResult<Self> {
        let d = drinfeld_double_tilde(&self.hopf()?).map_err(err)?;
        let labels = pair_labels(&dual_labels(&self.file.basis), "|", &self.file.basis);
        Ok(Self::from_file(AlgebraFile::from_bialgebra(&format!("double_tilde({})", self.file.name), Some(labels), &d)))
    }

    fn heisenberg(&self) -> PyResult<Self> {
        let h = heisenberg_double(&self.hopf()?).map_err(err)?;
        let labels = pair_labels(&self.file.basis, ".", &dual_labels(&self.file.basis));
        Ok(Self::from_file(AlgebraFile::from_algebra(&format!("heisenberg({})", self.file.name), Some(labels), &h)))
    }

    /// Bicrossproduct with the bundled actor, action and coaction.
    #[pyo3(signature = (force = false))]
    fn bicross(&self, force: bool) -> PyResult<Self> {
        let b = self
            .file
            .bicross()
            .map_err(err)?
            .ok_or_else(|| HomHopfError::new_err("no action, coaction and actor data"))?;
        let d = bicrossproduct(&self.hopf()?, &b.actor, &b.action, &b.coaction, precheck(force)).map_err(err)?;
        let labels = pair_labels(&self.file.basis, ".", &b.actor_basis);
        Ok(Self::from_file(AlgebraFile::from_hopf(&format!("bicross({})", self.file.name), Some(labels), &d)))
    }

    #[pyo3(signature = (force = false))]
    fn self_bicross(&self, force: bool) -> PyResult<Self> {
        let d = self_bicross(&self.hopf()?, precheck(force)).map_err(err)?;
        let labels = pair_labels(&self.file.basis, "x", &self.file.basis);
        Ok(Self::from_file(AlgebraFile::from_hopf(&format!("self_bicross({})", self.file.name), Some(labels), &d)))
    }

    /// Double of the evaluation dual pair `(H^op, H*)`.
    #[pyo3(signature = (force = false))]
    fn dual_pair_double(&self, force: bool) -> PyResult<Self> {
        let p = evaluation_pairing(&self.hopf()?).map_err(err)?;
        let d = dual_pair_double(&p, precheck(force)).map_err(err)?;
        let labels = pair_labels(&self.file.basis, "|", &dual_labels(&self.file.basis));
        Ok(Self::from_file(AlgebraFile::from_hopf(
            &format!("dual_pair_double({})", self.file.name),
            Some(labels),
            &d.hopf,
        )))
    }

    /// The canonical pair `(sigma, eta)` on the double and its second form.
    fn cocycles(&self) -> PyResult<(Cocycle, Cocycle)> {
        let (s, e) = canonical_cocycles(&self.hopf()?).map_err(err)?;
        let name = &self.file.name;
        Ok((
            Cocycle { file: AlgebraFile::from_cocycle(&format!("sigma({name})"), &s) },
            Cocycle { file: AlgebraFile::from_cocycle(&format!("eta({name})"), &e) },
        ))
    }

    /// Twists the product of this Hom-bialgebra by a 2-cocycle.
    #[pyo3(signature = (cocycle, force = false))]
    fn twist(&self, cocycle: &Cocycle, force: bool) -> PyResult<Self> {
        let s = self.structure()?;
        let b = s.bialgebra().ok_or_else(|| HomHopfError::new_err("twisting needs a Hom-bialgebra"))?;
        let sigma = cocycle.file.cocycle().map_err(err)?.ok_or_else(|| HomHopfError::new_err("no cocycle block"))?;
        let t = cocycle_twist(b, &sigma, precheck(force)).map_err(err)?;
        Ok(Self::from_file(AlgebraFile::from_algebra(
            &format!("twist({})", self.file.name),
            Some(self.file.basis.clone()),
            &t,
        )))
    }

    /// Same structure constants, ignoring names and labels.
    fn same_structure(&self, other: &Algebra) -> bool {
        self.file.dim == other.file.dim && self.file.blocks == other.file.blocks
    }

    fn __repr__(&self) -> String {
        format!("Algebra({:?}, dim={})", self.file.name, self.file.dim)
    }
}

/// A left or right 2-cocycle on a Hom-bialgebra.
#[pyclass(module = "homhopf_py", frozen)]
pub struct Cocycle {
    file: AlgebraFile,
}

#[pymethods]
impl Cocycle {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let file = format::parse(text).map_err(err)?;
        file.cocycle().map_err(err)?.ok_or_else(|| HomHopfError::new_err("no cocycle block"))?;
        Ok(Cocycle { file })
    }

    #[getter]
    fn side(&self) -> PyResult<&'static str> {
        let c = self.file.cocycle().map_err(err)?.ok_or_else(|| HomHopfError::new_err("no cocycle block"))?;
        Ok(c.side.as_str())
    }

    fn to_text(&self) -> String {
        format::serialize(&self.file)
    }

    fn __repr__(&self) -> String {
        format!("Cocycle({:?})", self.file.name)
    }
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    CATALOG_NAMES.to_vec()
}

#[pyfunction]
fn suite_names() -> Vec<&'static str> {
    SuiteKind::ALL.iter().map(|k| k.as_str()).collect()
}

/// Runs a verification suite and returns its result as a dict.
#[pyfunction]
fn verify(py: Python<'_>, suite: &str, algebra: &Algebra) -> PyResult<Py<PyAny>> {
    let kind: SuiteKind = suite.parse().map_err(err)?;
    let result = run_suite(kind, &algebra.entry()?).map_err(err)?;
    json(py, &result)
}

#[pymodule]
pub fn homhopf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<Cocycle>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("HomHopfError", m.py().get_type::<HomHopfError>())?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    Ok(())
}
