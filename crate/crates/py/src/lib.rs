//! Python bindings for the dialtop library: degrees, frames, relation
//! objects and morphisms, fuzzy topological systems, and the law suites.
//!
//! Degrees cross the boundary as strings ("0.3", "2/3") so everything
//! stays exact; mathematical failures raise `ValueError` carrying the
//! witness text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

use dialtop::degrees::Degree;
use dialtop::dialectica::{self, DialMorphism, DialObject, FuzzyRelation, DEFAULT_SIZE_BOUND};
use dialtop::frames::{frame_product, tensor_frame, FiniteFrame, DEFAULT_TENSOR_BOUND};
use dialtop::oracle::{
    adjunction_suite, check_category_laws, closure_suite, fullness_search, iso_frames,
    iso_objects, sum_coproduct_suite, universal_suite, InstanceBudget, IsoResult, LawReport,
};
use dialtop::topsys::{self, FuzzyTopSystem, GammaCombine};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_degree(text: &str) -> PyResult<Degree> {
    text.parse().map_err(value_error)
}

// ---------------------------------------------------------------------
// Degree
// ---------------------------------------------------------------------

#[pyclass(name = "Degree", frozen, eq, ord, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyDegree(Degree);

#[pymethods]
impl PyDegree {
    /// Degree("0.3") or Degree("3/10") — exact either way.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyDegree(parse_degree(text)?))
    }

    #[classmethod]
    fn zero(_cls: &Bound<'_, PyType>) -> Self {
        PyDegree(Degree::zero())
    }

    #[classmethod]
    fn one(_cls: &Bound<'_, PyType>) -> Self {
        PyDegree(Degree::one())
    }

    #[classmethod]
    fn fraction(_cls: &Bound<'_, PyType>, numerator: u64, denominator: u64) -> PyResult<Self> {
        Degree::new(numerator, denominator).map(PyDegree).map_err(value_error)
    }

    #[getter]
    fn numerator(&self) -> u64 {
        self.0.numer()
    }

    #[getter]
    fn denominator(&self) -> u64 {
        self.0.denom()
    }

    fn meet(&self, other: &PyDegree) -> Self {
        PyDegree(self.0.meet(other.0))
    }

    fn join(&self, other: &PyDegree) -> Self {
        PyDegree(self.0.join(other.0))
    }

    /// Gödel implication: 1 when self ≤ other, else other.
    fn implies(&self, other: &PyDegree) -> Self {
        PyDegree(self.0.implies(other.0))
    }

    fn complement(&self) -> Self {
        PyDegree(self.0.complement())
    }

    fn is_crisp(&self) -> bool {
        self.0.is_crisp()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Degree({:?})", self.0.to_string())
    }
}

// ---------------------------------------------------------------------
// Frame
// ---------------------------------------------------------------------

#[pyclass(name = "Frame", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyFrame(FiniteFrame);

#[pymethods]
impl PyFrame {
    /// Frame(elements, leq_pairs): the reflexive-transitive closure is
    /// computed here; raises ValueError when the result is not a frame.
    #[new]
    fn new(elements: Vec<String>, leq: Vec<(String, String)>) -> PyResult<Self> {
        FiniteFrame::validate(&elements, &leq).map(PyFrame).map_err(value_error)
    }

    #[classmethod]
    fn chain(_cls: &Bound<'_, PyType>, names: Vec<String>) -> PyResult<Self> {
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        FiniteFrame::chain(&refs).map(PyFrame).map_err(value_error)
    }

    #[classmethod]
    fn diamond(_cls: &Bound<'_, PyType>, bottom: &str, a: &str, b: &str, top: &str) -> PyResult<Self> {
        FiniteFrame::diamond(bottom, a, b, top).map(PyFrame).map_err(value_error)
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.0.elements().to_vec()
    }

    #[getter]
    fn top(&self) -> String {
        self.0.element_name(self.0.top()).to_string()
    }

    #[getter]
    fn bottom(&self) -> String {
        self.0.element_name(self.0.bottom()).to_string()
    }

    fn leq(&self, a: &str, b: &str) -> PyResult<bool> {
        let ia = self.0.index_of(a).map_err(value_error)?;
        let ib = self.0.index_of(b).map_err(value_error)?;
        Ok(self.0.leq(ia, ib))
    }

    fn meet(&self, a: &str, b: &str) -> PyResult<String> {
        self.0.meet_by_name(a, b).map(str::to_string).map_err(value_error)
    }

    fn join(&self, a: &str, b: &str) -> PyResult<String> {
        self.0.join_by_name(a, b).map(str::to_string).map_err(value_error)
    }

    fn product(&self, other: &PyFrame) -> PyResult<Self> {
        frame_product(&self.0, &other.0).map(PyFrame).map_err(value_error)
    }

    /// The frame tensor product, fully enumerated (gated by `bound`).
    #[pyo3(signature = (other, bound = DEFAULT_TENSOR_BOUND))]
    fn tensor(&self, other: &PyFrame, bound: usize) -> PyResult<Self> {
        tensor_frame(&self.0, &other.0, bound)
            .map(|t| PyFrame(t.frame().clone()))
            .map_err(value_error)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Frame({:?})", self.0.elements())
    }
}

// ---------------------------------------------------------------------
// Objects and morphisms
// ---------------------------------------------------------------------

fn relation_from_triples(
    points: &[String],
    opens: &[String],
    alpha: Vec<(String, String, String)>,
) -> PyResult<FuzzyRelation> {
    let mut entries = Vec::with_capacity(alpha.len());
    for (p, x, d) in alpha {
        let u = points
            .iter()
            .position(|n| n == &p)
            .ok_or_else(|| value_error(format!("unknown point {p:?}")))?;
        let xi = opens
            .iter()
            .position(|n| n == &x)
            .ok_or_else(|| value_error(format!("unknown open {x:?}")))?;
        entries.push((u, xi, parse_degree(&d)?));
    }
    FuzzyRelation::from_entries(points.len(), opens.len(), points, opens, &entries)
        .map_err(value_error)
}

#[pyclass(name = "DialObject", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDialObject(DialObject);

#[pymethods]
impl PyDialObject {
    /// DialObject(points, opens, alpha) with alpha a list of
    /// (point, open, degree-string) triples covering the whole table.
    #[new]
    fn new(
        points: Vec<String>,
        opens: Vec<String>,
        alpha: Vec<(String, String, String)>,
    ) -> PyResult<Self> {
        let relation = relation_from_triples(&points, &opens, alpha)?;
        DialObject::new(points, opens, relation).map(PyDialObject).map_err(value_error)
    }

    #[classmethod]
    fn unit(_cls: &Bound<'_, PyType>) -> Self {
        PyDialObject(DialObject::unit())
    }

    #[getter]
    fn points(&self) -> Vec<String> {
        self.0.points().to_vec()
    }

    #[getter]
    fn opens(&self) -> Vec<String> {
        self.0.opens().to_vec()
    }

    fn alpha(&self, point: &str, open: &str) -> PyResult<PyDegree> {
        let u = self.0.point_index(point).map_err(value_error)?;
        let x = self.0.open_index(open).map_err(value_error)?;
        Ok(PyDegree(self.0.alpha(u, x)))
    }

    fn __repr__(&self) -> String {
        format!(
            "DialObject(points={}, opens={})",
            self.0.points().len(),
            self.0.opens().len()
        )
    }
}

#[pyclass(name = "Morphism", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMorphism(DialMorphism);

#[pymethods]
impl PyMorphism {
    #[getter]
    fn source(&self) -> PyDialObject {
        PyDialObject(self.0.source().clone())
    }

    #[getter]
    fn target(&self) -> PyDialObject {
        PyDialObject(self.0.target().clone())
    }

    /// The point map as (source point, target point) pairs.
    #[getter]
    fn f(&self) -> Vec<(String, String)> {
        self.0
            .point_map()
            .iter()
            .enumerate()
            .map(|(u, &v)| {
                (
                    self.0.source().points()[u].clone(),
                    self.0.target().points()[v].clone(),
                )
            })
            .collect()
    }

    /// The open map as (target open, source open) pairs.
    #[getter]
    fn g(&self) -> Vec<(String, String)> {
        self.0
            .open_map()
            .iter()
            .enumerate()
            .map(|(y, &x)| {
                (
                    self.0.target().opens()[y].clone(),
                    self.0.source().opens()[x].clone(),
                )
            })
            .collect()
    }

    /// Diagram-order composition; raises when endpoints differ.
    fn compose(&self, other: &PyMorphism) -> PyResult<PyMorphism> {
        dialectica::compose(&self.0, &other.0).map(PyMorphism).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("Morphism(f={:?}, g={:?})", self.0.point_map(), self.0.open_map())
    }
}

/// Checks `α(u, g(y)) ≤ β(f(u), y)` and returns the morphism; the
/// ValueError carries the first failing witness.
#[pyfunction]
fn verify_morphism(
    source: &PyDialObject,
    target: &PyDialObject,
    f: Vec<(String, String)>,
    g: Vec<(String, String)>,
) -> PyResult<PyMorphism> {
    dialectica::verify_morphism_named(&source.0, &target.0, &f, &g)
        .map(PyMorphism)
        .map_err(value_error)
}

#[pyfunction]
fn identity(obj: &PyDialObject) -> PyMorphism {
    PyMorphism(dialectica::identity(&obj.0))
}

#[pyfunction]
#[pyo3(signature = (a, b, bound = DEFAULT_SIZE_BOUND))]
fn tensor(a: &PyDialObject, b: &PyDialObject, bound: usize) -> PyResult<PyDialObject> {
    dialectica::tensor_obj(&a.0, &b.0, bound).map(PyDialObject).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (a, b, bound = DEFAULT_SIZE_BOUND))]
fn hom(a: &PyDialObject, b: &PyDialObject, bound: usize) -> PyResult<PyDialObject> {
    dialectica::hom_obj(&a.0, &b.0, bound).map(PyDialObject).map_err(value_error)
}

#[pyfunction]
fn product(a: &PyDialObject, b: &PyDialObject) -> PyDialObject {
    PyDialObject(dialectica::product_obj(&a.0, &b.0))
}

#[pyfunction]
fn coproduct(a: &PyDialObject, b: &PyDialObject) -> PyDialObject {
    PyDialObject(dialectica::coproduct_obj(&a.0, &b.0))
}

#[pyfunction]
#[pyo3(signature = (a, b, c, m, bound = DEFAULT_SIZE_BOUND))]
fn curry(
    a: &PyDialObject,
    b: &PyDialObject,
    c: &PyDialObject,
    m: &PyMorphism,
    bound: usize,
) -> PyResult<PyMorphism> {
    dialectica::curry(&a.0, &b.0, &c.0, &m.0, bound).map(PyMorphism).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (a, b, c, n, bound = DEFAULT_SIZE_BOUND))]
fn uncurry(
    a: &PyDialObject,
    b: &PyDialObject,
    c: &PyDialObject,
    n: &PyMorphism,
    bound: usize,
) -> PyResult<PyMorphism> {
    dialectica::uncurry(&a.0, &b.0, &c.0, &n.0, bound).map(PyMorphism).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (a, b, bound = DEFAULT_SIZE_BOUND))]
fn enumerate_morphisms(
    a: &PyDialObject,
    b: &PyDialObject,
    bound: usize,
) -> PyResult<Vec<PyMorphism>> {
    dialectica::enumerate_morphisms(&a.0, &b.0, bound)
        .map(|ms| ms.into_iter().map(PyMorphism).collect())
        .map_err(value_error)
}

// ---------------------------------------------------------------------
// Fuzzy topological systems
// ---------------------------------------------------------------------

#[pyclass(name = "System", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PySystem(FuzzyTopSystem);

#[pymethods]
impl PySystem {
    /// System(points, frame, alpha) with alpha (point, open, degree)
    /// triples. Structure is checked here; the axioms run in validate().
    #[new]
    fn new(
        points: Vec<String>,
        frame: &PyFrame,
        alpha: Vec<(String, String, String)>,
    ) -> PyResult<Self> {
        let relation = relation_from_triples(&points, frame.0.elements(), alpha)?;
        FuzzyTopSystem::new(points, frame.0.clone(), relation)
            .map(PySystem)
            .map_err(value_error)
    }

    #[getter]
    fn points(&self) -> Vec<String> {
        self.0.points().to_vec()
    }

    #[getter]
    fn frame(&self) -> PyFrame {
        PyFrame(self.0.frame().clone())
    }

    fn alpha(&self, point: &str, open: &str) -> PyResult<PyDegree> {
        let u = self.0.point_index(point).map_err(value_error)?;
        let x = self.0.frame().index_of(open).map_err(value_error)?;
        Ok(PyDegree(self.0.alpha(u, x)))
    }

    /// Raises ValueError naming the violated condition and witness.
    fn validate(&self) -> PyResult<()> {
        self.0.validate().map_err(value_error)
    }

    /// Every axiom violation as witness text; empty means valid.
    fn report(&self) -> Vec<String> {
        self.0.report().violations.iter().map(|v| v.to_string()).collect()
    }

    fn is_crisp(&self) -> bool {
        self.0.is_crisp()
    }

    fn extent(&self, open: &str) -> PyResult<Vec<(String, PyDegree)>> {
        let set = topsys::extent_by_name(&self.0, open).map_err(value_error)?;
        Ok(set
            .universe()
            .iter()
            .cloned()
            .zip(set.membership().iter().map(|&d| PyDegree(d)))
            .collect())
    }

    fn underlying_object(&self) -> PyDialObject {
        PyDialObject(self.0.underlying_object())
    }

    fn __repr__(&self) -> String {
        format!(
            "System(points={}, opens={})",
            self.0.points().len(),
            self.0.frame().len()
        )
    }
}

/// Embeds a crisp satisfaction set after checking the crisp axioms.
#[pyfunction]
fn embed_crisp(
    points: Vec<String>,
    frame: &PyFrame,
    sat: Vec<(String, String)>,
) -> PyResult<PySystem> {
    topsys::embed_crisp(&points, &frame.0, &sat).map(PySystem).map_err(value_error)
}

/// Verifies a continuous map (frame homomorphism + degree inequality)
/// between systems; arguments are name pairs as in verify_morphism.
#[pyfunction]
fn verify_continuous(
    source: &PySystem,
    target: &PySystem,
    f: Vec<(String, String)>,
    phi: Vec<(String, String)>,
) -> PyResult<PyMorphism> {
    let f_idx: Vec<usize> = {
        let mut out = vec![usize::MAX; source.0.points().len()];
        for (from, to) in &f {
            let i = source.0.point_index(from).map_err(value_error)?;
            let j = target.0.point_index(to).map_err(value_error)?;
            out[i] = j;
        }
        if out.contains(&usize::MAX) {
            return Err(value_error("point map is not total"));
        }
        out
    };
    let phi_idx: Vec<usize> = {
        let mut out = vec![usize::MAX; target.0.frame().len()];
        for (from, to) in &phi {
            let i = target.0.frame().index_of(from).map_err(value_error)?;
            let j = source.0.frame().index_of(to).map_err(value_error)?;
            out[i] = j;
        }
        if out.contains(&usize::MAX) {
            return Err(value_error("open map is not total"));
        }
        out
    };
    topsys::verify_continuous(&source.0, &target.0, f_idx, phi_idx)
        .map(|c| PyMorphism(c.as_dial_morphism()))
        .map_err(value_error)
}

/// Returns (passes, extent_count, failure descriptions).
#[pyfunction]
fn extents_form_topology(system: &PySystem) -> (bool, usize, Vec<String>) {
    let report = topsys::extents_form_topology(&system.0);
    let mut failures = Vec::new();
    if !report.has_constant_zero {
        failures.push("constant 0 missing".to_string());
    }
    if !report.has_constant_one {
        failures.push("constant 1 missing".to_string());
    }
    for f in &report.min_failures {
        failures.push(format!("min of extents({}, {}) is not an extent", f.x, f.y));
    }
    for f in &report.max_failures {
        failures.push(format!("max of extents({}, {}) is not an extent", f.x, f.y));
    }
    (report.passes(), report.extent_count, failures)
}

/// Topological product over the tensor frame. Returns the system and
/// its validation report lines (empty when the axioms hold).
#[pyfunction]
#[pyo3(signature = (a, b, bound = DEFAULT_TENSOR_BOUND))]
fn top_product(a: &PySystem, b: &PySystem, bound: usize) -> PyResult<(PySystem, Vec<String>)> {
    topsys::top_product(&a.0, &b.0, bound, GammaCombine::Max)
        .map(|(system, report, _)| {
            let lines = report.violations.iter().map(|v| v.to_string()).collect();
            (PySystem(system), lines)
        })
        .map_err(value_error)
}

/// Topological sum over the product frame; identical to the coproduct
/// of the underlying objects.
#[pyfunction]
fn top_sum(a: &PySystem, b: &PySystem) -> PyResult<(PySystem, Vec<String>)> {
    topsys::top_sum(&a.0, &b.0)
        .map(|(system, report)| {
            let lines = report.violations.iter().map(|v| v.to_string()).collect();
            (PySystem(system), lines)
        })
        .map_err(value_error)
}

/// Satisfaction degrees of degree streams against a 0/1 prefix.
#[pyfunction]
fn demo_bitstream(streams: Vec<Vec<String>>, prefix: &str) -> PyResult<Vec<PyDegree>> {
    let parsed: Vec<Vec<Degree>> = streams
        .into_iter()
        .map(|s| s.iter().map(|d| parse_degree(d)).collect::<PyResult<_>>())
        .collect::<PyResult<_>>()?;
    topsys::demo_bitstream(&parsed, prefix)
        .map(|ds| ds.into_iter().map(PyDegree).collect())
        .map_err(value_error)
}

// ---------------------------------------------------------------------
// Law suites and isomorphism checks
// ---------------------------------------------------------------------

fn report_tuple(report: LawReport) -> (bool, usize, Vec<String>) {
    let mut lines: Vec<String> = report
        .failures
        .iter()
        .map(|f| format!("instance {}: {}", f.instance, f.witness))
        .collect();
    lines.extend(report.findings.iter().cloned());
    (report.passed(), report.instances, lines)
}

fn budget(seed: u64, max_points: usize, max_opens: usize, max_denominator: u64) -> InstanceBudget {
    InstanceBudget {
        max_points,
        max_opens,
        max_denominator,
        seed,
    }
}

/// Associativity and identity laws on seeded random chains.
/// Returns (passed, instances, failure lines).
#[pyfunction]
#[pyo3(signature = (seed = 0, instances = 100, max_points = 3, max_opens = 3, max_denominator = 6))]
fn category_laws(
    seed: u64,
    instances: usize,
    max_points: usize,
    max_opens: usize,
    max_denominator: u64,
) -> (bool, usize, Vec<String>) {
    report_tuple(check_category_laws(
        &budget(seed, max_points, max_opens, max_denominator),
        instances,
    ))
}

/// Hom-set bijection of the currying adjunction on seeded triples.
#[pyfunction]
#[pyo3(signature = (seed = 0, instances = 10, max_points = 2, max_opens = 2, max_denominator = 6))]
fn monoidal_closure_laws(
    seed: u64,
    instances: usize,
    max_points: usize,
    max_opens: usize,
    max_denominator: u64,
) -> PyResult<(bool, usize, Vec<String>)> {
    adjunction_suite(
        &budget(seed, max_points, max_opens, max_denominator),
        instances,
        DEFAULT_SIZE_BOUND,
    )
    .map(report_tuple)
    .map_err(value_error)
}

/// Existence and uniqueness of product/coproduct mediators.
#[pyfunction]
#[pyo3(signature = (seed = 0, instances = 10, max_points = 2, max_opens = 2, max_denominator = 6))]
fn universal_property_laws(
    seed: u64,
    instances: usize,
    max_points: usize,
    max_opens: usize,
    max_denominator: u64,
) -> PyResult<(bool, usize, Vec<String>)> {
    universal_suite(
        &budget(seed, max_points, max_opens, max_denominator),
        instances,
        DEFAULT_SIZE_BOUND,
    )
    .map(report_tuple)
    .map_err(value_error)
}

/// Closure-operator laws of the C-ideal closure.
#[pyfunction]
#[pyo3(signature = (seed = 0, instances = 100))]
fn closure_laws(seed: u64, instances: usize) -> (bool, usize, Vec<String>) {
    report_tuple(closure_suite(&budget(seed, 2, 2, 6), instances, 12))
}

/// Structural identity of topological sum and categorical coproduct.
#[pyfunction]
#[pyo3(signature = (seed = 0, instances = 10))]
fn sum_coproduct_laws(seed: u64, instances: usize) -> (bool, usize, Vec<String>) {
    report_tuple(sum_coproduct_suite(&budget(seed, 3, 3, 6), instances))
}

/// Classifies every morphism between the given crisp systems; findings
/// list the non-topological ones.
#[pyfunction]
fn fullness(systems: Vec<(String, PySystem)>) -> PyResult<(bool, usize, Vec<String>)> {
    let unwrapped: Vec<(String, FuzzyTopSystem)> =
        systems.into_iter().map(|(n, s)| (n, s.0)).collect();
    fullness_search(&unwrapped, DEFAULT_SIZE_BOUND)
        .map(report_tuple)
        .map_err(value_error)
}

fn iso_text(result: IsoResult) -> String {
    match result {
        IsoResult::Identical => "identical".to_string(),
        IsoResult::Isomorphic { .. } => "isomorphic".to_string(),
        IsoResult::NotIsomorphic { reason } => format!("not isomorphic: {reason}"),
    }
}

/// "identical", "isomorphic", or "not isomorphic: <reason>".
#[pyfunction]
fn frames_isomorphic(a: &PyFrame, b: &PyFrame) -> String {
    iso_text(iso_frames(&a.0, &b.0))
}

#[pyfunction]
fn objects_isomorphic(a: &PyDialObject, b: &PyDialObject) -> PyResult<String> {
    iso_objects(&a.0, &b.0, DEFAULT_SIZE_BOUND)
        .map(iso_text)
        .map_err(value_error)
}

#[pymodule]
fn dialtop_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDegree>()?;
    m.add_class::<PyFrame>()?;
    m.add_class::<PyDialObject>()?;
    m.add_class::<PyMorphism>()?;
    m.add_class::<PySystem>()?;
    m.add_function(wrap_pyfunction!(verify_morphism, m)?)?;
    m.add_function(wrap_pyfunction!(identity, m)?)?;
    m.add_function(wrap_pyfunction!(tensor, m)?)?;
    m.add_function(wrap_pyfunction!(hom, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(coproduct, m)?)?;
    m.add_function(wrap_pyfunction!(curry, m)?)?;
    m.add_function(wrap_pyfunction!(uncurry, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_morphisms, m)?)?;
    m.add_function(wrap_pyfunction!(embed_crisp, m)?)?;
    m.add_function(wrap_pyfunction!(verify_continuous, m)?)?;
    m.add_function(wrap_pyfunction!(extents_form_topology, m)?)?;
    m.add_function(wrap_pyfunction!(top_product, m)?)?;
    m.add_function(wrap_pyfunction!(top_sum, m)?)?;
    m.add_function(wrap_pyfunction!(demo_bitstream, m)?)?;
    m.add_function(wrap_pyfunction!(category_laws, m)?)?;
    m.add_function(wrap_pyfunction!(monoidal_closure_laws, m)?)?;
    m.add_function(wrap_pyfunction!(universal_property_laws, m)?)?;
    m.add_function(wrap_pyfunction!(closure_laws, m)?)?;
    m.add_function(wrap_pyfunction!(sum_coproduct_laws, m)?)?;
    m.add_function(wrap_pyfunction!(fullness, m)?)?;
    m.add_function(wrap_pyfunction!(frames_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(objects_isomorphic, m)?)?;
    Ok(())
}
