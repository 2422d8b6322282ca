//! Fuzzy topological systems: objects `(U, α, X)` whose opens form a
//! finite frame and whose satisfaction relation obeys
//!
//! * (i)   `α(u, x ∧ y) ≤ α(u, x)` and `≤ α(u, y)`,
//! * (ii)  `α(u, x ∨ y) ≤ max(α(u, x), α(u, y))`,
//! * (iii) `α(u, ⊤) = 1` and `α(u, ⊥) = 0`.
//!
//! The axioms are checked in binary form. On a finite frame that is the
//! whole story: for (i), `α(u, ⋀S) ≤ α(u, x)` for every `x` in a finite
//! nonempty `S` follows from the binary case by induction on `|S|`, the
//! empty meet being `⊤` and covered by (iii). For (ii), a finite join
//! `⋁S` is a binary join of smaller joins, so by induction the bound
//! `α(u, ⋁S) ≤ α(u, x)` holds for some `x ∈ S` whenever `S` is nonempty;
//! the empty join is `⊥`, again covered by (iii) — "for some x in the
//! empty set" is unsatisfiable, which is why (ii) is only meaningful for
//! nonempty subsets.
//!
//! Note that (i), (ii) and monotonicity (a consequence of (i)) force
//! `α(u, x ∨ y) = max(α(u, x), α(u, y))`: satisfaction is always a
//! join-preserving valuation on the frame.

use thiserror::Error;

use crate::degrees::{join_all, Degree};
use crate::dialectica::{DialError, DialMorphism, DialObject, FuzzyRelation};
use crate::frames::{
    frame_product, pair_name, tensor_frame, CIdeal, FiniteFrame, FrameError, FrameHom,
    FrameHomError, TensorFrame,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("condition (i) fails at point {point:?}: α(u, {x:?} ∧ {y:?}) = {lhs} > {rhs} = min of the sides")]
    ConditionI {
        point: String,
        x: String,
        y: String,
        lhs: Degree,
        rhs: Degree,
    },
    #[error("condition (ii) fails at point {point:?}: α(u, {x:?} ∨ {y:?}) = {lhs} > {rhs} = max of the sides")]
    ConditionII {
        point: String,
        x: String,
        y: String,
        lhs: Degree,
        rhs: Degree,
    },
    #[error("condition (iii) fails at point {point:?}: α(u, {open:?}) = {got}, expected {want}")]
    ConditionIII {
        point: String,
        open: String,
        got: Degree,
        want: Degree,
    },
    #[error("not a topological system: {axiom} axiom fails at point {point:?} on {witness}")]
    NotATopologicalSystem {
        axiom: String,
        point: String,
        witness: String,
    },
    #[error("open map is not a frame homomorphism: {0}")]
    NotFrameHom(#[from] FrameHomError),
    #[error("continuity fails at ({point:?}, {open:?}): {lhs} > {rhs}")]
    ConditionViolated {
        point: String,
        open: String,
        lhs: Degree,
        rhs: Degree,
    },
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Structure(#[from] DialError),
    #[error("stream {stream} has {got} entries but the prefix needs {needed}")]
    StreamTooShort {
        stream: usize,
        needed: usize,
        got: usize,
    },
    #[error("prefix may contain only 0 and 1, found {0:?}")]
    InvalidPrefix(char),
}

/// Full axiom scan: every violation, not just the first. `validate`
/// wraps this and fails on the first entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SystemReport {
    pub violations: Vec<SystemError>,
}

impl SystemReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A fuzzy topological system. Construction checks only structure
/// (totality of the table, distinct names); the axioms are checked by
/// [`FuzzyTopSystem::validate`], so deliberately invalid systems can be
/// built and loaded for negative tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyTopSystem {
    points: Vec<String>,
    frame: FiniteFrame,
    alpha: FuzzyRelation,
}

impl FuzzyTopSystem {
    pub fn new(
        points: Vec<String>,
        frame: FiniteFrame,
        alpha: FuzzyRelation,
    ) -> Result<Self, SystemError> {
        if points.is_empty() {
            return Err(SystemError::Structure(DialError::EmptyCarrier));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(SystemError::Structure(DialError::DuplicateName(p.clone())));
            }
        }
        if alpha.rows() != points.len() || alpha.cols() != frame.len() {
            return Err(SystemError::Structure(DialError::TableSizeMismatch {
                got: alpha.rows() * alpha.cols(),
                want: points.len() * frame.len(),
            }));
        }
        Ok(FuzzyTopSystem {
            points,
            frame,
            alpha,
        })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn alpha(&self, u: usize, x: usize) -> Degree {
        self.alpha.get(u, x)
    }

    pub fn relation(&self) -> &FuzzyRelation {
        &self.alpha
    }

    pub fn point_index(&self, name: &str) -> Result<usize, DialError> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| DialError::UnknownName(name.to_string()))
    }

    /// Forgets the frame structure, leaving the plain relation object.
    pub fn underlying_object(&self) -> DialObject {
        DialObject::new(
            self.points.clone(),
            self.frame.elements().to_vec(),
            self.alpha.clone(),
        )
        .expect("system carriers are valid object carriers")
    }

    /// Runs all three axioms and collects every violation.
    pub fn report(&self) -> SystemReport {
        let mut violations = Vec::new();
        let frame = &self.frame;
        for u in 0..self.points.len() {
            let top = self.alpha(u, frame.top());
            if !top.is_one() {
                violations.push(SystemError::ConditionIII {
                    point: self.points[u].clone(),
                    open: frame.element_name(frame.top()).to_string(),
                    got: top,
                    want: Degree::one(),
                });
            }
            let bottom = self.alpha(u, frame.bottom());
            if !bottom.is_zero() {
                violations.push(SystemError::ConditionIII {
                    point: self.points[u].clone(),
                    open: frame.element_name(frame.bottom()).to_string(),
                    got: bottom,
                    want: Degree::zero(),
                });
            }
            for x in 0..frame.len() {
                for y in x..frame.len() {
                    let ax = self.alpha(u, x);
                    let ay = self.alpha(u, y);
                    let lhs = self.alpha(u, frame.meet(x, y));
                    if lhs > ax.meet(ay) {
                        violations.push(SystemError::ConditionI {
                            point: self.points[u].clone(),
                            x: frame.element_name(x).to_string(),
                            y: frame.element_name(y).to_string(),
                            lhs,
                            rhs: ax.meet(ay),
                        });
                    }
                    let lhs = self.alpha(u, frame.join(x, y));
                    if lhs > ax.join(ay) {
                        violations.push(SystemError::ConditionII {
                            point: self.points[u].clone(),
                            x: frame.element_name(x).to_string(),
                            y: frame.element_name(y).to_string(),
                            lhs,
                            rhs: ax.join(ay),
                        });
                    }
                }
            }
        }
        SystemReport { violations }
    }

    /// Fails on the first axiom violation, in report order.
    pub fn validate(&self) -> Result<(), SystemError> {
        match self.report().violations.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(v),
        }
    }

    pub fn is_crisp(&self) -> bool {
        (0..self.points.len())
            .all(|u| (0..self.frame.len()).all(|x| self.alpha(u, x).is_crisp()))
    }
}

/// Validates the three axioms and returns the system.
pub fn validate_system(
    points: Vec<String>,
    frame: FiniteFrame,
    alpha: FuzzyRelation,
) -> Result<FuzzyTopSystem, SystemError> {
    let system = FuzzyTopSystem::new(points, frame, alpha)?;
    system.validate()?;
    Ok(system)
}

/// Embeds a crisp (two-valued) topological system: satisfaction pairs
/// become degree 1, everything else degree 0. The crisp axioms are
/// checked in binary form plus bounds before embedding; by construction
/// the result passes `validate`, with condition (i) holding as an
/// equality `ι(u, x ∧ y) = min(ι(u, x), ι(u, y))`.
pub fn embed_crisp(
    points: &[String],
    frame: &FiniteFrame,
    sat: &[(String, String)],
) -> Result<FuzzyTopSystem, SystemError> {
    let n = frame.len();
    let mut table = vec![false; points.len() * n];
    for (p, x) in sat {
        let u = points
            .iter()
            .position(|q| q == p)
            .ok_or_else(|| DialError::UnknownName(p.clone()))?;
        let xi = frame.index_of(x)?;
        table[u * n + xi] = true;
    }
    let holds = |u: usize, x: usize| table[u * n + x];

    for u in 0..points.len() {
        if !holds(u, frame.top()) {
            return Err(SystemError::NotATopologicalSystem {
                axiom: "empty-meet".to_string(),
                point: points[u].clone(),
                witness: format!("⊤ = {:?} not satisfied", frame.element_name(frame.top())),
            });
        }
        if holds(u, frame.bottom()) {
            return Err(SystemError::NotATopologicalSystem {
                axiom: "empty-join".to_string(),
                point: points[u].clone(),
                witness: format!("⊥ = {:?} satisfied", frame.element_name(frame.bottom())),
            });
        }
        for x in 0..n {
            for y in x..n {
                let meet_ok = holds(u, frame.meet(x, y)) == (holds(u, x) && holds(u, y));
                if !meet_ok {
                    return Err(SystemError::NotATopologicalSystem {
                        axiom: "meet".to_string(),
                        point: points[u].clone(),
                        witness: format!(
                            "x = {:?}, y = {:?}",
                            frame.element_name(x),
                            frame.element_name(y)
                        ),
                    });
                }
                let join_ok = holds(u, frame.join(x, y)) == (holds(u, x) || holds(u, y));
                if !join_ok {
                    return Err(SystemError::NotATopologicalSystem {
                        axiom: "join".to_string(),
                        point: points[u].clone(),
                        witness: format!(
                            "x = {:?}, y = {:?}",
                            frame.element_name(x),
                            frame.element_name(y)
                        ),
                    });
                }
            }
        }
    }

    let degrees: Vec<Degree> = table
        .iter()
        .map(|&b| if b { Degree::one() } else { Degree::zero() })
        .collect();
    FuzzyTopSystem::new(
        points.to_vec(),
        frame.clone(),
        FuzzyRelation::new(points.len(), n, degrees)?,
    )
}

/// A verified continuous map: a point function forward, a frame
/// homomorphism backward, related by `α(u, φ(y)) ≤ β(f(u), y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousMap {
    source: FuzzyTopSystem,
    target: FuzzyTopSystem,
    f: Vec<usize>,
    phi: FrameHom,
}

impl ContinuousMap {
    pub fn source(&self) -> &FuzzyTopSystem {
        &self.source
    }

    pub fn target(&self) -> &FuzzyTopSystem {
        &self.target
    }

    pub fn point_map(&self) -> &[usize] {
        &self.f
    }

    pub fn frame_hom(&self) -> &FrameHom {
        &self.phi
    }

    /// Every continuous map is a morphism of the underlying relation
    /// objects — same inequality, with the open map forgetting that it
    /// preserves the frame operations.
    pub fn as_dial_morphism(&self) -> DialMorphism {
        crate::dialectica::verify_morphism(
            &self.source.underlying_object(),
            &self.target.underlying_object(),
            self.f.clone(),
            self.phi.map().to_vec(),
        )
        .expect("continuity condition is the morphism condition")
    }
}

pub fn verify_continuous(
    source: &FuzzyTopSystem,
    target: &FuzzyTopSystem,
    f: Vec<usize>,
    phi_map: Vec<usize>,
) -> Result<ContinuousMap, SystemError> {
    let phi = FrameHom::validate_indices(target.frame(), source.frame(), phi_map)?;
    if f.len() != source.points.len() {
        return Err(SystemError::Structure(DialError::NotTotal(
            "point map".to_string(),
        )));
    }
    for (u, &fu) in f.iter().enumerate() {
        for y in 0..target.frame.len() {
            let lhs = source.alpha(u, phi.apply(y));
            let rhs = target.alpha(fu, y);
            if lhs > rhs {
                return Err(SystemError::ConditionViolated {
                    point: source.points[u].clone(),
                    open: target.frame.element_name(y).to_string(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(ContinuousMap {
        source: source.clone(),
        target: target.clone(),
        f,
        phi,
    })
}

/// A fuzzy subset of a fixed finite universe.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FuzzySet {
    universe: Vec<String>,
    membership: Vec<Degree>,
}

impl FuzzySet {
    pub fn constant(universe: &[String], value: Degree) -> Self {
        FuzzySet {
            universe: universe.to_vec(),
            membership: vec![value; universe.len()],
        }
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn membership(&self) -> &[Degree] {
        &self.membership
    }

    pub fn get(&self, i: usize) -> Degree {
        self.membership[i]
    }

    pub fn pointwise_min(&self, other: &FuzzySet) -> FuzzySet {
        FuzzySet {
            universe: self.universe.clone(),
            membership: self
                .membership
                .iter()
                .zip(&other.membership)
                .map(|(&a, &b)| a.meet(b))
                .collect(),
        }
    }

    pub fn pointwise_max(&self, other: &FuzzySet) -> FuzzySet {
        FuzzySet {
            universe: self.universe.clone(),
            membership: self
                .membership
                .iter()
                .zip(&other.membership)
                .map(|(&a, &b)| a.join(b))
                .collect(),
        }
    }
}

/// The extent of an open: the fuzzy set `u ↦ α(u, x)`.
pub fn extent(system: &FuzzyTopSystem, x: usize) -> FuzzySet {
    FuzzySet {
        universe: system.points.clone(),
        membership: (0..system.points.len()).map(|u| system.alpha(u, x)).collect(),
    }
}

pub fn extent_by_name(system: &FuzzyTopSystem, open: &str) -> Result<FuzzySet, SystemError> {
    Ok(extent(system, system.frame.index_of(open)?))
}

/// One missing closure witness: the two source opens whose extents were
/// combined, and the fuzzy set that is not an extent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureFailure {
    pub x: String,
    pub y: String,
    pub missing: FuzzySet,
}

/// Result of checking that the extents form a fuzzy topology on the
/// point set, in the Chang sense: constants 0 and 1 present, closed
/// under pointwise min of pairs and pointwise max of pairs. Binary max
/// closure gives closure under suprema of arbitrary nonempty families by
/// induction (the family of distinct extents is finite), and the empty
/// supremum is the constant 0 checked separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyReport {
    pub extent_count: usize,
    pub has_constant_zero: bool,
    pub has_constant_one: bool,
    pub min_failures: Vec<ClosureFailure>,
    pub max_failures: Vec<ClosureFailure>,
    pub pairs_checked: usize,
}

impl TopologyReport {
    pub fn passes(&self) -> bool {
        self.has_constant_zero
            && self.has_constant_one
            && self.min_failures.is_empty()
            && self.max_failures.is_empty()
    }
}

/// Collects the extents of all opens and checks the fuzzy-topology
/// closure properties. Failures are report content, not errors: axiom
/// (i) bounds `extent(x ∧ y)` by the pointwise min of the extents but
/// does not force equality, so a valid system can genuinely fail here.
pub fn extents_form_topology(system: &FuzzyTopSystem) -> TopologyReport {
    let mut distinct: Vec<(String, FuzzySet)> = Vec::new();
    for x in 0..system.frame.len() {
        let e = extent(system, x);
        if !distinct.iter().any(|(_, known)| known == &e) {
            distinct.push((system.frame.element_name(x).to_string(), e));
        }
    }
    let zero = FuzzySet::constant(&system.points, Degree::zero());
    let one = FuzzySet::constant(&system.points, Degree::one());
    let has = |candidate: &FuzzySet| distinct.iter().any(|(_, e)| e == candidate);

    let mut min_failures = Vec::new();
    let mut max_failures = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..distinct.len() {
        for j in i..distinct.len() {
            pairs_checked += 1;
            let lo = distinct[i].1.pointwise_min(&distinct[j].1);
            if !has(&lo) {
                min_failures.push(ClosureFailure {
                    x: distinct[i].0.clone(),
                    y: distinct[j].0.clone(),
                    missing: lo,
                });
            }
            let hi = distinct[i].1.pointwise_max(&distinct[j].1);
            if !has(&hi) {
                max_failures.push(ClosureFailure {
                    x: distinct[i].0.clone(),
                    y: distinct[j].0.clone(),
                    missing: hi,
                });
            }
        }
    }
    TopologyReport {
        extent_count: distinct.len(),
        has_constant_zero: has(&zero),
        has_constant_one: has(&one),
        min_failures,
        max_failures,
        pairs_checked,
    }
}

// ---------------------------------------------------------------------
// Topological product and sum
// ---------------------------------------------------------------------

/// How to combine the per-generator values when evaluating the product
/// relation on a whole C-ideal. `Max` is the default; `Min` is kept as a
/// swappable alternate for experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GammaCombine {
    #[default]
    Max,
    Min,
}

/// The product relation on a basic element: `max(α(u, x), β(v, y))`.
pub fn gamma_on_basic(
    a: &FuzzyTopSystem,
    b: &FuzzyTopSystem,
    u: usize,
    v: usize,
    x: usize,
    y: usize,
) -> Degree {
    a.alpha(u, x).join(b.alpha(v, y))
}

/// Extends the basic rule to an arbitrary C-ideal by evaluating it on
/// the canonical generating antichain (maximal pairs off the bottom
/// cross) and combining. The empty antichain — the bottom C-ideal —
/// evaluates to 0, which is what condition (iii) requires at `⊥`.
pub fn gamma_on_ideal(
    a: &FuzzyTopSystem,
    b: &FuzzyTopSystem,
    u: usize,
    v: usize,
    ideal: &CIdeal,
    combine: GammaCombine,
) -> Degree {
    let gens = ideal.canonical_generators(a.frame(), b.frame());
    let values = gens
        .iter()
        .map(|&(x, y)| gamma_on_basic(a, b, u, v, x, y));
    match combine {
        GammaCombine::Max => join_all(values),
        GammaCombine::Min => {
            if gens.is_empty() {
                Degree::zero()
            } else {
                values.fold(Degree::one(), Degree::meet)
            }
        }
    }
}

/// The topological product: points `U × V`, opens the tensor frame
/// `X ⊗ Y`, relation extended from `max(α, β)` on basics. The result is
/// not assumed to satisfy the system axioms — the attached report says
/// whether it does.
pub fn top_product(
    a: &FuzzyTopSystem,
    b: &FuzzyTopSystem,
    tensor_bound: usize,
    combine: GammaCombine,
) -> Result<(FuzzyTopSystem, SystemReport, TensorFrame), SystemError> {
    let tensor = tensor_frame(a.frame(), b.frame(), tensor_bound)?;
    let mut points = Vec::with_capacity(a.points.len() * b.points.len());
    for u in &a.points {
        for v in &b.points {
            points.push(pair_name(u, v));
        }
    }
    let n = tensor.frame().len();
    let mut table = Vec::with_capacity(points.len() * n);
    for u in 0..a.points.len() {
        for v in 0..b.points.len() {
            for e in 0..n {
                table.push(gamma_on_ideal(a, b, u, v, tensor.ideal(e), combine));
            }
        }
    }
    let system = FuzzyTopSystem::new(
        points,
        tensor.frame().clone(),
        FuzzyRelation::new(a.points.len() * b.points.len(), n, table)?,
    )?;
    let report = system.report();
    Ok((system, report, tensor))
}

/// The topological sum: tagged points `U + V`, opens the product frame
/// `X × Y`, relation reading each summand's table. Identical, table for
/// table, to the categorical coproduct of the underlying objects.
pub fn top_sum(
    a: &FuzzyTopSystem,
    b: &FuzzyTopSystem,
) -> Result<(FuzzyTopSystem, SystemReport), SystemError> {
    let frame = frame_product(a.frame(), b.frame())?;
    let mut points = Vec::with_capacity(a.points.len() + b.points.len());
    for u in &a.points {
        points.push(format!("({u},0)"));
    }
    for v in &b.points {
        points.push(format!("({v},1)"));
    }
    let (nx, ny) = (a.frame.len(), b.frame.len());
    let mut table = Vec::with_capacity(points.len() * nx * ny);
    for u in 0..a.points.len() {
        for x in 0..nx {
            for _y in 0..ny {
                table.push(a.alpha(u, x));
            }
        }
    }
    for v in 0..b.points.len() {
        for _x in 0..nx {
            for y in 0..ny {
                table.push(b.alpha(v, y));
            }
        }
    }
    let system = FuzzyTopSystem::new(
        points,
        frame,
        FuzzyRelation::new(a.points.len() + b.points.len(), nx * ny, table)?,
    )?;
    let report = system.report();
    Ok((system, report))
}

/// Satisfaction degree of `starts <prefix>` against degree streams: at
/// each position the stream entry scores similarity to bit 1, so a
/// prefix bit of 0 scores through the complement, and the positions are
/// combined by min. An empty prefix is satisfied to degree 1.
pub fn demo_bitstream(streams: &[Vec<Degree>], prefix: &str) -> Result<Vec<Degree>, SystemError> {
    let bits: Vec<bool> = prefix
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(SystemError::InvalidPrefix(other)),
        })
        .collect::<Result<_, _>>()?;
    streams
        .iter()
        .enumerate()
        .map(|(i, stream)| {
            if stream.len() < bits.len() {
                return Err(SystemError::StreamTooShort {
                    stream: i,
                    needed: bits.len(),
                    got: stream.len(),
                });
            }
            Ok(bits
                .iter()
                .zip(stream)
                .map(|(&bit, &d)| if bit { d } else { d.complement() })
                .fold(Degree::one(), Degree::meet))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialectica;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    fn sat(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    fn c3() -> FiniteFrame {
        FiniteFrame::chain(&["bot", "a", "top"]).unwrap()
    }

    fn crisp_sierpinski() -> FuzzyTopSystem {
        embed_crisp(
            &names(&["p", "q"]),
            &c3(),
            &sat(&[("p", "a"), ("p", "top"), ("q", "top")]),
        )
        .unwrap()
    }

    fn fuzzy_sierpinski() -> FuzzyTopSystem {
        let table = vec![
            Degree::zero(),
            Degree::one(),
            Degree::one(), // p
            Degree::zero(),
            d("0.3"),
            Degree::one(), // q
        ];
        FuzzyTopSystem::new(
            names(&["p", "q"]),
            c3(),
            FuzzyRelation::new(2, 3, table).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn crisp_sierpinski_validates() {
        let s = crisp_sierpinski();
        assert!(s.validate().is_ok());
        assert!(s.is_crisp());
    }

    #[test]
    fn fuzzy_sierpinski_validates() {
        let s = fuzzy_sierpinski();
        assert!(s.validate().is_ok());
        assert!(!s.is_crisp());
    }

    #[test]
    fn nonzero_bottom_violates_condition_iii() {
        let table = vec![
            d("0.1"),
            Degree::one(),
            Degree::one(),
            Degree::zero(),
            Degree::zero(),
            Degree::one(),
        ];
        let s = FuzzyTopSystem::new(
            names(&["p", "q"]),
            c3(),
            FuzzyRelation::new(2, 3, table).unwrap(),
        )
        .unwrap();
        let err = s.validate().unwrap_err();
        assert!(matches!(err, SystemError::ConditionIII { .. }), "{err}");
    }

    #[test]
    fn non_monotone_table_violates_condition_i() {
        // α(p, a) = 0.2 but α(p, a ∧ top) must stay under both sides;
        // put a larger value under the meet.
        let table = vec![Degree::zero(), d("0.2"), Degree::one()];
        let mut t = table;
        t[1] = d("0.2");
        let s = FuzzyTopSystem::new(names(&["p"]), c3(), FuzzyRelation::new(1, 3, t).unwrap())
            .unwrap();
        assert!(s.validate().is_ok());
        // Now break (i): meet(a, a) = a is fine, so break via join instead:
        // α(p, a ∨ a)… a cleaner break is α(p, top-join) — use condition (ii)
        // with a diamond frame where join(x, y) jumps above both sides.
        let dia = FiniteFrame::diamond("bot", "x", "y", "top").unwrap();
        let t = vec![Degree::zero(), d("0.2"), d("0.3"), Degree::one()];
        let s =
            FuzzyTopSystem::new(names(&["p"]), dia, FuzzyRelation::new(1, 4, t).unwrap()).unwrap();
        let err = s.validate().unwrap_err();
        assert!(matches!(err, SystemError::ConditionII { .. }), "{err}");
    }

    #[test]
    fn embed_requires_top_row() {
        let err = embed_crisp(&names(&["p"]), &c3(), &sat(&[("p", "a")])).unwrap_err();
        assert!(matches!(err, SystemError::NotATopologicalSystem { .. }), "{err}");
        // With the top row present the same satisfaction set embeds.
        assert!(embed_crisp(&names(&["p"]), &c3(), &sat(&[("p", "a"), ("p", "top")])).is_ok());
    }

    #[test]
    fn embed_rejects_meet_axiom_violation() {
        // On the diamond: p satisfies x and y but not x ∧ y = bot (bot can
        // never be satisfied), so {x, y} ⊆ sat violates the meet axiom.
        let dia = FiniteFrame::diamond("bot", "x", "y", "top").unwrap();
        let err = embed_crisp(
            &names(&["p"]),
            &dia,
            &sat(&[("p", "x"), ("p", "y"), ("p", "top")]),
        )
        .unwrap_err();
        match err {
            SystemError::NotATopologicalSystem { axiom, .. } => assert_eq!(axiom, "meet"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn embedded_sierpinski_table() {
        let s = crisp_sierpinski();
        let f = s.frame();
        let a = f.index_of("a").unwrap();
        assert_eq!(s.alpha(0, a), Degree::one());
        assert_eq!(s.alpha(1, a), Degree::zero());
        // Condition (i) as an equality on the crisp table.
        for u in 0..2 {
            for x in 0..3 {
                for y in 0..3 {
                    assert_eq!(
                        s.alpha(u, f.meet(x, y)),
                        s.alpha(u, x).meet(s.alpha(u, y))
                    );
                }
            }
        }
    }

    #[test]
    fn identity_map_is_continuous() {
        let s = fuzzy_sierpinski();
        let m = verify_continuous(
            &s,
            &s,
            vec![0, 1],
            (0..s.frame().len()).collect(),
        )
        .unwrap();
        let dial = m.as_dial_morphism();
        assert_eq!(dial.point_map(), &[0, 1]);
    }

    #[test]
    fn fuzzy_to_crisp_identity_fails_continuity() {
        // α(q, a) = 0.3 in the source but 0 in the target: 0.3 ≤ 0 fails.
        let err = verify_continuous(
            &fuzzy_sierpinski(),
            &crisp_sierpinski(),
            vec![0, 1],
            vec![0, 1, 2],
        )
        .unwrap_err();
        match err {
            SystemError::ConditionViolated { lhs, rhs, .. } => {
                assert_eq!(lhs, d("0.3"));
                assert_eq!(rhs, Degree::zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn continuity_requires_a_frame_hom() {
        let s = crisp_sierpinski();
        // Send top to bot: not bounds-preserving.
        let err = verify_continuous(&s, &s, vec![0, 1], vec![0, 1, 0]).unwrap_err();
        assert!(matches!(err, SystemError::NotFrameHom(_)), "{err}");
    }

    #[test]
    fn extents_of_bounds_are_constants() {
        let s = fuzzy_sierpinski();
        let f = s.frame();
        assert_eq!(
            extent(&s, f.top()),
            FuzzySet::constant(s.points(), Degree::one())
        );
        assert_eq!(
            extent(&s, f.bottom()),
            FuzzySet::constant(s.points(), Degree::zero())
        );
        let e = extent_by_name(&s, "a").unwrap();
        assert_eq!(e.membership(), &[Degree::one(), d("0.3")]);
    }

    #[test]
    fn extent_topology_passes_on_sierpinski_variants() {
        assert!(extents_form_topology(&crisp_sierpinski()).passes());
        assert!(extents_form_topology(&fuzzy_sierpinski()).passes());
    }

    #[test]
    fn extent_topology_failure_is_reported_not_asserted() {
        // A valid system whose meet-extent drops strictly below the
        // pointwise min of the extents: on the diamond take two points,
        // α(·, x) and α(·, y) crossing so min(extent x, extent y) is not
        // any extent. Validity needs max(α(u,x), α(u,y)) = 1 at each
        // point because x ∨ y = top.
        let dia = FiniteFrame::diamond("bot", "x", "y", "top").unwrap();
        let table = vec![
            // u: bot x y top
            Degree::zero(),
            Degree::one(),
            d("0.4"),
            Degree::one(),
            // w
            Degree::zero(),
            d("0.4"),
            Degree::one(),
            Degree::one(),
        ];
        let s = FuzzyTopSystem::new(
            names(&["u", "w"]),
            dia,
            FuzzyRelation::new(2, 4, table).unwrap(),
        )
        .unwrap();
        assert!(s.validate().is_ok());
        let report = extents_form_topology(&s);
        assert!(!report.passes());
        assert!(!report.min_failures.is_empty());
        let failure = &report.min_failures[0];
        assert_eq!(failure.missing.membership(), &[d("0.4"), d("0.4")]);
    }

    #[test]
    fn continuous_maps_compose_into_continuous_maps() {
        // Restriction to continuous maps is closed under composition:
        // the composed open map is again a frame homomorphism and the
        // inequality survives, so the systems form a subcategory of the
        // relation objects.
        let crisp = crisp_sierpinski();
        let fuzzy = fuzzy_sierpinski();
        // crisp → fuzzy by identity points/opens: 1 ≤ 1, 0 ≤ 0.3 etc.
        let m1 = verify_continuous(&crisp, &fuzzy, vec![0, 1], vec![0, 1, 2]).unwrap();
        // fuzzy → indiscrete two-point: collapse the middle open upward.
        let c2 = FiniteFrame::chain(&["bot", "top"]).unwrap();
        let indiscrete = embed_crisp(
            &names(&["p", "q"]),
            &c2,
            &sat(&[("p", "top"), ("q", "top")]),
        )
        .unwrap();
        let m2 = verify_continuous(&fuzzy, &indiscrete, vec![0, 1], vec![0, 2]).unwrap();
        let f: Vec<usize> = m1.point_map().iter().map(|&u| m2.point_map()[u]).collect();
        let phi: Vec<usize> = m2
            .frame_hom()
            .map()
            .iter()
            .map(|&y| m1.frame_hom().apply(y))
            .collect();
        let composed = verify_continuous(&crisp, &indiscrete, f, phi).unwrap();
        // And it agrees with composing the underlying morphisms.
        let dial = crate::dialectica::compose(&m1.as_dial_morphism(), &m2.as_dial_morphism())
            .unwrap();
        assert_eq!(composed.as_dial_morphism(), dial);
        // Identities are continuous as well.
        for s in [&crisp, &fuzzy] {
            verify_continuous(
                s,
                s,
                (0..s.points().len()).collect(),
                (0..s.frame().len()).collect(),
            )
            .unwrap();
        }
    }

    #[test]
    fn extent_topology_survives_topological_sums() {
        let systems = [crisp_sierpinski(), fuzzy_sierpinski()];
        for a in &systems {
            for b in &systems {
                assert!(extents_form_topology(a).passes());
                assert!(extents_form_topology(b).passes());
                let (sum, _) = top_sum(a, b).unwrap();
                assert!(extents_form_topology(&sum).passes());
            }
        }
    }

    #[test]
    fn top_sum_matches_coproduct_of_underlying_objects() {
        let (sum, report) = top_sum(&crisp_sierpinski(), &fuzzy_sierpinski()).unwrap();
        assert!(report.passes());
        let coproduct = dialectica::coproduct_obj(
            &crisp_sierpinski().underlying_object(),
            &fuzzy_sierpinski().underlying_object(),
        );
        assert_eq!(sum.underlying_object(), coproduct);
    }

    #[test]
    fn top_product_basic_law_on_proper_basics() {
        let a = crisp_sierpinski();
        let b = crisp_sierpinski();
        let (product, _report, tensor) =
            top_product(&a, &b, 16, GammaCombine::Max).unwrap();
        let (fa, fb) = (a.frame(), b.frame());
        for u in 0..a.points().len() {
            for v in 0..b.points().len() {
                let pv = u * b.points().len() + v;
                for x in 0..fa.len() {
                    for y in 0..fb.len() {
                        if x == fa.bottom() || y == fb.bottom() {
                            // x ⊗ ⊥ and ⊥ ⊗ y are the bottom C-ideal.
                            assert_eq!(tensor.basic(x, y), tensor.frame().bottom());
                            continue;
                        }
                        assert_eq!(
                            product.alpha(pv, tensor.basic(x, y)),
                            gamma_on_basic(&a, &b, u, v, x, y)
                        );
                    }
                }
            }
        }
        // Bounds behave.
        let pf = product.frame();
        for pv in 0..product.points().len() {
            assert_eq!(product.alpha(pv, pf.top()), Degree::one());
            assert_eq!(product.alpha(pv, pf.bottom()), Degree::zero());
        }
    }

    #[test]
    fn bitstream_demo() {
        let exact = vec![
            Degree::zero(),
            Degree::one(),
            Degree::zero(),
            Degree::one(),
            Degree::zero(),
        ];
        let noisy = vec![d("0.1"), d("0.9"), d("0.1"), d("0.9"), d("0.1")];
        let out = demo_bitstream(&[exact.clone(), noisy], "01010").unwrap();
        assert_eq!(out, vec![Degree::one(), d("0.9")]);
        assert_eq!(demo_bitstream(&[exact], "").unwrap(), vec![Degree::one()]);
        let err = demo_bitstream(&[vec![Degree::one()]], "01").unwrap_err();
        assert!(matches!(err, SystemError::StreamTooShort { needed: 2, got: 1, .. }));
        let err = demo_bitstream(&[vec![Degree::one()]], "2").unwrap_err();
        assert!(matches!(err, SystemError::InvalidPrefix('2')));
    }
}
