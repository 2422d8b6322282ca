//! Finite frames: distributive lattices with top and bottom, presented by
//! element names and generating order pairs.
//!
//! Validation is the brute-force check itself: the supplied pairs are
//! closed reflexively and transitively, antisymmetry is checked, every
//! pair of elements must have a least upper bound and a greatest lower
//! bound, and binary meets must distribute over binary joins. On a finite
//! carrier this is exactly the frame condition — arbitrary joins reduce
//! to binary joins plus the bottom element by induction.

mod tensor;

pub use tensor::{
    cideal_closure, cideal_closure_indices, tensor_frame, CIdeal, TensorFrame,
    DEFAULT_TENSOR_BOUND,
};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("a frame needs at least one element")]
    Empty,
    #[error("duplicate element name {0:?}")]
    DuplicateElement(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("not a poset: {a:?} ≤ {b:?} and {b:?} ≤ {a:?} for distinct elements")]
    NotAPoset { a: String, b: String },
    #[error("not a lattice: pair ({x:?}, {y:?}) has no {kind}")]
    NotALattice { x: String, y: String, kind: BoundKind },
    #[error(
        "not distributive: {x:?} ∧ ({y:?} ∨ {z:?}) = {lhs:?} but ({x:?} ∧ {y:?}) ∨ ({x:?} ∧ {z:?}) = {rhs:?}"
    )]
    NotDistributive {
        x: String,
        y: String,
        z: String,
        lhs: String,
        rhs: String,
    },
    #[error("tensor carrier has {size} pairs, above the enumeration bound {bound}; use lazy CIdeal operations instead")]
    TooLargeToEnumerate { size: usize, bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "greatest lower bound"),
            BoundKind::Join => write!(f, "least upper bound"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameHomError {
    #[error("map does not cover source element {0:?}")]
    NotTotal(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element {0:?} mapped more than once")]
    DuplicateMapping(String),
    #[error("meets not preserved: h({x:?} ∧ {y:?}) = {got:?} but h({x:?}) ∧ h({y:?}) = {want:?}")]
    NotMeetPreserving {
        x: String,
        y: String,
        got: String,
        want: String,
    },
    #[error("joins not preserved: h({x:?} ∨ {y:?}) = {got:?} but h({x:?}) ∨ h({y:?}) = {want:?}")]
    NotJoinPreserving {
        x: String,
        y: String,
        got: String,
        want: String,
    },
    #[error("bounds not preserved: {which} maps to {got:?}")]
    BoundsNotPreserved { which: String, got: String },
}

/// A validated finite frame. Element identifiers are opaque strings;
/// equality is structural, never by name-based isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFrame {
    elements: Vec<String>,
    /// Row-major n×n matrix: `leq[i * n + j]` iff element i ≤ element j.
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    top: usize,
    bottom: usize,
}

impl FiniteFrame {
    /// Validates a candidate presented as element names plus generating
    /// `≤` pairs. The reflexive-transitive closure is computed here, so
    /// callers need not list full orders.
    pub fn validate(elements: &[String], pairs: &[(String, String)]) -> Result<Self, FrameError> {
        let n = elements.len();
        if n == 0 {
            return Err(FrameError::Empty);
        }
        let mut index: HashMap<&str, usize> = HashMap::with_capacity(n);
        for (i, name) in elements.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(FrameError::DuplicateElement(name.clone()));
            }
        }

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| FrameError::UnknownElement(a.clone()))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| FrameError::UnknownElement(b.clone()))?;
            leq[ia * n + ib] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(FrameError::NotAPoset {
                        a: elements[i].clone(),
                        b: elements[j].clone(),
                    });
                }
            }
        }

        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[x * n + y] = bound_of(&leq, n, x, y, BoundKind::Meet).ok_or_else(|| {
                    FrameError::NotALattice {
                        x: elements[x].clone(),
                        y: elements[y].clone(),
                        kind: BoundKind::Meet,
                    }
                })?;
                join[x * n + y] = bound_of(&leq, n, x, y, BoundKind::Join).ok_or_else(|| {
                    FrameError::NotALattice {
                        x: elements[x].clone(),
                        y: elements[y].clone(),
                        kind: BoundKind::Join,
                    }
                })?;
            }
        }

        let bottom = (0..n).fold(0, |acc, i| meet[acc * n + i]);
        let top = (0..n).fold(0, |acc, i| join[acc * n + i]);

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = meet[x * n + join[y * n + z]];
                    let rhs = join[meet[x * n + y] * n + meet[x * n + z]];
                    if lhs != rhs {
                        return Err(FrameError::NotDistributive {
                            x: elements[x].clone(),
                            y: elements[y].clone(),
                            z: elements[z].clone(),
                            lhs: elements[lhs].clone(),
                            rhs: elements[rhs].clone(),
                        });
                    }
                }
            }
        }

        Ok(FiniteFrame {
            elements: elements.to_vec(),
            leq,
            meet,
            join,
            top,
            bottom,
        })
    }

    /// A linear order on the given names, first element at the bottom.
    pub fn chain(names: &[&str]) -> Result<Self, FrameError> {
        let elements: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let pairs: Vec<(String, String)> = elements
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        FiniteFrame::validate(&elements, &pairs)
    }

    /// The four-element frame `⊥ < a, b < ⊤` with `a`, `b` incomparable.
    pub fn diamond(bottom: &str, a: &str, b: &str, top: &str) -> Result<Self, FrameError> {
        let elements: Vec<String> = [bottom, a, b, top].iter().map(|s| s.to_string()).collect();
        let pairs = vec![
            (bottom.to_string(), a.to_string()),
            (bottom.to_string(), b.to_string()),
            (a.to_string(), top.to_string()),
            (b.to_string(), top.to_string()),
        ];
        FiniteFrame::validate(&elements, &pairs)
    }

    /// The powerset of `atoms` ordered by inclusion, element names built
    /// by joining member atoms with `+` (empty set named `0`).
    pub fn boolean_cube(atoms: &[&str]) -> Result<Self, FrameError> {
        let n = atoms.len();
        let name = |mask: usize| -> String {
            if mask == 0 {
                return "0".to_string();
            }
            let mut parts = Vec::new();
            for (i, atom) in atoms.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    parts.push(atom.to_string());
                }
            }
            parts.join("+")
        };
        let elements: Vec<String> = (0..1usize << n).map(name).collect();
        let mut pairs = Vec::new();
        for a in 0..1usize << n {
            for b in 0..1usize << n {
                if a & b == a {
                    pairs.push((elements[a].clone(), elements[b].clone()));
                }
            }
        }
        FiniteFrame::validate(&elements, &pairs)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, FrameError> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| FrameError::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    /// Join over an index iterator; empty input yields bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet over an index iterator; empty input yields top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn meet_by_name(&self, x: &str, y: &str) -> Result<&str, FrameError> {
        let (ix, iy) = (self.index_of(x)?, self.index_of(y)?);
        Ok(&self.elements[self.meet(ix, iy)])
    }

    pub fn join_by_name(&self, x: &str, y: &str) -> Result<&str, FrameError> {
        let (ix, iy) = (self.index_of(x)?, self.index_of(y)?);
        Ok(&self.elements[self.join(ix, iy)])
    }

    /// The generating `≤` pairs in canonical form (the covering relation),
    /// enough to reconstruct the frame through `validate`.
    pub fn cover_pairs(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) {
                    let strictly_between = (0..n).any(|k| {
                        k != i && k != j && self.leq(i, k) && self.leq(k, j)
                    });
                    if !strictly_between {
                        pairs.push((self.elements[i].clone(), self.elements[j].clone()));
                    }
                }
            }
        }
        pairs
    }

    /// Elements with a unique lower cover; every element of a finite
    /// distributive lattice is the join of the join-irreducibles below it.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&e| {
                if e == self.bottom {
                    return false;
                }
                let below_join = self.join_all((0..n).filter(|&x| x != e && self.leq(x, e)));
                below_join != e
            })
            .collect()
    }
}

fn bound_of(leq: &[bool], n: usize, x: usize, y: usize, kind: BoundKind) -> Option<usize> {
    let cmp = |a: usize, b: usize| match kind {
        BoundKind::Meet => leq[a * n + b],
        BoundKind::Join => leq[b * n + a],
    };
    let candidates: Vec<usize> = (0..n).filter(|&z| cmp(z, x) && cmp(z, y)).collect();
    candidates
        .iter()
        .copied()
        .find(|&g| candidates.iter().all(|&z| cmp(z, g)))
}

/// A validated frame homomorphism: preserves binary meets, binary joins,
/// top and bottom. On finite frames that implies preservation of all
/// finite meets and all joins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameHom {
    source: FiniteFrame,
    target: FiniteFrame,
    map: Vec<usize>,
}

impl FrameHom {
    pub fn validate(
        source: &FiniteFrame,
        target: &FiniteFrame,
        entries: &[(String, String)],
    ) -> Result<Self, FrameHomError> {
        let mut map: Vec<Option<usize>> = vec![None; source.len()];
        for (from, to) in entries {
            let i = source
                .index_of(from)
                .map_err(|_| FrameHomError::UnknownElement(from.clone()))?;
            let j = target
                .index_of(to)
                .map_err(|_| FrameHomError::UnknownElement(to.clone()))?;
            if map[i].is_some() {
                return Err(FrameHomError::DuplicateMapping(from.clone()));
            }
            map[i] = Some(j);
        }
        let map: Vec<usize> = map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| FrameHomError::NotTotal(source.element_name(i).to_string())))
            .collect::<Result<_, _>>()?;
        Self::validate_indices(source, target, map)
    }

    pub fn validate_indices(
        source: &FiniteFrame,
        target: &FiniteFrame,
        map: Vec<usize>,
    ) -> Result<Self, FrameHomError> {
        if map[source.bottom()] != target.bottom() {
            return Err(FrameHomError::BoundsNotPreserved {
                which: format!("bottom {:?}", source.element_name(source.bottom())),
                got: target.element_name(map[source.bottom()]).to_string(),
            });
        }
        if map[source.top()] != target.top() {
            return Err(FrameHomError::BoundsNotPreserved {
                which: format!("top {:?}", source.element_name(source.top())),
                got: target.element_name(map[source.top()]).to_string(),
            });
        }
        for x in 0..source.len() {
            for y in 0..source.len() {
                let got = map[source.meet(x, y)];
                let want = target.meet(map[x], map[y]);
                if got != want {
                    return Err(FrameHomError::NotMeetPreserving {
                        x: source.element_name(x).to_string(),
                        y: source.element_name(y).to_string(),
                        got: target.element_name(got).to_string(),
                        want: target.element_name(want).to_string(),
                    });
                }
                let got = map[source.join(x, y)];
                let want = target.join(map[x], map[y]);
                if got != want {
                    return Err(FrameHomError::NotJoinPreserving {
                        x: source.element_name(x).to_string(),
                        y: source.element_name(y).to_string(),
                        got: target.element_name(got).to_string(),
                        want: target.element_name(want).to_string(),
                    });
                }
            }
        }
        Ok(FrameHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(frame: &FiniteFrame) -> Self {
        FrameHom {
            source: frame.clone(),
            target: frame.clone(),
            map: (0..frame.len()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteFrame {
        &self.source
    }

    pub fn target(&self) -> &FiniteFrame {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// Standard name for a pair element in product constructions.
pub fn pair_name(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// The product frame on `X × Y` with componentwise order. The result is
/// re-validated; a product of frames always passes.
pub fn frame_product(x: &FiniteFrame, y: &FiniteFrame) -> Result<FiniteFrame, FrameError> {
    let mut elements = Vec::with_capacity(x.len() * y.len());
    for a in x.elements() {
        for b in y.elements() {
            elements.push(pair_name(a, b));
        }
    }
    let mut pairs = Vec::new();
    for a in 0..x.len() {
        for b in 0..y.len() {
            for a2 in 0..x.len() {
                for b2 in 0..y.len() {
                    if x.leq(a, a2) && y.leq(b, b2) {
                        pairs.push((
                            elements[a * y.len() + b].clone(),
                            elements[a2 * y.len() + b2].clone(),
                        ));
                    }
                }
            }
        }
    }
    FiniteFrame::validate(&elements, &pairs)
}
