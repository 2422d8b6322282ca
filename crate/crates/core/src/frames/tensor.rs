//! The frame tensor product `X ⊗ Y`, built from C-ideals: subsets of
//! `X × Y` that are down-closed and closed under joins along each slice.
//!
//! Every C-ideal contains the bottom cross `{⊥}×Y ∪ X×{⊥}` (the empty
//! slice join is ⊥). A C-ideal is named, and evaluated, through its
//! canonical generating antichain: the maximal pairs left after removing
//! the bottom cross. The closure of that antichain recovers the ideal
//! exactly, so names are unique.

use std::collections::BTreeSet;

use super::{FiniteFrame, FrameError};

/// Table-size gate for full enumeration of `X ⊗ Y`.
pub const DEFAULT_TENSOR_BOUND: usize = 16;

/// One element of `X ⊗ Y`: a down-closed, slice-join-closed subset of
/// the index square of the two base frames.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CIdeal {
    nx: usize,
    ny: usize,
    members: BTreeSet<(usize, usize)>,
}

impl CIdeal {
    pub fn members(&self) -> &BTreeSet<(usize, usize)> {
        &self.members
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.members.contains(&(x, y))
    }

    pub fn base_sizes(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    /// Inclusion order — the order of the tensor frame.
    pub fn leq(&self, other: &CIdeal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Meet in the tensor frame: plain intersection. The intersection of
    /// two C-ideals is again a C-ideal, no re-closure needed.
    pub fn meet(&self, other: &CIdeal) -> CIdeal {
        CIdeal {
            nx: self.nx,
            ny: self.ny,
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    /// Join in the tensor frame: close up the union.
    pub fn join(&self, other: &CIdeal, x: &FiniteFrame, y: &FiniteFrame) -> CIdeal {
        let gens: Vec<(usize, usize)> = self.members.union(&other.members).copied().collect();
        cideal_closure_indices(x, y, &gens)
    }

    /// Maximal member pairs under the componentwise order.
    pub fn maximal_pairs(&self, x: &FiniteFrame, y: &FiniteFrame) -> Vec<(usize, usize)> {
        maximal_of(&self.members, x, y)
    }

    /// The canonical generating antichain: maximal pairs with both
    /// coordinates strictly above bottom. Empty exactly for the bottom
    /// C-ideal (the bottom cross).
    pub fn canonical_generators(&self, x: &FiniteFrame, y: &FiniteFrame) -> Vec<(usize, usize)> {
        let proper: BTreeSet<(usize, usize)> = self
            .members
            .iter()
            .copied()
            .filter(|&(a, b)| a != x.bottom() && b != y.bottom())
            .collect();
        maximal_of(&proper, x, y)
    }
}

fn maximal_of(
    set: &BTreeSet<(usize, usize)>,
    x: &FiniteFrame,
    y: &FiniteFrame,
) -> Vec<(usize, usize)> {
    set.iter()
        .copied()
        .filter(|&(a, b)| {
            !set.iter().any(|&(a2, b2)| {
                (a2, b2) != (a, b) && x.leq(a, a2) && y.leq(b, b2)
            })
        })
        .collect()
}

/// Least C-ideal containing the generator pairs (given by element name).
pub fn cideal_closure(
    x: &FiniteFrame,
    y: &FiniteFrame,
    generators: &[(String, String)],
) -> Result<CIdeal, FrameError> {
    let gens: Vec<(usize, usize)> = generators
        .iter()
        .map(|(a, b)| Ok((x.index_of(a)?, y.index_of(b)?)))
        .collect::<Result<_, FrameError>>()?;
    Ok(cideal_closure_indices(x, y, &gens))
}

/// Index-level closure: seed with the generators and the bottom cross,
/// then alternate down-closure and slice joins to a fixpoint.
pub fn cideal_closure_indices(
    x: &FiniteFrame,
    y: &FiniteFrame,
    generators: &[(usize, usize)],
) -> CIdeal {
    let mut members: BTreeSet<(usize, usize)> = generators.iter().copied().collect();
    for b in 0..y.len() {
        members.insert((x.bottom(), b));
    }
    for a in 0..x.len() {
        members.insert((a, y.bottom()));
    }
    loop {
        let before = members.len();
        let snapshot: Vec<(usize, usize)> = members.iter().copied().collect();
        for (a, b) in snapshot {
            for a2 in 0..x.len() {
                if !x.leq(a2, a) {
                    continue;
                }
                for b2 in 0..y.len() {
                    if y.leq(b2, b) {
                        members.insert((a2, b2));
                    }
                }
            }
        }
        for b in 0..y.len() {
            let slice = (0..x.len()).filter(|&a| members.contains(&(a, b)));
            members.insert((x.join_all(slice), b));
        }
        for a in 0..x.len() {
            let slice = (0..y.len()).filter(|&b| members.contains(&(a, b)));
            members.insert((a, y.join_all(slice)));
        }
        if members.len() == before {
            break;
        }
    }
    CIdeal {
        nx: x.len(),
        ny: y.len(),
        members,
    }
}

/// The fully enumerated tensor frame, carrying the C-ideal behind each
/// frame element and the lookup for basic elements `x ⊗ y`.
#[derive(Debug, Clone)]
pub struct TensorFrame {
    frame: FiniteFrame,
    ideals: Vec<CIdeal>,
    basic: Vec<usize>,
    ny: usize,
}

impl TensorFrame {
    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn ideals(&self) -> &[CIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, element: usize) -> &CIdeal {
        &self.ideals[element]
    }

    /// Frame element holding the closure of `{(x, y)}`.
    pub fn basic(&self, x: usize, y: usize) -> usize {
        self.basic[x * self.ny + y]
    }
}

/// Enumerates all C-ideals of `X × Y` and assembles them into a frame
/// ordered by inclusion. Gated by `bound` on the carrier size; meet,
/// join and order on individual `CIdeal`s work without enumeration.
pub fn tensor_frame(
    x: &FiniteFrame,
    y: &FiniteFrame,
    bound: usize,
) -> Result<TensorFrame, FrameError> {
    let size = x.len() * y.len();
    if size > bound {
        return Err(FrameError::TooLargeToEnumerate { size, bound });
    }

    // Every C-ideal is reachable from the bottom closure by repeatedly
    // adjoining one pair and re-closing.
    let bottom = cideal_closure_indices(x, y, &[]);
    let mut ideals: BTreeSet<CIdeal> = BTreeSet::new();
    let mut queue = vec![bottom];
    while let Some(ideal) = queue.pop() {
        if !ideals.insert(ideal.clone()) {
            continue;
        }
        for a in 0..x.len() {
            for b in 0..y.len() {
                if !ideal.contains(a, b) {
                    let mut gens: Vec<(usize, usize)> =
                        ideal.members().iter().copied().collect();
                    gens.push((a, b));
                    queue.push(cideal_closure_indices(x, y, &gens));
                }
            }
        }
    }
    let ideals: Vec<CIdeal> = ideals.into_iter().collect();

    let names: Vec<String> = ideals
        .iter()
        .map(|ideal| {
            let gens = ideal.canonical_generators(x, y);
            if gens.is_empty() {
                "0".to_string()
            } else {
                gens.iter()
                    .map(|&(a, b)| format!("{}*{}", x.element_name(a), y.element_name(b)))
                    .collect::<Vec<_>>()
                    .join("+")
            }
        })
        .collect();

    let mut pairs = Vec::new();
    for (i, di) in ideals.iter().enumerate() {
        for (j, dj) in ideals.iter().enumerate() {
            if di.leq(dj) {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    let frame = FiniteFrame::validate(&names, &pairs)?;

    // validate() keeps the element order we supplied, but resolve through
    // names anyway so the basic table cannot drift.
    let mut basic = vec![0usize; x.len() * y.len()];
    for a in 0..x.len() {
        for b in 0..y.len() {
            let ideal = cideal_closure_indices(x, y, &[(a, b)]);
            let pos = ideals
                .binary_search(&ideal)
                .expect("closure of a single pair is a C-ideal");
            basic[a * y.len() + b] = frame.index_of(&names[pos]).expect("name present");
        }
    }

    Ok(TensorFrame {
        frame,
        ideals,
        basic,
        ny: y.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> FiniteFrame {
        FiniteFrame::chain(&["bot", "top"]).unwrap()
    }

    fn c3() -> FiniteFrame {
        FiniteFrame::chain(&["bot", "m", "top"]).unwrap()
    }

    fn diamond() -> FiniteFrame {
        FiniteFrame::diamond("bot", "a", "b", "top").unwrap()
    }

    fn close(x: &FiniteFrame, y: &FiniteFrame, gens: &[(&str, &str)]) -> CIdeal {
        let gens: Vec<(String, String)> = gens
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        cideal_closure(x, y, &gens).unwrap()
    }

    #[test]
    fn empty_closure_is_the_bottom_cross() {
        let ideal = close(&c2(), &c2(), &[]);
        let members: Vec<(usize, usize)> = ideal.members().iter().copied().collect();
        assert_eq!(members, vec![(0, 0), (0, 1), (1, 0)]);
    }

    #[test]
    fn closure_of_top_pair_is_everything() {
        let ideal = close(&c2(), &c2(), &[("top", "top")]);
        assert_eq!(ideal.members().len(), 4);
    }

    #[test]
    fn slice_join_fires() {
        // a⊗top together with b⊗top forces (a∨b)⊗top = top⊗top.
        let x = diamond();
        let y = c2();
        let ideal = close(&x, &y, &[("a", "top"), ("b", "top")]);
        assert!(ideal.contains(x.index_of("top").unwrap(), y.index_of("top").unwrap()));
    }

    #[test]
    fn closure_is_extensive_monotone_idempotent() {
        let x = c3();
        let y = diamond();
        let gens1 = [("m", "a")];
        let gens2 = [("m", "a"), ("top", "b")];
        let c1 = close(&x, &y, &gens1);
        let c2i = close(&x, &y, &gens2);
        assert!(c1.contains(x.index_of("m").unwrap(), y.index_of("a").unwrap()));
        assert!(c1.leq(&c2i), "monotone");
        let again = cideal_closure_indices(
            &x,
            &y,
            &c1.members().iter().copied().collect::<Vec<_>>(),
        );
        assert_eq!(again, c1, "idempotent");
    }

    #[test]
    fn tensor_of_two_element_chains_has_two_elements() {
        let t = tensor_frame(&c2(), &c2(), DEFAULT_TENSOR_BOUND).unwrap();
        assert_eq!(t.frame().len(), 2);
        assert_eq!(t.basic(1, 1), t.frame().top());
        assert_eq!(t.basic(0, 0), t.frame().bottom());
        assert_eq!(t.basic(0, 1), t.frame().bottom());
        assert_eq!(t.basic(1, 0), t.frame().bottom());
    }

    #[test]
    fn tensor_with_degenerate_frame_collapses() {
        let c1 = FiniteFrame::chain(&["x"]).unwrap();
        let t = tensor_frame(&c1, &c3(), DEFAULT_TENSOR_BOUND).unwrap();
        assert_eq!(t.frame().len(), 1);
    }

    #[test]
    fn basic_bounds() {
        let t = tensor_frame(&c3(), &c2(), DEFAULT_TENSOR_BOUND).unwrap();
        let x = c3();
        let y = c2();
        assert_eq!(t.basic(x.top(), y.top()), t.frame().top());
        assert_eq!(t.basic(x.bottom(), y.bottom()), t.frame().bottom());
    }

    #[test]
    fn basic_is_monotone_and_join_preserving_in_each_argument() {
        let x = diamond();
        let y = c2();
        let t = tensor_frame(&x, &y, DEFAULT_TENSOR_BOUND).unwrap();
        let f = t.frame();
        for a1 in 0..x.len() {
            for a2 in 0..x.len() {
                for b in 0..y.len() {
                    if x.leq(a1, a2) {
                        assert!(f.leq(t.basic(a1, b), t.basic(a2, b)));
                    }
                    let lhs = t.basic(x.join(a1, a2), b);
                    let rhs = f.join(t.basic(a1, b), t.basic(a2, b));
                    assert_eq!(lhs, rhs, "join preserved at ({a1},{a2},{b})");
                }
            }
        }
    }

    #[test]
    fn size_gate() {
        let err = tensor_frame(&diamond(), &diamond(), 15).unwrap_err();
        assert!(matches!(err, FrameError::TooLargeToEnumerate { size: 16, bound: 15 }));
    }

    #[test]
    fn meet_is_intersection_join_is_closure() {
        let x = diamond();
        let y = c2();
        let t = tensor_frame(&x, &y, DEFAULT_TENSOR_BOUND).unwrap();
        let f = t.frame();
        for i in 0..f.len() {
            for j in 0..f.len() {
                let meet = t.ideal(i).meet(t.ideal(j));
                assert_eq!(&meet, t.ideal(f.meet(i, j)));
                let join = t.ideal(i).join(t.ideal(j), &x, &y);
                assert_eq!(&join, t.ideal(f.join(i, j)));
            }
        }
    }
}
