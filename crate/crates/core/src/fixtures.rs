//! Small named systems used across the test suites and the `laws`
//! subcommand: the Sierpinski system and its fuzzy variant, the discrete
//! and indiscrete two-point systems, and a three-point system on the
//! diamond frame.

use crate::degrees::Degree;
use crate::dialectica::FuzzyRelation;
use crate::frames::FiniteFrame;
use crate::topsys::{embed_crisp, FuzzyTopSystem};

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

fn sat(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// Two points, chain frame `bot < a < top`; only `p` satisfies `a`.
pub fn sierpinski() -> FuzzyTopSystem {
    let frame = FiniteFrame::chain(&["bot", "a", "top"]).expect("chain is a frame");
    embed_crisp(
        &names(&["p", "q"]),
        &frame,
        &sat(&[("p", "a"), ("p", "top"), ("q", "top")]),
    )
    .expect("sierpinski is a topological system")
}

/// The Sierpinski system with `α(q, a)` raised from 0 to 0.3.
pub fn fuzzy_sierpinski() -> FuzzyTopSystem {
    let frame = FiniteFrame::chain(&["bot", "a", "top"]).expect("chain is a frame");
    let degree: Degree = "0.3".parse().expect("exact decimal");
    let table = vec![
        Degree::zero(),
        Degree::one(),
        Degree::one(),
        Degree::zero(),
        degree,
        Degree::one(),
    ];
    FuzzyTopSystem::new(
        names(&["p", "q"]),
        frame,
        FuzzyRelation::new(2, 3, table).expect("table is total"),
    )
    .expect("structure is valid")
}

/// Two points with the full powerset of opens (the diamond frame):
/// `a` is `{p}`, `b` is `{q}`.
pub fn discrete_two() -> FuzzyTopSystem {
    let frame = FiniteFrame::diamond("bot", "a", "b", "top").expect("diamond is a frame");
    embed_crisp(
        &names(&["p", "q"]),
        &frame,
        &sat(&[("p", "a"), ("q", "b"), ("p", "top"), ("q", "top")]),
    )
    .expect("discrete two-point system")
}

/// Two points, two opens: only `top` is ever satisfied.
pub fn indiscrete_two() -> FuzzyTopSystem {
    let frame = FiniteFrame::chain(&["bot", "top"]).expect("chain is a frame");
    embed_crisp(
        &names(&["p", "q"]),
        &frame,
        &sat(&[("p", "top"), ("q", "top")]),
    )
    .expect("indiscrete two-point system")
}

/// Three points on the diamond frame: `a` holds on `{p}`, `b` on `{q, r}`.
pub fn diamond_based() -> FuzzyTopSystem {
    let frame = FiniteFrame::diamond("bot", "a", "b", "top").expect("diamond is a frame");
    embed_crisp(
        &names(&["p", "q", "r"]),
        &frame,
        &sat(&[
            ("p", "a"),
            ("q", "b"),
            ("r", "b"),
            ("p", "top"),
            ("q", "top"),
            ("r", "top"),
        ]),
    )
    .expect("diamond-based system")
}

/// The crisp fixture set, by name.
pub fn crisp_fixtures() -> Vec<(&'static str, FuzzyTopSystem)> {
    vec![
        ("sierpinski", sierpinski()),
        ("discrete2", discrete_two()),
        ("indiscrete2", indiscrete_two()),
        ("diamond3", diamond_based()),
    ]
}
