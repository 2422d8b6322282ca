//! Finite models of degree-valued satisfaction.
//!
//! The crate has three layers:
//!
//! * [`degrees`] — exact rational truth degrees in `[0, 1]` with min,
//!   max and the Gödel implication (the residuum of min);
//! * [`frames`] — finite distributive lattices with top and bottom,
//!   frame homomorphisms, products, and the frame tensor built from
//!   C-ideals;
//! * [`dialectica`] and [`topsys`] — a category of degree-valued
//!   relations over finite sets, and the systems whose opens carry a
//!   frame structure, with products, sums, extents and a crisp embedding.
//!
//! Everything is desk-scale and exact: no floats, no sampling error, and
//! all enumerations are deterministic. The [`oracle`] module provides
//! independently coded brute-force checkers for the algebraic laws, and
//! [`cli`] the text-document interface used by the `dialtop` binary.

// Index loops here mirror the function-table encode/decode arithmetic,
// and errors are cold paths that carry their witness text.
#![allow(clippy::needless_range_loop)]
#![allow(clippy::result_large_err)]
#![allow(clippy::type_complexity)]

pub mod cli;
pub mod degrees;
pub mod dialectica;
pub mod fixtures;
pub mod frames;
pub mod oracle;
pub mod topsys;

pub use degrees::{Degree, DegreeError};
pub use dialectica::{DialError, DialMorphism, DialObject, FuzzyRelation};
pub use frames::{CIdeal, FiniteFrame, FrameError, FrameHom, FrameHomError, TensorFrame};
pub use topsys::{ContinuousMap, FuzzySet, FuzzyTopSystem, SystemError, SystemReport};
