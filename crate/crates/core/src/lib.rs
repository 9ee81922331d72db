//! Scalable colored props.
//!
//! Terms of free ℕ₀-colored props (string diagrams whose wires carry a
//! positive size), the wire calculus of dividers and gatherers, the
//! scalable and box constructions over a monochromatic language, and a
//! family of semantic backends (permutations, finite functions, semiring
//! matrices, linear relations over ℚ, qubit matrices).
//!
//! Equality of diagrams is never decided syntactically. Wire terms are
//! compared through their strand permutation, everything else through a
//! complete semantic backend.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boxes;
pub mod diagram;
mod error;
pub mod language;
pub mod languages;
pub mod linalg;
pub mod object;
pub mod param;
pub mod perm;
pub mod scalable;
pub mod semantics;
pub mod signature;
pub mod wire;

pub use diagram::{Diagram, Node};
pub use error::{Error, Result};
pub use language::{Equation, GraphicalLanguage, Translation};
pub use object::SizedObject;
pub use param::Param;
pub use perm::Permutation;
pub use signature::{Discipline, GeneratorDecl, ParamSort, Signature};

#[doc(hidden)]
pub use alloc::vec as __alloc_vec;
