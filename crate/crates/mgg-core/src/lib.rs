//! Engine for rewriting simple typed digraphs represented as Boolean matrices.
//!
//! Graphs are `(adjacency matrix, node vector)` pairs over a fixed slot space,
//! rules carry explicit deletion/addition matrices plus a derived nihilation
//! matrix of forbidden edges, and application conditions are diagrams of graphs
//! with a quantified formula over inclusion predicates. The [`transforms`]
//! module rewrites arbitrary conditions into existential/total form and
//! [`sequences`] compiles them into sets of plain rule sequences whose
//! applicability matches the conditioned rule.
//!
//! The crate is `no_std` (requires `alloc`); IO and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boolmat;
pub mod constraints;
pub mod derivation;
pub mod error;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod rules;
pub mod sequences;
pub mod transforms;

pub use boolmat::{BoolMatrix, BoolVector};
pub use error::{MggError, Result};
pub use graph::{NegStructure, TypedDigraph};
pub use matching::Morphism;
pub use rules::Production;
