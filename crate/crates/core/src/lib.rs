//! Exact invariant laboratory for character-degree-graph shaped families:
//! metric dimension, adjacency dimension, base size, and twin structure,
//! with closed-form predictions checked against exhaustive oracles.
//!
//! The oracle layer (resolving, automorphism) never reads the formula
//! layer and vice versa; reports compare the two and record every
//! disagreement.

pub mod audit;
pub mod automorphism;
pub mod classify;
pub mod error;
pub mod exec;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod resolving;
mod subsets;
pub mod twins;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, MAX_VERTICES};
