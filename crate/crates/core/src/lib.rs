//! Forbidden induced subgraphs and chorded pancyclicity.
//!
//! The crate provides bit-set graphs with graph6 I/O and canonical labeling,
//! detectors for the claw, induced paths and the `Z_i` graphs, cycle and chord
//! search, isomorph-free generation of hereditary graph classes, and a catalog
//! of theorems on chorded pancyclicity that can be checked graph by graph or
//! swept exhaustively over whole classes.

pub mod error;
pub mod graph;
pub mod cycles;
pub mod patterns;
pub mod par;
pub mod enumerate;
pub mod theorems;

pub use error::{GraphError, Result};
pub use graph::{Graph, VertexSet, CAPACITY};
