//! burnlab: a graph-burning toolkit.
//!
//! Computes burning numbers exactly (with certified witnesses), builds the
//! classical optimal sequences for paths and cycles, runs the burning
//! variants that live on line/total/spike graphs, constructs short burning
//! sequences for graphs with no long induced paths via connected dominating
//! sets, and builds + verifies the pseudo-polynomial hardness gadget that
//! reduces distinct-3-partition to burning on proper interval graphs.

pub mod bounds;
pub mod burn;
pub mod cds;
pub mod distance;
pub mod error;
pub mod gadget;
pub mod generate;
pub mod graph;
pub mod induced;
pub mod interval;
pub mod iso;
pub mod pathcycle;
pub mod pkfree;
pub mod solver;
pub mod suite;
pub mod transform;
pub mod variants;

pub use error::{Error, Result};
pub use graph::Graph;
