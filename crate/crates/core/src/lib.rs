//! Antimagic orientations.
//!
//! An antimagic orientation of a graph with `m` edges directs every edge and
//! labels the arcs bijectively with `1..=m` so that the oriented vertex sums
//! (labels in minus labels out) are pairwise distinct. This crate constructs
//! such orientations for
//!
//! * bipartite graphs without vertices of degree 0 or 2 ([`theorem1`]), and
//! * graphs of minimum degree at least 33 ([`theorem2`]),
//!
//! and checks every result with an independent verifier
//! ([`graph::verify_antimagic`]).

mod assembly;
pub mod bipartite;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod residue;
pub mod skolem;
pub mod theorem1;
pub mod theorem2;
pub mod trail;

pub use error::{Error, Result};
pub use graph::{verify_antimagic, Certificate, Graph, Labeling, Orientation, Verdict, Violation};
