//! Exact star-coloring toolkit for small graphs, specialized to splitting
//! graphs of cycles.
//!
//! A star coloring is a proper vertex coloring in which every path on four
//! vertices sees at least three colors; equivalently, every pair of color
//! classes induces a star forest. This crate provides:
//!
//! * generators for cycles, paths, and splitting graphs ([`graph`]);
//! * a verifier that produces violation witnesses and the star-forest
//!   characterization ([`verify`]);
//! * an exhaustive backtracking solver with budgets, pins, and deterministic
//!   subtree parallelism ([`search`]), plus small-graph vertex-colored
//!   isomorphism ([`iso`]);
//! * the explicit 4-coloring of splitting graphs of long cycles and the
//!   closed-form chi_s formulas ([`construct`]);
//! * a certification driver and DOT export behind the `starcolor` CLI
//!   ([`certify`], [`dot`]).

pub mod certify;
pub mod coloring;
pub mod construct;
pub mod dot;
pub mod error;
pub mod graph;
pub mod iso;
pub mod search;
pub mod verify;

pub use coloring::{Coloring, Witness};
pub use error::{Error, Result};
pub use graph::{cycle, enumerate_paths4, path, splitting_graph, Graph};
