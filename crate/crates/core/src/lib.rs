//! Equitable `(t, k)`-tree-colorings of small graphs.
//!
//! A `(t, k)`-tree-coloring partitions the vertices into `t` classes, each
//! inducing a forest of maximum degree at most `k`; it is equitable when class
//! sizes differ by at most one. The crate provides an exact search oracle for
//! these colorings, closed-form constructions for complete bi- and tripartite
//! graphs, wheels and stars, the matching-based characterizations of extreme
//! values of the strong equitable vertex arboricity, and a survey driver that
//! cross-checks all of them over exhaustive graph collections.

pub mod bound;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod experiments;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod theorems;

#[cfg(test)]
mod testutil;

pub use bound::DegreeBound;
pub use coloring::{validate_tree_coloring, Coloring, ValidationReport};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use oracle::Oracle;
