//! Structural combinatorics of 3-uniform expansions of graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`bitset`], [`graph`], [`triple`]: vertex sets, simple graphs and triple
//!   systems with their derived quantities (shadow, codegree, neighbourhoods).
//! - [`structure`]: expansions `G⁺`, crosscuts, crosscut pairs, `λ` and the
//!   tree lemmas built on them.
//! - [`extraction`]: constructive versions of the extraction lemmas (full
//!   subgraphs, sunflowers, disjoint augmented sets, list-avoiding bicliques).
//! - [`ramsey`]: bipartite grid colourings, lists and multicolourings.
//! - [`search`]: containment, lower-bound constructions and exact Turán numbers.
//! - [`budget`]: time and node limits shared by the searches.
//! - [`generate`]: exhaustive generation of small trees and forests.

pub mod bitset;
pub mod budget;
pub mod error;
pub mod extraction;
pub mod generate;
pub mod graph;
pub mod io;
pub mod ramsey;
pub mod search;
pub mod structure;
pub mod triple;

pub use bitset::VertexSet;
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::Graph;
pub use triple::TripleSystem;

/// Vertices are dense labels `0..n`.
pub type Vertex = usize;

/// `C(n, 2)`.
pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `C(n, 3)`.
pub fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}
