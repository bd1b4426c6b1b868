//! Colourings of bipartite grids, lists inherited from a host triple
//! system, and multicolourings.

mod coloring;
mod lists;

pub use coloring::{
    find_classified_subgrid, two_coloring_counterexample, Classification, Color, GridColoring,
    Label, Subgrid,
};
pub use lists::{
    build_list_assignment, extract_multicoloring, find_structured_multicoloring, ListAssignment,
    Multicoloring, StructuredColoring, StructuredMulticoloring, StructuredOutcome,
};
