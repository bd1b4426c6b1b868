//! Constructive extraction lemmas: full subgraphs, sunflowers, disjoint
//! augmented sets and list-avoiding complete bipartite subgraphs.

mod augmented;
mod biclique;
mod full;
mod sunflower;

pub use augmented::{select_disjoint_augmented, AugmentedFamily};
pub use biclique::{find_biclique_avoiding_lists, random_list_filter, Biclique, EdgeLists};
pub use full::{full_subgraph, is_full};
pub use sunflower::{find_sunflower, sunflower_bound, SetFamily, Sunflower};
