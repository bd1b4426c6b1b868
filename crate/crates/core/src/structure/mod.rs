//! Expansions, crosscuts and the crosscut-pair machinery for trees.

mod audit;
mod crosscut;
mod expansion;
mod forest;
mod lambda;
mod pair;

pub use audit::{check_crosscut_lemmas, CrosscutAudit, LemmaCheck};
pub use crosscut::{sigma_hypergraph, CrosscutWitness};
pub use expansion::{expand, Expansion};
pub use forest::complete_forest_to_tree;
pub use lambda::{lambda_forest, lambda_tree};
pub use pair::{sigma_expansion, sigma_expansion_with, CrosscutPair, SigmaMethod};
