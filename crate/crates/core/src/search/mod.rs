//! Containment of triple systems, extremal constructions and exact Turán
//! numbers for small `n`.

mod audit;
mod construct;
mod embed;
mod host;
mod turan;

pub use audit::{
    audit_jump, audit_theorem1, JumpFamily, JumpReport, SigmaTwoShape, Theorem1Report, Theorem1Row,
};
pub use construct::{lower_bound_construction, star_family};
pub use embed::{contains, contains_expansion, EmbeddingCertificate, EmbeddingKind};
pub use turan::{turan_number, TuranMethod, TuranResult};
