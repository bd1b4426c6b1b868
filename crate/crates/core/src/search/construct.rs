use crate::{Error, Result, TripleSystem};

/// All `c·C(n-c, 2)` triples with exactly one vertex in the core
/// `{0, …, c-1}`. The core traces a crosscut of size at most `c` on any
/// copy inside it, so the result contains no `F` with `σ(F) > c`.
pub fn lower_bound_construction(n: usize, c: usize) -> Result<TripleSystem> {
    if c > n {
        return Err(Error::arg(format!("core size {c} exceeds n = {n}")));
    }
    let mut edges = Vec::new();
    for x in 0..c {
        for a in c..n {
            for b in a + 1..n {
                edges.push([x, a, b]);
            }
        }
    }
    TripleSystem::new(n, edges)
}

/// All `C(n-1, 2)` triples through vertex 0.
pub fn star_family(n: usize) -> TripleSystem {
    let edges = (1..n).flat_map(|a| (a + 1..n).map(move |b| [0, a, b]));
    TripleSystem::new(n, edges).expect("valid triples")
}
