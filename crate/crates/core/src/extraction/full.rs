use crate::{Error, Result, TripleSystem};

/// Every shadow pair of `h` has codegree at least `d`.
pub fn is_full(h: &TripleSystem, d: usize) -> bool {
    h.codegrees().values().all(|&c| c >= d)
}

/// A `(d+1)`-full subsystem with at least `|H| - d|∂H|` edges.
///
/// Repeatedly takes the lexicographically smallest shadow pair whose current
/// codegree is at most `d` and deletes every edge containing it. Each pair is
/// removed at most once and costs at most `d` edges, which gives the size
/// bound. The result may be empty.
pub fn full_subgraph(h: &TripleSystem, d: usize) -> Result<TripleSystem> {
    if d == 0 {
        return Err(Error::arg("d must be at least 1"));
    }
    let mut codeg = h.codegrees();
    let mut alive = vec![true; h.len()];
    while let Some((&(x, y), _)) = codeg.iter().find(|&(_, &c)| c > 0 && c <= d) {
        for (i, e) in h.edges().iter().enumerate() {
            if alive[i] && e.contains(&x) && e.contains(&y) {
                alive[i] = false;
                let [a, b, c] = *e;
                for p in [(a, b), (a, c), (b, c)] {
                    *codeg.get_mut(&p).unwrap() -= 1;
                }
            }
        }
        codeg.retain(|_, c| *c > 0);
    }
    h.with_edges(
        h.edges()
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(e, _)| *e),
    )
}
