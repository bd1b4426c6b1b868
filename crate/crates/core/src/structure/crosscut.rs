//! Minimum crosscuts of triple systems: vertex sets meeting every edge in
//! exactly one vertex.

use serde::Serialize;

use crate::triple::Triple;
use crate::{TripleSystem, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscutWitness {
    #[serde(rename = "X")]
    pub vertices: VertexSet,
}

impl CrosscutWitness {
    pub fn is_valid_for(&self, h: &TripleSystem) -> bool {
        h.edges()
            .iter()
            .all(|e| e.iter().filter(|&&v| self.vertices.contains(v)).count() == 1)
    }
}

/// `σ(F)` with a witness, or `None` when `F` has no crosscut.
///
/// Among minimum crosscuts the lexicographically smallest is returned.
/// Vertices outside every edge are never used.
pub fn sigma_hypergraph(h: &TripleSystem) -> Option<(usize, CrosscutWitness)> {
    let search = Search::new(h);
    let mut forced_in = VertexSet::new();
    let mut forced_out = VertexSet::new();
    let sigma = search.min_size(&forced_in, &forced_out)?;
    for v in &h.vertex_span() {
        forced_in.insert(v);
        if search.min_size(&forced_in, &forced_out) != Some(sigma) {
            forced_in.remove(v);
            forced_out.insert(v);
        }
    }
    let witness = CrosscutWitness {
        vertices: forced_in,
    };
    debug_assert!(witness.is_valid_for(h));
    debug_assert_eq!(witness.vertices.len(), sigma);
    Some((sigma, witness))
}

const FREE: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct Search<'a> {
    edges: &'a [Triple],
    incident: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct State {
    status: Vec<u8>,
    covered: Vec<bool>,
    size: usize,
}

impl<'a> Search<'a> {
    fn new(h: &'a TripleSystem) -> Self {
        let mut incident = vec![Vec::new(); h.n()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        Search {
            edges: h.edges(),
            incident,
        }
    }

    /// Minimum crosscut size subject to forced memberships.
    fn min_size(&self, forced_in: &VertexSet, forced_out: &VertexSet) -> Option<usize> {
        let mut st = State {
            status: vec![FREE; self.incident.len()],
            covered: vec![false; self.edges.len()],
            size: 0,
        };
        for v in forced_in {
            if !self.set_in(&mut st, v) {
                return None;
            }
        }
        for v in forced_out {
            if st.status[v] == IN || (st.status[v] == FREE && !self.set_out(&mut st, v)) {
                return None;
            }
        }
        let mut best = None;
        self.dfs(st, &mut best);
        best
    }

    fn set_in(&self, st: &mut State, v: Vertex) -> bool {
        if st.status[v] != FREE {
            return st.status[v] == IN;
        }
        st.status[v] = IN;
        st.size += 1;
        for &ei in &self.incident[v] {
            if st.covered[ei] {
                return false;
            }
            st.covered[ei] = true;
        }
        for &ei in &self.incident[v] {
            for &u in &self.edges[ei] {
                if u != v && st.status[u] == FREE && !self.set_out(st, u) {
                    return false;
                }
            }
        }
        true
    }

    fn set_out(&self, st: &mut State, v: Vertex) -> bool {
        st.status[v] = OUT;
        self.incident[v]
            .iter()
            .all(|&ei| st.covered[ei] || self.edges[ei].iter().any(|&u| st.status[u] == FREE))
    }

    /// Uncovered edges pairwise disjoint on their free vertices each need
    /// their own crosscut vertex.
    fn lower_bound(&self, st: &State) -> usize {
        let mut used = VertexSet::new();
        let mut count = 0;
        for (ei, e) in self.edges.iter().enumerate() {
            if st.covered[ei] {
                continue;
            }
            if e.iter().all(|&u| st.status[u] != FREE || !used.contains(u)) {
                count += 1;
                used.extend(e.iter().copied().filter(|&u| st.status[u] == FREE));
            }
        }
        count
    }

    fn dfs(&self, st: State, best: &mut Option<usize>) {
        if best.is_some_and(|b| st.size + self.lower_bound(&st) >= b) {
            return;
        }
        let branch = (0..self.edges.len())
            .filter(|&ei| !st.covered[ei])
            .min_by_key(|&ei| {
                self.edges[ei]
                    .iter()
                    .filter(|&&u| st.status[u] == FREE)
                    .count()
            });
        let Some(ei) = branch else {
            *best = Some(st.size);
            return;
        };
        for &v in &self.edges[ei] {
            if st.status[v] != FREE {
                continue;
            }
            let mut next = st.clone();
            if self.set_in(&mut next, v) {
                self.dfs(next, best);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::expand;
    use crate::Graph;

    #[test]
    fn single_edge() {
        let h = TripleSystem::new(3, [[0, 1, 2]]).unwrap();
        let (s, w) = sigma_hypergraph(&h).unwrap();
        assert_eq!(s, 1);
        assert_eq!(w.vertices.to_vec(), vec![0]);
    }

    #[test]
    fn expanded_paths() {
        let (s, w) = sigma_hypergraph(&expand(&Graph::path(3)).triples).unwrap();
        assert_eq!((s, w.vertices.to_vec()), (1, vec![1]));
        let (s, w) = sigma_hypergraph(&expand(&Graph::path(4)).triples).unwrap();
        assert_eq!(s, 2);
        assert!(w.is_valid_for(&expand(&Graph::path(4)).triples));
    }

    #[test]
    fn empty_system_has_empty_crosscut() {
        let (s, w) = sigma_hypergraph(&TripleSystem::empty(4)).unwrap();
        assert_eq!(s, 0);
        assert!(w.vertices.is_empty());
    }

    #[test]
    fn complete_four_vertex_system_has_no_crosscut() {
        assert!(sigma_hypergraph(&TripleSystem::complete(4)).is_none());
    }
}
