//! Complete bipartite subgraphs `K_{t,t}` whose vertex set avoids the
//! forbidden set `S_f` of each of its edges.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result, TripleSystem, Vertex, VertexSet};

/// A vertex set attached to each edge, keyed by `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<ListEntry>", into = "Vec<ListEntry>")]
pub struct EdgeLists(BTreeMap<(Vertex, Vertex), VertexSet>);

#[derive(Serialize, Deserialize)]
struct ListEntry {
    edge: [Vertex; 2],
    list: VertexSet,
}

impl From<Vec<ListEntry>> for EdgeLists {
    fn from(v: Vec<ListEntry>) -> Self {
        let mut l = EdgeLists::default();
        for e in v {
            l.insert(e.edge[0], e.edge[1], e.list);
        }
        l
    }
}

impl From<EdgeLists> for Vec<ListEntry> {
    fn from(l: EdgeLists) -> Self {
        l.0.into_iter()
            .map(|((u, v), list)| ListEntry { edge: [u, v], list })
            .collect()
    }
}

impl EdgeLists {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, u: Vertex, v: Vertex, list: VertexSet) {
        self.0.insert((u.min(v), u.max(v)), list);
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<&VertexSet> {
        self.0.get(&(u.min(v), u.max(v)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Vertex, Vertex), &VertexSet)> {
        self.0.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Biclique {
    pub left: VertexSet,
    pub right: VertexSet,
}

fn validate(f: &Graph, lists: &EdgeLists, h: &TripleSystem) -> Result<()> {
    let shadow = h.shadow();
    let mut size = None;
    for &(u, v) in f.edges() {
        if !shadow.has_edge(u, v) {
            return Err(Error::arg(format!(
                "edge {u}-{v} is not in the shadow of H"
            )));
        }
        let s = lists
            .get(u, v)
            .ok_or_else(|| Error::arg(format!("edge {u}-{v} has no forbidden set")))?;
        if s.contains(u) || s.contains(v) || s.last().is_some_and(|x| x >= h.n()) {
            return Err(Error::arg(format!(
                "forbidden set of {u}-{v} must lie in V(H) minus the edge"
            )));
        }
        if *size.get_or_insert(s.len()) != s.len() {
            return Err(Error::arg("all forbidden sets must have the same size"));
        }
    }
    Ok(())
}

/// Exact backtracking for `X, Y` of size `t` spanning a `K_{t,t}` in `f`
/// with `(X ∪ Y) ∩ S_f = ∅` for each of its edges `f`.
///
/// `X` is enumerated in lexicographic order and always holds the smallest
/// vertex of the biclique; the first hit is returned.
pub fn find_biclique_avoiding_lists(
    f: &Graph,
    lists: &EdgeLists,
    t: usize,
    h: &TripleSystem,
) -> Result<Option<Biclique>> {
    if t == 0 {
        return Err(Error::arg("t must be at least 1"));
    }
    validate(f, lists, h)?;
    let mut search = Search {
        f,
        lists,
        t,
        left: Vec::new(),
        right: Vec::new(),
    };
    let candidates: Vec<Vertex> = (0..f.n()).filter(|&v| f.degree(v) >= t).collect();
    Ok(search.left_step(&candidates, VertexSet::full(f.n())))
}

struct Search<'a> {
    f: &'a Graph,
    lists: &'a EdgeLists,
    t: usize,
    left: Vec<Vertex>,
    right: Vec<Vertex>,
}

impl Search<'_> {
    fn list(&self, x: Vertex, y: Vertex) -> &VertexSet {
        self.lists.get(x, y).expect("validated")
    }

    fn left_step(&mut self, candidates: &[Vertex], common: VertexSet) -> Option<Biclique> {
        if self.left.len() == self.t {
            let first = self.left[0];
            let left: VertexSet = self.left.iter().copied().collect();
            let pool: Vec<Vertex> = common
                .iter()
                .filter(|&y| y > first && !left.contains(y))
                .filter(|&y| self.left.iter().all(|&x| left.is_disjoint(self.list(x, y))))
                .collect();
            return self.right_step(&pool);
        }
        for (i, &x) in candidates.iter().enumerate() {
            let next_common = common.intersection(self.f.neighbors(x));
            if next_common.len() < self.t {
                continue;
            }
            self.left.push(x);
            let found = self.left_step(&candidates[i + 1..], next_common);
            self.left.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn right_step(&mut self, pool: &[Vertex]) -> Option<Biclique> {
        if self.right.len() == self.t {
            return Some(Biclique {
                left: self.left.iter().copied().collect(),
                right: self.right.iter().copied().collect(),
            });
        }
        for (i, &y) in pool.iter().enumerate() {
            if pool.len() - i < self.t - self.right.len() {
                break;
            }
            let ok = self.left.iter().all(|&x| {
                let s = self.list(x, y);
                self.right
                    .iter()
                    .all(|&y0| !s.contains(y0) && !self.list(x, y0).contains(y))
            });
            if !ok {
                continue;
            }
            self.right.push(y);
            let found = self.right_step(&pool[i + 1..]);
            self.right.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Random filter: sample each vertex with probability 1/2 into `T` and keep
/// the edges `f ⊆ T` with `S_f ∩ T = ∅`. Any biclique of the result avoids
/// its lists automatically, which makes this a cheap preprocessing step.
pub fn random_list_filter<R: Rng + ?Sized>(f: &Graph, lists: &EdgeLists, rng: &mut R) -> Graph {
    let sample: VertexSet = (0..f.n()).filter(|_| rng.gen_bool(0.5)).collect();
    let kept = f.edges().iter().copied().filter(|&(u, v)| {
        sample.contains(u)
            && sample.contains(v)
            && lists.get(u, v).is_none_or(|s| s.is_disjoint(&sample))
    });
    Graph::new(f.n(), kept).expect("subset of a valid edge set")
}
