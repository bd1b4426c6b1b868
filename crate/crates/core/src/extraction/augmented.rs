//! Picking pairwise disjoint sets `A_i + a_i` from disjoint `A_i` and
//! distinct `a_i`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    try_from = "Vec<(VertexSet, Vertex)>",
    into = "Vec<(VertexSet, Vertex)>"
)]
pub struct AugmentedFamily {
    pairs: Vec<(VertexSet, Vertex)>,
}

impl TryFrom<Vec<(VertexSet, Vertex)>> for AugmentedFamily {
    type Error = Error;

    fn try_from(pairs: Vec<(VertexSet, Vertex)>) -> Result<Self> {
        AugmentedFamily::new(pairs)
    }
}

impl From<AugmentedFamily> for Vec<(VertexSet, Vertex)> {
    fn from(f: AugmentedFamily) -> Self {
        f.pairs
    }
}

impl AugmentedFamily {
    /// The `A_i` must be pairwise disjoint and the `a_i` distinct;
    /// `a_i ∈ A_i` is allowed.
    pub fn new(pairs: Vec<(VertexSet, Vertex)>) -> Result<Self> {
        let mut union = VertexSet::new();
        for (i, (a, _)) in pairs.iter().enumerate() {
            if !a.is_disjoint(&union) {
                return Err(Error::arg(format!("set A_{i} meets an earlier set")));
            }
            union.union_with(a);
        }
        let mut points: Vec<Vertex> = pairs.iter().map(|p| p.1).collect();
        points.sort_unstable();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::arg(format!("point {} is used twice", w[0])));
        }
        Ok(AugmentedFamily { pairs })
    }

    pub fn pairs(&self) -> &[(VertexSet, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `A_i ∪ {a_i}`.
    pub fn augmented(&self, i: usize) -> VertexSet {
        let mut s = self.pairs[i].0.clone();
        s.insert(self.pairs[i].1);
        s
    }
}

/// At least `⌈m/3⌉` indices whose sets `A_i + a_i` are pairwise disjoint.
///
/// Two augmented sets meet only if `a_i ∈ A_j` or `a_j ∈ A_i`. The conflict
/// digraph `i → j` iff `a_i ∈ A_j` has out-degree at most one, so its
/// underlying graph has at most one cycle per component and every subgraph
/// has a vertex of degree at most two. Peeling such vertices and colouring
/// greedily in reverse uses at most three colours; the largest class is
/// returned (smallest colour on ties), sorted ascending.
pub fn select_disjoint_augmented(fam: &AugmentedFamily) -> Vec<usize> {
    let m = fam.len();
    if m == 0 {
        return Vec::new();
    }
    let mut owner = std::collections::HashMap::new();
    for (j, (a, _)) in fam.pairs.iter().enumerate() {
        for v in a {
            owner.insert(v, j);
        }
    }
    let mut adj: Vec<VertexSet> = vec![VertexSet::new(); m];
    for (i, &(_, point)) in fam.pairs.iter().enumerate() {
        if let Some(&j) = owner.get(&point) {
            if j != i {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }

    let mut degree: Vec<usize> = adj.iter().map(|s| s.len()).collect();
    let mut removed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let v = (0..m)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .unwrap();
        debug_assert!(degree[v] <= 2, "conflict graph is not a pseudoforest");
        removed[v] = true;
        order.push(v);
        for u in &adj[v] {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    let mut color = vec![usize::MAX; m];
    for &v in order.iter().rev() {
        let used: Vec<usize> = adj[v].iter().map(|u| color[u]).collect();
        color[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    let best = (0..3)
        .max_by_key(|&c| {
            (
                color.iter().filter(|&&x| x == c).count(),
                std::cmp::Reverse(c),
            )
        })
        .unwrap();
    (0..m).filter(|&i| color[i] == best).collect()
}
