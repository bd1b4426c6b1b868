use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result, Vertex, VertexSet};

pub type Triple = [Vertex; 3];

/// Sorts the three vertices of a triple.
pub fn triple(a: Vertex, b: Vertex, c: Vertex) -> Triple {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// A 3-uniform hypergraph on `0..n`. Each edge is stored sorted and the edge
/// list is sorted, so equality is structural. `n` is explicit so isolated
/// vertices are allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "TripleRepr", try_from = "TripleRepr")]
pub struct TripleSystem {
    n: usize,
    edges: Vec<Triple>,
}

#[derive(Serialize, Deserialize)]
struct TripleRepr {
    n: usize,
    edges: Vec<Triple>,
}

impl From<TripleSystem> for TripleRepr {
    fn from(h: TripleSystem) -> Self {
        TripleRepr {
            n: h.n,
            edges: h.edges,
        }
    }
}

impl TryFrom<TripleRepr> for TripleSystem {
    type Error = Error;

    fn try_from(r: TripleRepr) -> Result<Self> {
        TripleSystem::new(r.n, r.edges)
    }
}

impl TripleSystem {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let mut list = Vec::new();
        for e in edges {
            let t = triple(e[0], e[1], e[2]);
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidTripleSystem(format!(
                    "edge {e:?} repeats a vertex"
                )));
            }
            if t[2] >= n {
                return Err(Error::InvalidTripleSystem(format!(
                    "edge {e:?} has a vertex >= n = {n}"
                )));
            }
            list.push(t);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidTripleSystem(format!(
                "duplicate edge {:?}",
                w[0]
            )));
        }
        Ok(TripleSystem { n, edges: list })
    }

    pub fn empty(n: usize) -> Self {
        TripleSystem {
            n,
            edges: Vec::new(),
        }
    }

    /// All `C(n,3)` triples.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    edges.push([a, b, c]);
                }
            }
        }
        TripleSystem { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, e: Triple) -> bool {
        self.edges.binary_search(&triple(e[0], e[1], e[2])).is_ok()
    }

    /// Same vertex count, a different edge list.
    pub fn with_edges(&self, edges: impl IntoIterator<Item = Triple>) -> Result<Self> {
        TripleSystem::new(self.n, edges)
    }

    /// Vertices lying in some edge.
    pub fn vertex_span(&self) -> VertexSet {
        self.edges.iter().flatten().copied().collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// The shadow `∂H`: every pair covered by some triple.
    pub fn shadow(&self) -> Graph {
        let mut pairs: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)])
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Graph::new(self.n, pairs).expect("shadow pairs are valid")
    }

    /// Codegree of every shadow pair, keyed by `(u, v)` with `u < v`.
    pub fn codegrees(&self) -> BTreeMap<(Vertex, Vertex), usize> {
        let mut map = BTreeMap::new();
        for &[a, b, c] in &self.edges {
            for p in [(a, b), (a, c), (b, c)] {
                *map.entry(p).or_insert(0) += 1;
            }
        }
        map
    }

    pub fn codegree(&self, x: Vertex, y: Vertex) -> Result<usize> {
        Ok(self.neighborhood(&[x, y])?.len())
    }

    /// `N_H(S)` for a pair `S`: the third vertices of triples containing `S`.
    pub fn neighborhood(&self, pair: &[Vertex]) -> Result<VertexSet> {
        let &[x, y] = pair else {
            return Err(Error::arg(format!(
                "neighbourhoods are defined for pairs, got {} vertices",
                pair.len()
            )));
        };
        if x == y {
            return Err(Error::arg(format!("pair ({x}, {y}) repeats a vertex")));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(&x) && e.contains(&y))
            .map(|e| e.iter().copied().find(|&z| z != x && z != y).unwrap())
            .collect())
    }

    /// Smallest and largest codegree among the three pairs of `e ∈ H`.
    pub fn edge_codegree_extremes(&self, e: Triple) -> Result<(usize, usize)> {
        let [a, b, c] = triple(e[0], e[1], e[2]);
        if !self.contains_edge([a, b, c]) {
            return Err(Error::arg(format!("{e:?} is not an edge")));
        }
        let ds = [
            self.codegree(a, b)?,
            self.codegree(a, c)?,
            self.codegree(b, c)?,
        ];
        Ok((*ds.iter().min().unwrap(), *ds.iter().max().unwrap()))
    }

    /// `H - X`: edges disjoint from `X`. Labels and `n` are unchanged.
    pub fn remove_vertices(&self, x: &VertexSet) -> TripleSystem {
        TripleSystem {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| e.iter().all(|&v| !x.contains(v)))
                .copied()
                .collect(),
        }
    }

    /// Every two edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.codegrees().values().all(|&d| d <= 1)
    }
}
