use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Error, Result, Vertex, VertexSet};

/// A simple undirected graph on `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v` in ascending order, which makes
/// equality and hashing structural. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Graph {
    /// Rejects loops, duplicate edges and endpoints `>= n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has an endpoint >= n = {n}"
                )));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in &list {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is valid")
    }

    /// Path on `k` vertices `0 - 1 - ... - (k-1)`.
    pub fn path(k: usize) -> Self {
        Graph::new(k, (1..k).map(|i| (i - 1, i))).expect("path is valid")
    }

    /// Star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Graph::new(k + 1, (1..=k).map(|i| (0, i))).expect("star is valid")
    }

    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::arg("a cycle needs at least 3 vertices"));
        }
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::new(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
            .expect("complete bipartite graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Vertices touched by at least one edge.
    pub fn non_isolated(&self) -> VertexSet {
        (0..self.n).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    /// Connected and acyclic. The one-vertex graph is a tree; `n = 0` is not.
    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() + 1 == self.n && self.components().len() == 1
    }

    /// Same vertex set, edges restricted to `keep`.
    pub fn edge_subgraph(&self, keep: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let g = Graph::new(self.n, keep)?;
        if let Some(&(u, v)) = g.edges.iter().find(|&&(u, v)| !self.has_edge(u, v)) {
            return Err(Error::arg(format!("{u}-{v} is not an edge of the graph")));
        }
        Ok(g)
    }

    /// Adds `extra` edges to a copy of the graph.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        Graph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Vertex set of an edge set.
    pub fn span(edges: &[(Vertex, Vertex)]) -> VertexSet {
        edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Proper 2-colouring of a bipartite graph (`false` for the side of the
    /// smallest vertex of each component), or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }
}
