//! Incidence indexes for the embedding searches.

use crate::triple::Triple;
use crate::{TripleSystem, Vertex, VertexSet};

/// A mutable triple system with `O(1)` pair lookups.
#[derive(Clone, Debug)]
pub(crate) struct Host {
    n: usize,
    /// `thirds[u * n + v]`: the `z` with `{u, v, z}` present, for `u != v`.
    thirds: Vec<VertexSet>,
    shadow: Vec<VertexSet>,
    degree: Vec<usize>,
}

impl Host {
    pub fn new(n: usize) -> Self {
        Host {
            n,
            thirds: vec![VertexSet::new(); n * n],
            shadow: vec![VertexSet::new(); n],
            degree: vec![0; n],
        }
    }

    pub fn from_system(h: &TripleSystem) -> Self {
        let mut host = Host::new(h.n());
        for &e in h.edges() {
            host.add(e);
        }
        host
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, [a, b, c]: Triple) {
        for (x, y, z) in [(a, b, c), (b, c, a), (a, c, b)] {
            self.thirds[x * self.n + y].insert(z);
            self.thirds[y * self.n + x].insert(z);
            self.shadow[x].insert(y);
            self.shadow[y].insert(x);
        }
        for v in [a, b, c] {
            self.degree[v] += 1;
        }
    }

    pub fn remove(&mut self, [a, b, c]: Triple) {
        for (x, y, z) in [(a, b, c), (b, c, a), (a, c, b)] {
            self.thirds[x * self.n + y].remove(z);
            self.thirds[y * self.n + x].remove(z);
            if self.thirds[x * self.n + y].is_empty() {
                self.shadow[x].remove(y);
                self.shadow[y].remove(x);
            }
        }
        for v in [a, b, c] {
            self.degree[v] -= 1;
        }
    }

    #[inline]
    pub fn thirds(&self, u: Vertex, v: Vertex) -> &VertexSet {
        &self.thirds[u * self.n + v]
    }

    #[inline]
    pub fn shadow(&self, v: Vertex) -> &VertexSet {
        &self.shadow[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.degree[v]
    }
}

/// The forbidden system, with incidence lists.
#[derive(Clone, Debug)]
pub(crate) struct Pattern {
    pub n: usize,
    pub edges: Vec<Triple>,
    /// Edge indices through each vertex.
    pub incident: Vec<Vec<usize>>,
    pub shadow: Vec<VertexSet>,
}

impl Pattern {
    pub fn new(f: &TripleSystem) -> Self {
        let n = f.n();
        let mut incident = vec![Vec::new(); n];
        let mut shadow = vec![VertexSet::new(); n];
        for (k, &[a, b, c]) in f.edges().iter().enumerate() {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                incident[x].push(k);
                shadow[x].insert(y);
                shadow[x].insert(z);
            }
        }
        Pattern {
            n,
            edges: f.edges().to_vec(),
            incident,
            shadow,
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident[v].len()
    }

    /// Vertices lying in some edge.
    pub fn active(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(|&v| !self.incident[v].is_empty())
    }
}

/// Backtracking search for an injective map of the pattern's non-isolated
/// vertices sending edges to edges. `map` may be partly filled (an anchor);
/// on success it holds a full embedding of the active vertices.
pub(crate) fn extend(
    p: &Pattern,
    h: &Host,
    map: &mut [Option<Vertex>],
    used: &mut VertexSet,
) -> bool {
    let Some(u) = next_vertex(p, map) else {
        return true;
    };
    let mut cand = VertexSet::full(h.n());
    cand.difference_with(used);
    for &k in &p.incident[u] {
        let others: Vec<Vertex> = p.edges[k].iter().copied().filter(|&w| w != u).collect();
        if let (Some(a), Some(b)) = (map[others[0]], map[others[1]]) {
            cand.intersect_with(h.thirds(a, b));
        }
    }
    for w in &p.shadow[u] {
        if let Some(img) = map[w] {
            cand.intersect_with(h.shadow(img));
        }
    }
    let need = p.degree(u);
    for v in &cand {
        if h.degree(v) < need {
            continue;
        }
        map[u] = Some(v);
        used.insert(v);
        if extend(p, h, map, used) {
            return true;
        }
        used.remove(v);
        map[u] = None;
    }
    false
}

/// The unmapped active vertex with the most edges already pinned down by
/// mapped vertices, then most mapped neighbours, then highest degree.
fn next_vertex(p: &Pattern, map: &[Option<Vertex>]) -> Option<Vertex> {
    p.active().filter(|&u| map[u].is_none()).max_by_key(|&u| {
        let closed = p.incident[u]
            .iter()
            .filter(|&&k| {
                p.edges[k]
                    .iter()
                    .filter(|&&w| w != u)
                    .all(|&w| map[w].is_some())
            })
            .count();
        let touching = p.shadow[u].iter().filter(|&w| map[w].is_some()).count();
        (closed, touching, p.degree(u), std::cmp::Reverse(u))
    })
}

/// Is there a copy of the pattern in `h` using the edge `e`? Assumes
/// `e ∈ h`.
pub(crate) fn contains_through(p: &Pattern, h: &Host, e: Triple) -> bool {
    if p.n > h.n() {
        return false;
    }
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut map = vec![None; p.n];
    let mut used = VertexSet::new();
    for f in &p.edges {
        for perm in PERMS {
            let img = [e[perm[0]], e[perm[1]], e[perm[2]]];
            if (0..3).any(|t| h.degree(img[t]) < p.degree(f[t])) {
                continue;
            }
            for t in 0..3 {
                map[f[t]] = Some(img[t]);
                used.insert(img[t]);
            }
            if extend(p, h, &mut map, &mut used) {
                return true;
            }
            map.iter_mut().for_each(|m| *m = None);
            used = VertexSet::new();
        }
    }
    false
}
