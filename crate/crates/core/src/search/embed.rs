use serde::{Deserialize, Serialize};

use super::host::{extend, Host, Pattern};
use crate::structure::expand;
use crate::{Graph, TripleSystem, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbeddingKind {
    Subhypergraph,
    /// The pattern is `expand(G)`; vertices `n(G)..` are the enlargements.
    Expansion,
}

/// An injective vertex map sending every edge of the pattern to an edge of
/// the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCertificate {
    /// `(pattern vertex, host vertex)`, sorted by pattern vertex.
    pub map: Vec<(Vertex, Vertex)>,
    pub kind: EmbeddingKind,
}

impl EmbeddingCertificate {
    /// Checks the certificate against `f` and `h` from scratch.
    pub fn validate(&self, f: &TripleSystem, h: &TripleSystem) -> bool {
        if self.map.len() != f.n() || self.map.iter().enumerate().any(|(i, &(from, _))| from != i) {
            return false;
        }
        let mut images = VertexSet::new();
        if !self
            .map
            .iter()
            .all(|&(_, to)| to < h.n() && images.insert(to))
        {
            return false;
        }
        f.edges()
            .iter()
            .all(|&[a, b, c]| h.contains_edge([self.map[a].1, self.map[b].1, self.map[c].1]))
    }

    pub fn image(&self, v: Vertex) -> Option<Vertex> {
        self.map.get(v).map(|p| p.1)
    }
}

/// Places isolated pattern vertices on the smallest unused host vertices.
fn complete_map(
    map: Vec<Option<Vertex>>,
    used: &VertexSet,
    kind: EmbeddingKind,
) -> EmbeddingCertificate {
    let mut free = (0..).filter(|v| !used.contains(*v));
    let map = map
        .into_iter()
        .enumerate()
        .map(|(i, m)| (i, m.unwrap_or_else(|| free.next().unwrap())))
        .collect();
    EmbeddingCertificate { map, kind }
}

/// A copy of `f` in `h` (not necessarily induced), or `None`. The search is
/// complete, so `None` proves `h` is `f`-free.
pub fn contains(h: &TripleSystem, f: &TripleSystem) -> Option<EmbeddingCertificate> {
    if f.n() > h.n() || f.len() > h.len() {
        return None;
    }
    let p = Pattern::new(f);
    let host = Host::from_system(h);
    let mut map = vec![None; f.n()];
    let mut used = VertexSet::new();
    extend(&p, &host, &mut map, &mut used)
        .then(|| complete_map(map, &used, EmbeddingKind::Subhypergraph))
}

/// A copy of `G⁺` in `h`. Embeds the non-isolated part of `G` into the
/// shadow of `h`, then matches the edges of `G` to distinct enlargement
/// vertices outside the image. Agrees with `contains(h, expand(g))`, with
/// the certificate labelled as in [`expand`].
pub fn contains_expansion(h: &TripleSystem, g: &Graph) -> Option<EmbeddingCertificate> {
    let (n, e) = (g.n(), g.edge_count());
    if n + e > h.n() || e > h.len() {
        return None;
    }
    let host = Host::from_system(h);
    let order = graph_order(g);
    let mut phi = vec![None; n];
    let mut used = VertexSet::new();
    let mut matched = Vec::new();
    if !embed_graph(g, &host, &order, 0, &mut phi, &mut used, &mut matched) {
        return None;
    }
    let mut full: Vec<Option<Vertex>> = phi;
    full.extend(matched.iter().map(|&z| Some(z)));
    used.extend(matched.iter().copied());
    let cert = complete_map(full, &used, EmbeddingKind::Expansion);
    debug_assert!(cert.validate(&expand(g).triples, h));
    Some(cert)
}

/// Non-isolated vertices, each next vertex having the most already-ordered
/// neighbours (ties: higher degree, smaller label).
fn graph_order(g: &Graph) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = Vec::new();
    let mut placed = VertexSet::new();
    let active: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    while order.len() < active.len() {
        let u = active
            .iter()
            .copied()
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    g.neighbors(v).intersection_len(&placed),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed.insert(u);
        order.push(u);
    }
    order
}

fn embed_graph(
    g: &Graph,
    h: &Host,
    order: &[Vertex],
    depth: usize,
    phi: &mut [Option<Vertex>],
    used: &mut VertexSet,
    matched: &mut Vec<Vertex>,
) -> bool {
    if depth == order.len() {
        return match_enlargements(g, h, phi, used, matched);
    }
    let u = order[depth];
    let mut cand = VertexSet::full(h.n());
    cand.difference_with(used);
    for w in g.neighbors(u) {
        if let Some(img) = phi[w] {
            cand.intersect_with(h.shadow(img));
        }
    }
    for v in &cand {
        if h.shadow(v).len() < g.degree(u) {
            continue;
        }
        phi[u] = Some(v);
        used.insert(v);
        if embed_graph(g, h, order, depth + 1, phi, used, matched) {
            return true;
        }
        used.remove(v);
        phi[u] = None;
    }
    false
}

/// Distinct `z_e ∈ N_h(φ(e)) \ φ(V)` for every edge, by augmenting paths.
fn match_enlargements(
    g: &Graph,
    h: &Host,
    phi: &[Option<Vertex>],
    used: &VertexSet,
    matched: &mut Vec<Vertex>,
) -> bool {
    let lists: Vec<VertexSet> = g
        .edges()
        .iter()
        .map(|&(u, v)| h.thirds(phi[u].unwrap(), phi[v].unwrap()).difference(used))
        .collect();
    if lists.iter().any(|l| l.is_empty()) {
        return false;
    }
    let mut owner: Vec<Option<usize>> = vec![None; h.n()];
    fn augment(
        e: usize,
        lists: &[VertexSet],
        owner: &mut [Option<usize>],
        seen: &mut VertexSet,
    ) -> bool {
        for z in &lists[e] {
            if seen.insert(z) && owner[z].is_none_or(|f| augment(f, lists, owner, seen)) {
                owner[z] = Some(e);
                return true;
            }
        }
        false
    }
    for e in 0..lists.len() {
        if !augment(e, &lists, &mut owner, &mut VertexSet::new()) {
            return false;
        }
    }
    let mut z = vec![0; lists.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(e) = o {
            z[*e] = v;
        }
    }
    *matched = z;
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(n: usize, e: &[[usize; 3]]) -> TripleSystem {
        TripleSystem::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn single_triple() {
        let f = ts(3, &[[0, 1, 2]]);
        let h = ts(6, &[[1, 3, 5]]);
        let c = contains(&h, &f).unwrap();
        assert!(c.validate(&f, &h));
        assert!(contains(&TripleSystem::empty(6), &f).is_none());
    }

    #[test]
    fn two_triples_meeting_once() {
        let f = expand(&Graph::path(3)).triples;
        assert!(contains(&ts(4, &[[0, 1, 2], [0, 1, 3]]), &f).is_none());
        let h = ts(5, &[[0, 1, 2], [0, 3, 4]]);
        let c = contains(&h, &f).unwrap();
        assert!(c.validate(&f, &h));
        // the centre of the path is vertex 1
        assert_eq!(c.image(1), Some(0));
    }

    #[test]
    fn expansion_matches_generic() {
        let g = Graph::path(3);
        let h = ts(5, &[[0, 1, 2], [0, 3, 4]]);
        let c = contains_expansion(&h, &g).unwrap();
        assert!(c.validate(&expand(&g).triples, &h));
        assert!(contains_expansion(&ts(4, &[[0, 1, 2], [0, 1, 3]]), &g).is_none());
        assert!(contains_expansion(&ts(3, &[[0, 1, 2]]), &Graph::path(2)).is_some());
    }

    #[test]
    fn isolated_vertices_need_room() {
        let mut f = ts(5, &[[0, 1, 2]]);
        let h = ts(4, &[[0, 1, 2]]);
        assert!(contains(&h, &f).is_none());
        f = ts(4, &[[0, 1, 2]]);
        let c = contains(&h, &f).unwrap();
        assert_eq!(c.image(3), Some(3));
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(contains_expansion(&h, &g).is_some());
        assert!(contains_expansion(&ts(3, &[[0, 1, 2]]), &g).is_none());
    }

    #[test]
    fn certificate_validation_catches_errors() {
        let f = ts(3, &[[0, 1, 2]]);
        let h = ts(4, &[[0, 1, 2]]);
        let bad = EmbeddingCertificate {
            map: vec![(0, 0), (1, 1), (2, 3)],
            kind: EmbeddingKind::Subhypergraph,
        };
        assert!(!bad.validate(&f, &h));
        let repeated = EmbeddingCertificate {
            map: vec![(0, 0), (1, 0), (2, 2)],
            kind: EmbeddingKind::Subhypergraph,
        };
        assert!(!repeated.validate(&f, &h));
    }
}
