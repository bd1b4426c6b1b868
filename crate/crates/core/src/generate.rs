//! Exhaustive generation of small unlabelled trees, forests and 3-trees.

use std::collections::{BTreeMap, BTreeSet};

use crate::triple::triple;
use crate::{Graph, TripleSystem, Vertex};

/// All non-isomorphic trees on `n ≥ 1` vertices, canonically labelled
/// (preorder from the centre), sorted by canonical code.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "trees need at least one vertex");
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let (code, g) = canonical_tree(&Graph::empty(1));
    level.insert(code, g);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.n() {
                let grown =
                    Graph::new(size, t.edges().iter().copied().chain([(v, size - 1)])).unwrap();
                let (code, g) = canonical_tree(&grown);
                next.entry(code).or_insert(g);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// All non-isomorphic forests on `n` vertices (isolated vertices count as
/// one-vertex trees).
pub fn forests(n: usize) -> Vec<Graph> {
    let by_size: Vec<Vec<Graph>> = (0..=n)
        .map(|k| if k == 0 { Vec::new() } else { trees(k) })
        .collect();
    let mut out = Vec::new();
    let mut parts = Vec::new();
    collect_forests(n, n, usize::MAX, &by_size, &mut parts, &mut out);
    out
}

/// `parts` holds `(size, index)` pairs in non-increasing lexicographic order,
/// so every multiset of trees is produced once.
fn collect_forests(
    remaining: usize,
    max_size: usize,
    max_index: usize,
    by_size: &[Vec<Graph>],
    parts: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) {
    if remaining == 0 {
        out.push(disjoint_union(parts.iter().map(|&(s, i)| &by_size[s][i])));
        return;
    }
    for size in (1..=remaining.min(max_size)).rev() {
        let limit = if size == max_size {
            max_index
        } else {
            by_size[size].len() - 1
        };
        for idx in (0..=limit.min(by_size[size].len() - 1)).rev() {
            parts.push((size, idx));
            collect_forests(remaining - size, size, idx, by_size, parts, out);
            parts.pop();
        }
    }
}

fn disjoint_union<'a>(graphs: impl Iterator<Item = &'a Graph>) -> Graph {
    let mut n = 0;
    let mut edges = Vec::new();
    for g in graphs {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + n, v + n)));
        n += g.n();
    }
    Graph::new(n, edges).unwrap()
}

/// Canonical code of a tree and the tree relabelled in canonical preorder.
pub fn canonical_tree(t: &Graph) -> (String, Graph) {
    assert!(t.is_tree(), "canonical_tree needs a tree");
    let centres = centres(t);
    let (code, root) = centres
        .iter()
        .map(|&c| (rooted_code(t, c, usize::MAX), c))
        .min()
        .unwrap();
    let mut label = vec![usize::MAX; t.n()];
    let mut next = 0;
    relabel(t, root, usize::MAX, &mut label, &mut next);
    let g = Graph::new(t.n(), t.edges().iter().map(|&(u, v)| (label[u], label[v]))).unwrap();
    (code, g)
}

fn centres(t: &Graph) -> Vec<Vertex> {
    let mut deg: Vec<usize> = (0..t.n()).map(|v| t.degree(v)).collect();
    let mut alive = t.n();
    let mut layer: Vec<Vertex> = (0..t.n()).filter(|&v| deg[v] <= 1).collect();
    while alive > 2 {
        alive -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for u in t.neighbors(v) {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, v: Vertex, parent: Vertex) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| rooted_code(t, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn relabel(t: &Graph, v: Vertex, parent: Vertex, label: &mut [usize], next: &mut usize) {
    label[v] = *next;
    *next += 1;
    let mut kids: Vec<(String, Vertex)> = t
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| (rooted_code(t, u, v), u))
        .collect();
    kids.sort();
    for (_, u) in kids {
        relabel(t, u, v, label, next);
    }
}

/// Canonical form of a triple system by minimising the sorted edge list over
/// all vertex permutations. Only sensible for `n ≤ 8`.
pub fn canonical_triple_system(h: &TripleSystem) -> TripleSystem {
    let n = h.n();
    let mut perm: Vec<Vertex> = (0..n).collect();
    let mut best: Option<Vec<[Vertex; 3]>> = None;
    loop {
        let mut edges: Vec<[Vertex; 3]> = h
            .edges()
            .iter()
            .map(|&[a, b, c]| triple(perm[a], perm[b], perm[c]))
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    TripleSystem::new(n, best.unwrap()).unwrap()
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Non-isomorphic 3-trees on at most `max_vertices` vertices.
///
/// A 3-tree is built edge by edge; each new edge meets the union of the
/// previous edges inside a single earlier edge.
pub fn hypertrees(max_vertices: usize) -> Vec<TripleSystem> {
    let mut seen: BTreeSet<TripleSystem> = BTreeSet::new();
    if max_vertices < 3 {
        return Vec::new();
    }
    let mut frontier = vec![vec![[0, 1, 2]]];
    seen.insert(canonical_triple_system(
        &TripleSystem::new(3, [[0, 1, 2]]).unwrap(),
    ));
    while let Some(edges) = frontier.pop() {
        let used = edges.iter().flatten().max().unwrap() + 1;
        for anchor in &edges {
            // keep 1 or 2 vertices of an existing edge, add fresh ones
            for keep_mask in 1u8..7 {
                let kept: Vec<Vertex> = (0..3)
                    .filter(|b| keep_mask >> b & 1 == 1)
                    .map(|b| anchor[b])
                    .collect();
                if kept.len() == 3 {
                    continue;
                }
                let fresh = 3 - kept.len();
                if used + fresh > max_vertices {
                    continue;
                }
                let mut e = kept.clone();
                e.extend(used..used + fresh);
                let e = triple(e[0], e[1], e[2]);
                let mut next = edges.clone();
                next.push(e);
                let h = TripleSystem::new(used + fresh, next.iter().copied()).unwrap();
                if seen.insert(canonical_triple_system(&h)) {
                    frontier.push(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_match_known_sequence() {
        // unlabelled trees on 1..=10 vertices
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (n, &count) in (1..=10).zip(expected.iter()) {
            let ts = trees(n);
            assert_eq!(ts.len(), count, "n = {n}");
            assert!(ts.iter().all(|t| t.is_tree() && t.n() == n));
        }
    }

    #[test]
    fn forest_counts_match_known_sequence() {
        // unlabelled forests on 1..=9 vertices
        let expected = [1, 2, 3, 6, 10, 20, 37, 76, 153];
        for (n, &count) in (1..=9).zip(expected.iter()) {
            let fs = forests(n);
            assert_eq!(fs.len(), count, "n = {n}");
            assert!(fs.iter().all(|f| f.is_forest() && f.n() == n));
        }
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_tree(&a), canonical_tree(&b));
        assert_ne!(canonical_tree(&a).0, canonical_tree(&Graph::star(3)).0);
    }

    #[test]
    fn small_hypertrees() {
        let hs = hypertrees(5);
        // one edge; two edges sharing a pair; two edges sharing a vertex;
        // three edges through a pair; a pair-sharing chain of three edges
        assert_eq!(hs.len(), 5, "{hs:?}");
        assert_eq!(hypertrees(4).len(), 2);
    }
}
