//! Brute-force oracles. Each one recomputes a quantity straight from its
//! definition, sharing no code with the library algorithms it checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use hyperexp::ramsey::GridColoring;
use hyperexp::{Graph, TripleSystem, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Smallest vertex set meeting every edge exactly once, over all subsets of
/// the vertices that lie in an edge.
pub fn crosscut_size(h: &TripleSystem) -> Option<usize> {
    let span: Vec<usize> = h
        .edges()
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let k = span.len();
    assert!(k <= 24, "too many vertices for the brute-force oracle");
    let pos = |v: usize| span.iter().position(|&x| x == v).unwrap();
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| 1u32 << pos(v)).sum())
        .collect();
    (0u32..1 << k)
        .filter(|s| masks.iter().all(|m| (m & s).count_ones() == 1))
        .map(|s| s.count_ones() as usize)
        .min()
}

/// `(min weight, max |I| among minimum-weight pairs)` over all independent
/// sets `I`, where weight is `|I| + #edges missing I`.
pub fn sigma_pair_key(g: &Graph) -> (usize, usize) {
    let n = g.n();
    assert!(n <= 20);
    let mut best = (usize::MAX, 0);
    for s in 0u32..1 << n {
        let inside = |v: usize| s >> v & 1 == 1;
        if g.edges().iter().any(|&(u, v)| inside(u) && inside(v)) {
            continue;
        }
        let size = s.count_ones() as usize;
        let missed = g
            .edges()
            .iter()
            .filter(|&&(u, v)| !inside(u) && !inside(v))
            .count();
        let w = size + missed;
        if w < best.0 || (w == best.0 && size > best.1) {
            best = (w, size);
        }
    }
    best
}

/// Every injective map `V(F) → V(H)`.
pub fn contains(h: &TripleSystem, f: &TripleSystem) -> bool {
    fn rec(
        h: &HashSet<[usize; 3]>,
        hn: usize,
        f: &TripleSystem,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if map.len() == f.n() {
            return f.edges().iter().all(|e| {
                let mut img = [map[e[0]], map[e[1]], map[e[2]]];
                img.sort_unstable();
                h.contains(&img)
            });
        }
        for v in 0..hn {
            if used[v] {
                continue;
            }
            used[v] = true;
            map.push(v);
            let ok = rec(h, hn, f, map, used);
            map.pop();
            used[v] = false;
            if ok {
                return true;
            }
        }
        false
    }
    if f.n() > h.n() {
        return false;
    }
    let set: HashSet<[usize; 3]> = h.edges().iter().copied().collect();
    rec(&set, h.n(), f, &mut Vec::new(), &mut vec![false; h.n()])
}

/// Maximum size of an `F`-free family over all `2^C(n,3)` families.
pub fn turan(n: usize, f: &TripleSystem) -> usize {
    let all = TripleSystem::complete(n);
    let m = all.len();
    assert!(m <= 20);
    let mut best = 0;
    for mask in 0u32..1 << m {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let h = TripleSystem::new(
            n,
            (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| all.edges()[i]),
        )
        .unwrap();
        if !contains(&h, f) {
            best = size;
        }
    }
    best
}

/// Two-colours each component by BFS and applies the definition of `λ`.
pub fn lambda(f: &Graph) -> usize {
    let n = f.n();
    let mut side = vec![usize::MAX; n];
    let mut total = 0;
    for root in 0..n {
        if side[root] != usize::MAX {
            continue;
        }
        side[root] = 0;
        let mut classes = [vec![root], vec![]];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in f.neighbors(u) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    classes[side[w]].push(w);
                    queue.push_back(w);
                }
            }
        }
        let small = if classes[0].len() <= classes[1].len() {
            &classes[0]
        } else {
            &classes[1]
        };
        let leaf = small.iter().any(|&v| f.degree(v) == 1);
        total += small.len() - usize::from(leaf);
    }
    total
}

/// Does some `s × s` subgrid have one colour, all distinct colours, or a
/// colouring constant on rows (or columns) with distinct row (column)
/// colours?
pub fn has_classified_subgrid(c: &GridColoring, s: usize) -> bool {
    let rows = choose(c.xs().len(), s);
    let cols = choose(c.ys().len(), s);
    rows.iter().any(|r| {
        cols.iter().any(|q| {
            let cells: Vec<usize> = r
                .iter()
                .flat_map(|&i| q.iter().map(move |&j| c.at(i, j)))
                .collect();
            let distinct: HashSet<usize> = cells.iter().copied().collect();
            let row_colours: Vec<HashSet<usize>> = r
                .iter()
                .map(|&i| q.iter().map(|&j| c.at(i, j)).collect())
                .collect();
            let col_colours: Vec<HashSet<usize>> = q
                .iter()
                .map(|&j| r.iter().map(|&i| c.at(i, j)).collect())
                .collect();
            let canonical = |groups: &[HashSet<usize>]| {
                groups.iter().all(|g| g.len() == 1)
                    && groups
                        .iter()
                        .flatten()
                        .copied()
                        .collect::<HashSet<_>>()
                        .len()
                        == groups.len()
            };
            distinct.len() == 1
                || distinct.len() == cells.len()
                || canonical(&row_colours)
                || canonical(&col_colours)
        })
    })
}

/// All `k`-subsets of `0..n`, via bitmasks.
pub fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Pairwise intersections of the chosen sets all equal one core.
pub fn is_sunflower(sets: &[VertexSet], petals: &[usize]) -> bool {
    let mut cores = HashSet::new();
    for (a, &i) in petals.iter().enumerate() {
        for &j in &petals[a + 1..] {
            if i == j {
                return false;
            }
            cores.insert(sets[i].intersection(&sets[j]).to_vec());
        }
    }
    cores.len() <= 1
}

pub fn random_triple_system<R: Rng>(rng: &mut R, n: usize, p: f64) -> TripleSystem {
    let edges: Vec<[usize; 3]> = TripleSystem::complete(n)
        .edges()
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(p))
        .collect();
    TripleSystem::new(n, edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A random labelled forest: each vertex after the first joins a random
/// earlier vertex with probability `p`, then labels are shuffled.
pub fn random_forest<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(p) {
            edges.push((perm[v], perm[rng.gen_range(0..v)]));
        }
    }
    Graph::new(n, edges).unwrap()
}
