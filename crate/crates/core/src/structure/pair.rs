//! Crosscut pairs `(I, R)`: `I` independent, `R` the edges missed by `I`.
//!
//! `σ(G⁺) = min |I| + |G - I|` over independent sets `I`. Optimal pairs are
//! ranked by weight, then by larger `|I|`, then by the lexicographically
//! smallest `I`. Two exact solvers compute the `(weight, |I|)` optimum under
//! forced memberships: a branch and bound for arbitrary graphs and a tree DP
//! for forests. The lexicographic tie-break is resolved on top of either by
//! fixing vertices in ascending order.

use std::cmp::Ordering;

use serde::Serialize;

use crate::{Error, Graph, Result, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscutPair {
    #[serde(rename = "I")]
    pub independent: VertexSet,
    #[serde(rename = "R")]
    pub uncovered: Vec<(Vertex, Vertex)>,
    pub weight: usize,
}

impl CrosscutPair {
    /// The pair determined by an independent set.
    pub fn from_independent(g: &Graph, independent: VertexSet) -> Result<Self> {
        if independent.last().is_some_and(|v| v >= g.n()) {
            return Err(Error::arg("independent set mentions a vertex >= n"));
        }
        if !g.is_independent(&independent) {
            return Err(Error::arg(format!("{independent:?} is not independent")));
        }
        let uncovered: Vec<_> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !independent.contains(u) && !independent.contains(v))
            .collect();
        let weight = independent.len() + uncovered.len();
        Ok(CrosscutPair {
            independent,
            uncovered,
            weight,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaMethod {
    /// Forests use the DP, everything else the branch and bound.
    Auto,
    BranchAndBound,
    ForestDp,
}

/// `σ(G⁺)` and the preferred optimal crosscut pair.
pub fn sigma_expansion(g: &Graph) -> (usize, CrosscutPair) {
    sigma_expansion_with(g, SigmaMethod::Auto).expect("automatic method accepts every graph")
}

pub fn sigma_expansion_with(g: &Graph, method: SigmaMethod) -> Result<(usize, CrosscutPair)> {
    let use_dp = match method {
        SigmaMethod::Auto => g.is_forest(),
        SigmaMethod::BranchAndBound => false,
        SigmaMethod::ForestDp => {
            if !g.is_forest() {
                return Err(Error::NotAForest);
            }
            true
        }
    };
    let solve = |fin: &VertexSet, fout: &VertexSet| {
        if use_dp {
            forest_dp(g, fin, fout)
        } else {
            BranchAndBound::new(g).solve(fin, fout)
        }
    };
    let mut forced_in = VertexSet::new();
    let mut forced_out = VertexSet::new();
    let target = solve(&forced_in, &forced_out).expect("the empty independent set is feasible");
    for v in 0..g.n() {
        forced_in.insert(v);
        if solve(&forced_in, &forced_out) != Some(target) {
            forced_in.remove(v);
            forced_out.insert(v);
        }
    }
    let pair = CrosscutPair::from_independent(g, forced_in)?;
    if (pair.weight, pair.independent.len()) != (target.weight, target.size) {
        return Err(Error::Internal(format!(
            "tie-break produced {pair:?}, expected {target:?}"
        )));
    }
    Ok((pair.weight, pair))
}

/// `(weight, |I|)`; smaller weight first, then larger `|I|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Key {
    weight: usize,
    size: usize,
}

impl Key {
    const ZERO: Key = Key { weight: 0, size: 0 };

    fn add(self, o: Key) -> Key {
        Key {
            weight: self.weight + o.weight,
            size: self.size + o.size,
        }
    }
}

impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        self.weight.cmp(&o.weight).then(o.size.cmp(&self.size))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

fn forest_dp(g: &Graph, forced_in: &VertexSet, forced_out: &VertexSet) -> Option<Key> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    // optimum of the subtree rooted at v, with v in I / with v not in I
    let mut with_v: Vec<Option<Key>> = vec![None; n];
    let mut without_v: Vec<Option<Key>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut inc = (!forced_out.contains(v)).then_some(Key { weight: 1, size: 1 });
        let mut exc = (!forced_in.contains(v)).then_some(Key::ZERO);
        for c in g.neighbors(v) {
            if parent[c] != v {
                continue;
            }
            inc = inc.and_then(|k| without_v[c].map(|o| k.add(o)));
            let uncovered = without_v[c].map(|o| o.add(Key { weight: 1, size: 0 }));
            let child = match (with_v[c], uncovered) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
            exc = exc.and_then(|k| child.map(|c| k.add(c)));
        }
        with_v[v] = inc;
        without_v[v] = exc;
    }
    let mut total = Key::ZERO;
    for v in 0..n {
        if parent[v] == usize::MAX {
            let best = match (with_v[v], without_v[v]) {
                (Some(a), Some(b)) => a.min(b),
                (a, b) => a.or(b)?,
            };
            total = total.add(best);
        }
    }
    Some(total)
}

const FREE: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct BranchAndBound<'a> {
    g: &'a Graph,
}

#[derive(Clone)]
struct State {
    status: Vec<u8>,
    key: Key,
    free: usize,
}

impl<'a> BranchAndBound<'a> {
    fn new(g: &'a Graph) -> Self {
        BranchAndBound { g }
    }

    fn solve(&self, forced_in: &VertexSet, forced_out: &VertexSet) -> Option<Key> {
        let mut st = State {
            status: vec![FREE; self.g.n()],
            key: Key::ZERO,
            free: self.g.n(),
        };
        for v in forced_in {
            if !self.set_in(&mut st, v) {
                return None;
            }
        }
        for v in forced_out {
            match st.status[v] {
                IN => return None,
                FREE => self.set_out(&mut st, v),
                _ => {}
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
        if self.g.neighbors(v).iter().any(|u| st.status[u] == IN) {
            return false;
        }
        st.status[v] = IN;
        st.free -= 1;
        st.key = st.key.add(Key { weight: 1, size: 1 });
        for u in self.g.neighbors(v) {
            if st.status[u] == FREE {
                self.set_out(st, u);
            }
        }
        true
    }

    fn set_out(&self, st: &mut State, v: Vertex) {
        st.status[v] = OUT;
        st.free -= 1;
        let both_out = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&u| st.status[u] == OUT)
            .count();
        st.key.weight += both_out;
    }

    /// Matching on open edges, disjoint on free endpoints: each matched edge
    /// costs one unit (an endpoint joins `I` or the edge joins `R`).
    fn lower_bound(&self, st: &State) -> usize {
        let mut used = VertexSet::new();
        let mut count = 0;
        for v in 0..self.g.n() {
            if st.status[v] != FREE || used.contains(v) {
                continue;
            }
            let nb = self.g.neighbors(v);
            if nb.iter().any(|u| st.status[u] == OUT) {
                used.insert(v);
                count += 1;
            } else if let Some(u) = nb
                .iter()
                .find(|&u| st.status[u] == FREE && !used.contains(u))
            {
                used.insert(v);
                used.insert(u);
                count += 1;
            }
        }
        count
    }

    fn dfs(&self, mut st: State, best: &mut Option<Key>) {
        if let Some(b) = *best {
            let lb = st.key.weight + self.lower_bound(&st);
            if lb > b.weight {
                return;
            }
            let room = (b.weight - st.key.weight).min(st.free);
            if lb == b.weight && st.key.size + room <= b.size {
                return;
            }
        }
        let branch = (0..self.g.n())
            .filter(|&v| st.status[v] == FREE)
            .max_by_key(|&v| (self.g.degree(v), std::cmp::Reverse(v)));
        match branch {
            Some(v) if self.g.degree(v) > 0 => {
                let mut inc = st.clone();
                if self.set_in(&mut inc, v) {
                    self.dfs(inc, best);
                }
                self.set_out(&mut st, v);
                self.dfs(st, best);
            }
            _ => {
                // only isolated free vertices remain; they stay out of I
                if best.is_none_or(|b| st.key < b) {
                    *best = Some(st.key);
                }
            }
        }
    }
}
