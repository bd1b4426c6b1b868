use serde::Serialize;

use super::construct::{lower_bound_construction, star_family};
use super::embed::contains_expansion;
use super::turan::turan_number;
use crate::budget::Budget;
use crate::structure::{expand, sigma_expansion, sigma_expansion_with, SigmaMethod};
use crate::{choose2, Error, Graph, Result, TripleSystem, Vertex};

const DESCRIPTIVE: &str =
    "ratio = ex / ((sigma-1) C(n,2)) at small n is descriptive data only, not an asymptotic verification";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem1Row {
    pub n: usize,
    /// `(σ-1)·C(n-σ+1, 2)`.
    pub bound: usize,
    pub construction_edges: usize,
    pub construction_free: bool,
    /// `None` if `n < 3`.
    pub ex: Option<usize>,
    pub exact: bool,
    /// `ex ≥ bound`, when `ex` is known.
    pub ex_at_least_bound: Option<bool>,
    /// `None` when `σ = 1`.
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem1Report {
    pub forest: Graph,
    pub sigma: usize,
    pub rows: Vec<Theorem1Row>,
    pub note: &'static str,
}

impl Theorem1Report {
    /// Every construction is free and no exact value falls below the bound.
    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.construction_free && r.ex_at_least_bound != Some(false))
    }

    /// Some Turán value is only a lower bound.
    pub fn budget_exhausted(&self) -> bool {
        self.rows.iter().any(|r| r.ex.is_some() && !r.exact)
    }
}

/// For each `n`: the core-size-`(σ-1)` construction, its `T⁺`-freeness by
/// exact containment, and `ex₃(n, T⁺)` under `budget`.
pub fn audit_theorem1(
    t: &Graph,
    ns: &[usize],
    budget: Budget,
    workers: usize,
) -> Result<Theorem1Report> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    if t.edge_count() == 0 {
        return Err(Error::arg("the forest needs at least one edge"));
    }
    let (sigma, _) = sigma_expansion(t);
    let c = sigma - 1;
    let f = expand(t).triples;
    let mut rows = Vec::new();
    for &n in ns {
        if c > n {
            return Err(Error::arg(format!(
                "n = {n} is smaller than the core size {c}"
            )));
        }
        let h = lower_bound_construction(n, c)?;
        let bound = c * choose2(n - c);
        let (ex, exact) = if n >= 3 {
            let r = turan_number(n, &f, budget, workers)?;
            (Some(r.value), r.exact)
        } else {
            (None, true)
        };
        let denom = c * choose2(n);
        rows.push(Theorem1Row {
            n,
            bound,
            construction_edges: h.len(),
            construction_free: contains_expansion(&h, t).is_none(),
            ex,
            exact,
            ex_at_least_bound: ex.map(|v| v >= bound),
            ratio: ex.filter(|_| denom > 0).map(|v| v as f64 / denom as f64),
        });
    }
    Ok(Theorem1Report {
        forest: t.clone(),
        sigma,
        rows,
        note: DESCRIPTIVE,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JumpFamily {
    /// Triples meeting `{0, 1}` exactly once.
    CoreTwo,
    /// Triples through vertex 0.
    Star,
    /// `σ ≤ 1`: no construction.
    None,
}

/// Containment of a `σ = 2` graph in the two host graphs on `k = |V(G)|`
/// non-isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaTwoShape {
    pub k: usize,
    /// The star `K_{1,k-1}` plus one edge between two leaves.
    pub in_star_plus_edge: bool,
    pub in_k2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JumpReport {
    pub graph: Graph,
    pub n: usize,
    pub sigma: usize,
    pub family: JumpFamily,
    pub edges: usize,
    pub expected_edges: usize,
    pub free: bool,
    pub construction: Option<TripleSystem>,
    pub sigma_two_shape: Option<SigmaTwoShape>,
}

impl JumpReport {
    pub fn passed(&self) -> bool {
        self.free && self.edges == self.expected_edges
    }
}

/// The quadratic-size `G⁺`-free family behind the jump: two core vertices
/// when `σ(G⁺) ≥ 3`, the star family when `σ(G⁺) = 2`.
pub fn audit_jump(g: &Graph, n: usize) -> Result<JumpReport> {
    let (sigma, _) = sigma_expansion_with(g, SigmaMethod::Auto)?;
    let (family, construction, expected) = match sigma {
        s if s >= 3 => {
            if n < 2 {
                return Err(Error::arg("n must be at least 2"));
            }
            (
                JumpFamily::CoreTwo,
                Some(lower_bound_construction(n, 2)?),
                2 * choose2(n - 2),
            )
        }
        2 => {
            if n < 1 {
                return Err(Error::arg("n must be at least 1"));
            }
            (JumpFamily::Star, Some(star_family(n)), choose2(n - 1))
        }
        _ => (JumpFamily::None, None, 0),
    };
    let free = construction
        .as_ref()
        .is_none_or(|h| contains_expansion(h, g).is_none());
    Ok(JumpReport {
        graph: g.clone(),
        n,
        sigma,
        family,
        edges: construction.as_ref().map_or(0, TripleSystem::len),
        expected_edges: expected,
        free,
        construction,
        sigma_two_shape: (sigma == 2).then(|| sigma_two_shape(g)),
    })
}

fn sigma_two_shape(g: &Graph) -> SigmaTwoShape {
    let active: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let k = active.len();
    let pos = |v: Vertex| active.iter().position(|&a| a == v).unwrap();
    let core = Graph::new(k, g.edges().iter().map(|&(u, v)| (pos(u), pos(v)))).unwrap();
    let star_plus = if k >= 3 {
        Graph::star(k - 1).with_edges([(1, 2)]).unwrap()
    } else {
        Graph::star(k - 1)
    };
    let k2 = Graph::complete_bipartite(2, k.saturating_sub(2));
    SigmaTwoShape {
        k,
        in_star_plus_edge: is_subgraph(&core, &star_plus),
        in_k2: is_subgraph(&core, &k2),
    }
}

/// Is `g` a (not necessarily induced) subgraph of `host`? Both are small.
fn is_subgraph(g: &Graph, host: &Graph) -> bool {
    fn rec(g: &Graph, host: &Graph, u: usize, map: &mut Vec<Vertex>, used: &mut Vec<bool>) -> bool {
        if u == g.n() {
            return true;
        }
        for v in 0..host.n() {
            if used[v]
                || !g
                    .neighbors(u)
                    .iter()
                    .filter(|&w| w < u)
                    .all(|w| host.has_edge(map[w], v))
            {
                continue;
            }
            used[v] = true;
            map.push(v);
            if rec(g, host, u + 1, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    g.n() <= host.n()
        && g.edge_count() <= host.edge_count()
        && rec(g, host, 0, &mut Vec::new(), &mut vec![false; host.n()])
}
