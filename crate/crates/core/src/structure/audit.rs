//! Executable audit of the crosscut-pair lemmas for a tree `T` with
//! `σ(T⁺) = ℓ + 1 > 0`, using the optimal pair that maximises `|I|`:
//!
//! - `|I| ≥ 1 + |R|`
//! - `|R| ≤ ℓ / 2`
//! - no pendant edge of `T` lies in `R`
//! - `d_T(r) ≤ ℓ - λ(R)` for every `r ∈ V(R)`

use serde::Serialize;

use crate::structure::{lambda_forest, sigma_expansion};
use crate::{Error, Graph, Result, Vertex, VertexSet};

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscutAudit {
    pub sigma: usize,
    #[serde(rename = "I")]
    pub independent: VertexSet,
    #[serde(rename = "R")]
    pub uncovered: Vec<(Vertex, Vertex)>,
    pub lambda: usize,
    pub checks: Vec<LemmaCheck>,
}

impl CrosscutAudit {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

pub fn check_crosscut_lemmas(t: &Graph) -> Result<CrosscutAudit> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let (sigma, pair) = sigma_expansion(t);
    if sigma == 0 {
        return Err(Error::arg(
            "the audit needs sigma(T+) > 0, i.e. a tree with an edge",
        ));
    }
    let ell = sigma - 1;
    let r_edges = &pair.uncovered;
    let r_graph = t.edge_subgraph(r_edges.iter().copied())?;
    let lambda = lambda_forest(&r_graph)?;

    let mut checks = Vec::new();

    let (i, r) = (pair.independent.len(), r_edges.len());
    checks.push(LemmaCheck {
        name: "independent_exceeds_uncovered",
        pass: i > r,
        detail: format!("|I| = {i}, |R| = {r}"),
    });
    checks.push(LemmaCheck {
        name: "uncovered_at_most_half_ell",
        pass: 2 * r <= ell,
        detail: format!("|R| = {r}, ell = {ell}"),
    });

    let pendant: Vec<_> = r_edges
        .iter()
        .filter(|&&(u, v)| t.degree(u) == 1 || t.degree(v) == 1)
        .collect();
    checks.push(LemmaCheck {
        name: "no_pendant_edge_in_uncovered",
        pass: pendant.is_empty(),
        detail: if pendant.is_empty() {
            "none".into()
        } else {
            format!("pendant edges in R: {pendant:?}")
        },
    });

    let bound = ell as i64 - lambda as i64;
    let violators: Vec<_> = Graph::span(r_edges)
        .iter()
        .filter(|&v| t.degree(v) as i64 > bound)
        .map(|v| (v, t.degree(v)))
        .collect();
    checks.push(LemmaCheck {
        name: "uncovered_vertex_degree_bound",
        pass: violators.is_empty(),
        detail: if violators.is_empty() {
            format!("every r in V(R) has degree <= ell - lambda = {bound}")
        } else {
            format!("(vertex, degree) above {bound}: {violators:?}")
        },
    });

    Ok(CrosscutAudit {
        sigma,
        independent: pair.independent,
        uncovered: pair.uncovered,
        lambda,
        checks,
    })
}
