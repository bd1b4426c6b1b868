use crate::structure::sigma_expansion;
use crate::{Error, Graph, Result, Vertex, VertexSet};

/// Joins the components of a forest into a spanning tree with the same `σ`.
///
/// Consecutive non-trivial components `T_j, T_{j+1}` are joined by an edge
/// `uv` with `u ∉ I_j` and `v ∈ I_{j+1}`, where `(I_j, R_j)` is the
/// preferred optimal pair of `T_j`; every new edge is covered by `I`, so the
/// weight does not change. Isolated vertices are hung as leaves on a vertex
/// of the first component's `I`.
///
/// An edgeless forest on two or more vertices has `σ = 0` while every tree on
/// its vertices has `σ ≥ 1`, so it is rejected.
pub fn complete_forest_to_tree(f: &Graph) -> Result<Graph> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    if f.is_tree() {
        return Ok(f.clone());
    }
    if f.edge_count() == 0 {
        return Err(Error::arg(
            "an edgeless forest on two or more vertices has no spanning tree with the same sigma",
        ));
    }
    let mut nontrivial: Vec<(Vec<Vertex>, VertexSet)> = Vec::new();
    let mut isolated = Vec::new();
    for comp in f.components() {
        if comp.len() == 1 {
            isolated.push(comp[0]);
            continue;
        }
        let sub = component_tree(f, &comp);
        let (_, pair) = sigma_expansion(&sub);
        let independent: VertexSet = pair.independent.iter().map(|i| comp[i]).collect();
        if independent.is_empty() {
            return Err(Error::Internal(format!(
                "component {comp:?} has an empty optimal I"
            )));
        }
        nontrivial.push((comp, independent));
    }
    let mut extra = Vec::new();
    for w in nontrivial.windows(2) {
        let u = w[0]
            .0
            .iter()
            .copied()
            .find(|&u| !w[0].1.contains(u))
            .expect("a tree edge has an endpoint outside I");
        let v = w[1].1.first().unwrap();
        extra.push((u, v));
    }
    let anchor = nontrivial[0].1.first().unwrap();
    extra.extend(isolated.into_iter().map(|w| (anchor, w)));
    let tree = f.with_edges(extra)?;

    let before = sigma_expansion(f).0;
    let after = sigma_expansion(&tree).0;
    if !tree.is_tree() || before != after {
        return Err(Error::Internal(format!(
            "forest completion gave sigma {after} (tree: {}), expected {before}",
            tree.is_tree()
        )));
    }
    Ok(tree)
}

/// The component induced on `comp`, relabelled to `0..comp.len()`.
fn component_tree(f: &Graph, comp: &[Vertex]) -> Graph {
    let local = |v: Vertex| comp.binary_search(&v).unwrap();
    let edges = f
        .edges()
        .iter()
        .filter(|&&(u, _)| comp.binary_search(&u).is_ok())
        .map(|&(u, v)| (local(u), local(v)));
    Graph::new(comp.len(), edges).expect("component edges are valid")
}
