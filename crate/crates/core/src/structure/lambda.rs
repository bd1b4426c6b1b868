use crate::{Error, Graph, Result, Vertex};

/// `λ(T)`: the size of the smaller colour class `P`, minus one when `P`
/// contains a leaf. A one-vertex tree has `P = ∅` and `λ = 0`.
pub fn lambda_tree(t: &Graph) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let sides = t.bipartition().expect("trees are bipartite");
    let all: Vec<Vertex> = (0..t.n()).collect();
    Ok(lambda_component(t, &all, &sides))
}

/// Sum of `λ` over the components of a forest.
pub fn lambda_forest(f: &Graph) -> Result<usize> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let sides = f.bipartition().expect("forests are bipartite");
    Ok(f.components()
        .iter()
        .map(|c| lambda_component(f, c, &sides))
        .sum())
}

fn lambda_component(g: &Graph, comp: &[Vertex], sides: &[bool]) -> usize {
    let (a, b): (Vec<Vertex>, Vec<Vertex>) = comp.iter().partition(|&&v| !sides[v]);
    let small = if a.len() <= b.len() { a } else { b };
    let has_leaf = small.iter().any(|&v| g.degree(v) == 1);
    small.len() - usize::from(has_leaf)
}
