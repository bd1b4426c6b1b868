use serde::Serialize;

use crate::{Graph, TripleSystem, Vertex};

/// The 3-uniform expansion `G⁺` of a graph.
///
/// The `i`-th edge of `base` (in canonical order) is enlarged by the fresh
/// vertex `base.n() + i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    pub base: Graph,
    pub triples: TripleSystem,
    /// `enlargement[i]` is `v_e` for `e = base.edges()[i]`.
    pub enlargement: Vec<Vertex>,
}

impl Expansion {
    pub fn enlargement_of(&self, u: Vertex, v: Vertex) -> Option<Vertex> {
        self.base.edge_index(u, v).map(|i| self.enlargement[i])
    }
}

pub fn expand(g: &Graph) -> Expansion {
    let n = g.n();
    let enlargement: Vec<Vertex> = (n..n + g.edge_count()).collect();
    let triples = TripleSystem::new(
        n + g.edge_count(),
        g.edges()
            .iter()
            .zip(&enlargement)
            .map(|(&(u, v), &w)| [u, v, w]),
    )
    .expect("enlargement vertices are fresh and distinct");
    Expansion {
        base: g.clone(),
        triples,
        enlargement,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let x = expand(&Graph::path(2));
        assert_eq!(x.triples.edges(), &[[0, 1, 2]]);
        assert_eq!(x.enlargement_of(1, 0), Some(2));
    }

    #[test]
    fn path_triples_share_the_centre_only() {
        let x = expand(&Graph::path(3));
        assert_eq!(x.triples.edges(), &[[0, 1, 3], [1, 2, 4]]);
        let [a, b] = [x.triples.edges()[0], x.triples.edges()[1]];
        let shared: Vec<_> = a.iter().filter(|v| b.contains(v)).collect();
        assert_eq!(shared, vec![&1]);
    }

    #[test]
    fn triangle() {
        let x = expand(&Graph::cycle(3).unwrap());
        assert_eq!(x.triples.edges(), &[[0, 1, 3], [0, 2, 4], [1, 2, 5]]);
        assert_eq!(x.triples.n(), 6);
    }
}
