use std::collections::BTreeMap;

use serde::Serialize;

use super::coloring::{check_sides, subsets, Color, GridColoring, Label};
use crate::budget::{Budget, Meter};
use crate::{Error, Result, TripleSystem, Vertex, VertexSet};

/// A list of admissible colours on every edge of a grid `X × Y`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListAssignment {
    #[serde(rename = "X")]
    xs: Vec<Vertex>,
    #[serde(rename = "Y")]
    ys: Vec<Vertex>,
    lists: Vec<VertexSet>,
}

impl ListAssignment {
    /// Arbitrary lists; `lists[i][j]` belongs to `(xs[i], ys[j])`.
    pub fn new(xs: Vec<Vertex>, ys: Vec<Vertex>, lists: Vec<Vec<VertexSet>>) -> Result<Self> {
        check_sides(&xs, &ys)?;
        if lists.len() != xs.len() || lists.iter().any(|r| r.len() != ys.len()) {
            return Err(Error::arg(format!(
                "list matrix must be {} x {}",
                xs.len(),
                ys.len()
            )));
        }
        Ok(ListAssignment {
            xs,
            ys,
            lists: lists.concat(),
        })
    }

    pub fn xs(&self) -> &[Vertex] {
        &self.xs
    }

    pub fn ys(&self) -> &[Vertex] {
        &self.ys
    }

    /// List of the `(i, j)` cell, by position.
    pub fn at(&self, i: usize, j: usize) -> &VertexSet {
        &self.lists[i * self.ys.len() + j]
    }

    /// List of the edge `xy`, by vertex label.
    pub fn list(&self, x: Vertex, y: Vertex) -> Option<&VertexSet> {
        let i = self.xs.iter().position(|&v| v == x)?;
        let j = self.ys.iter().position(|&v| v == y)?;
        Some(self.at(i, j))
    }

    pub fn min_list_size(&self) -> usize {
        self.lists.iter().map(VertexSet::len).min().unwrap_or(0)
    }
}

/// `L(e) = N_H(e) \ (X ∪ Y)` for every grid edge `e`.
pub fn build_list_assignment(
    h: &TripleSystem,
    xs: &[Vertex],
    ys: &[Vertex],
) -> Result<ListAssignment> {
    check_sides(xs, ys)?;
    if let Some(v) = xs.iter().chain(ys).find(|&&v| v >= h.n()) {
        return Err(Error::arg(format!("vertex {v} is not in H")));
    }
    let mut third: BTreeMap<(Vertex, Vertex), VertexSet> = BTreeMap::new();
    for &[a, b, c] in h.edges() {
        for (p, z) in [((a, b), c), ((a, c), b), ((b, c), a)] {
            third.entry(p).or_default().insert(z);
        }
    }
    let grid: VertexSet = xs.iter().chain(ys).copied().collect();
    let mut rows = Vec::with_capacity(xs.len());
    for &x in xs {
        let mut row = Vec::with_capacity(ys.len());
        for &y in ys {
            let nb = third.get(&(x.min(y), x.max(y))).ok_or_else(|| {
                Error::arg(format!("grid edge {x}-{y} is not in the shadow of H"))
            })?;
            row.push(nb.difference(&grid));
        }
        rows.push(row);
    }
    ListAssignment::new(xs.to_vec(), ys.to_vec(), rows)
}

/// `m` list colourings of one grid giving every edge `m` distinct colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multicoloring {
    pub colorings: Vec<GridColoring>,
}

impl Multicoloring {
    /// Every colouring picks from the lists of `la` and no edge sees a colour
    /// twice.
    pub fn is_valid_for(&self, la: &ListAssignment) -> bool {
        self.colorings.iter().all(|c| is_list_coloring(c, la))
            && (0..la.xs.len()).all(|i| {
                (0..la.ys.len()).all(|j| {
                    let mut seen = VertexSet::new();
                    self.colorings.iter().all(|c| seen.insert(c.at(i, j)))
                })
            })
    }

    /// No colour is used by two different colourings.
    pub fn is_pairwise_disjoint(&self) -> bool {
        let mut seen = VertexSet::new();
        self.colorings.iter().all(|c| {
            let used: VertexSet = c.rows().flatten().copied().collect();
            let ok = used.is_disjoint(&seen);
            seen.union_with(&used);
            ok
        })
    }
}

fn is_list_coloring(c: &GridColoring, la: &ListAssignment) -> bool {
    c.xs() == la.xs.as_slice()
        && c.ys() == la.ys.as_slice()
        && (0..la.xs.len()).all(|i| (0..la.ys.len()).all(|j| la.at(i, j).contains(c.at(i, j))))
}

/// The `m` smallest colours of each list, one colouring per rank; absent if
/// some list has fewer than `m` colours.
pub fn extract_multicoloring(la: &ListAssignment, m: usize) -> Result<Option<Multicoloring>> {
    if m == 0 {
        return Err(Error::arg("m must be at least 1"));
    }
    if la.min_list_size() < m {
        return Ok(None);
    }
    let colorings = (0..m)
        .map(|k| {
            let rows = (0..la.xs.len())
                .map(|i| {
                    (0..la.ys.len())
                        .map(|j| la.at(i, j).iter().nth(k).unwrap())
                        .collect()
                })
                .collect();
            GridColoring::new(la.xs.clone(), la.ys.clone(), rows).unwrap()
        })
        .collect();
    Ok(Some(Multicoloring { colorings }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StructuredColoring {
    /// One list colouring with all colours distinct.
    Rainbow { coloring: GridColoring },
    /// Pairwise disjoint list colourings, each monochromatic or canonical.
    Disjoint {
        multicoloring: Multicoloring,
        labels: Vec<Label>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuredMulticoloring {
    /// The `s × s` subgrid's lists.
    pub lists: ListAssignment,
    pub result: StructuredColoring,
}

impl StructuredMulticoloring {
    /// Re-checks the certificate from scratch.
    pub fn is_valid(&self, m: usize) -> bool {
        match &self.result {
            StructuredColoring::Rainbow { coloring } => {
                is_list_coloring(coloring, &self.lists) && coloring.classify().rainbow
            }
            StructuredColoring::Disjoint {
                multicoloring,
                labels,
            } => {
                multicoloring.colorings.len() == m
                    && labels.len() == m
                    && multicoloring.is_valid_for(&self.lists)
                    && multicoloring.is_pairwise_disjoint()
                    && multicoloring
                        .colorings
                        .iter()
                        .zip(labels)
                        .all(|(c, &l)| l != Label::Rainbow && c.classify().has(l))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum StructuredOutcome {
    Found(StructuredMulticoloring),
    /// Every subgrid was searched exhaustively.
    Absent,
    BudgetExhausted,
}

/// Exact search over `s × s` subgrids (lexicographic order) for a rainbow
/// list colouring, or failing that `m` pairwise disjoint list colourings each
/// monochromatic, `X`-canonical or `Y`-canonical.
pub fn find_structured_multicoloring(
    la: &ListAssignment,
    m: usize,
    s: usize,
    budget: Budget,
) -> Result<StructuredOutcome> {
    if m == 0 {
        return Err(Error::arg("m must be at least 1"));
    }
    if s == 0 || s > la.xs.len().min(la.ys.len()) {
        return Err(Error::arg(format!(
            "s = {s} must be between 1 and min(|X|, |Y|) = {}",
            la.xs.len().min(la.ys.len())
        )));
    }
    let meter = budget.start();
    for rows in subsets(la.xs.len(), s) {
        for cols in subsets(la.ys.len(), s) {
            let sub = ListAssignment {
                xs: rows.iter().map(|&i| la.xs[i]).collect(),
                ys: cols.iter().map(|&j| la.ys[j]).collect(),
                lists: rows
                    .iter()
                    .flat_map(|&i| cols.iter().map(move |&j| la.at(i, j).clone()))
                    .collect(),
            };
            match solve_subgrid(&sub, m, &meter) {
                Some(result) => {
                    let found = StructuredMulticoloring { lists: sub, result };
                    debug_assert!(found.is_valid(m));
                    return Ok(StructuredOutcome::Found(found));
                }
                None if meter.exhausted() => return Ok(StructuredOutcome::BudgetExhausted),
                None => {}
            }
        }
    }
    Ok(StructuredOutcome::Absent)
}

fn solve_subgrid(la: &ListAssignment, m: usize, meter: &Meter) -> Option<StructuredColoring> {
    if let Some(c) = rainbow(la, meter) {
        return Some(StructuredColoring::Rainbow { coloring: c });
    }
    if meter.exhausted() {
        return None;
    }
    let candidates = structured_candidates(la, meter)?;
    let mut chosen = Vec::with_capacity(m);
    if !pack(&candidates, 0, m, &mut VertexSet::new(), &mut chosen, meter) {
        return None;
    }
    let (colorings, labels) = chosen
        .iter()
        .map(|&k| (candidates[k].coloring.clone(), candidates[k].label))
        .unzip();
    Some(StructuredColoring::Disjoint {
        multicoloring: Multicoloring { colorings },
        labels,
    })
}

/// Distinct colours on all edges via bipartite matching (Kuhn's algorithm).
fn rainbow(la: &ListAssignment, meter: &Meter) -> Option<GridColoring> {
    let cells = la.lists.len();
    let mut owner: BTreeMap<Color, usize> = BTreeMap::new();
    let mut assigned: Vec<Option<Color>> = vec![None; cells];

    fn augment(
        e: usize,
        la: &ListAssignment,
        owner: &mut BTreeMap<Color, usize>,
        assigned: &mut [Option<Color>],
        visited: &mut VertexSet,
        meter: &Meter,
    ) -> bool {
        for c in &la.lists[e] {
            if !meter.tick() {
                return false;
            }
            if !visited.insert(c) {
                continue;
            }
            let free = match owner.get(&c) {
                None => true,
                Some(&f) => augment(f, la, owner, assigned, visited, meter),
            };
            if free {
                owner.insert(c, e);
                assigned[e] = Some(c);
                return true;
            }
        }
        false
    }

    for e in 0..cells {
        if !augment(
            e,
            la,
            &mut owner,
            &mut assigned,
            &mut VertexSet::new(),
            meter,
        ) {
            return None;
        }
    }
    let s = la.ys.len();
    let rows = assigned
        .chunks(s)
        .map(|r| r.iter().map(|c| c.unwrap()).collect())
        .collect();
    GridColoring::new(la.xs.clone(), la.ys.clone(), rows).ok()
}

struct Candidate {
    coloring: GridColoring,
    label: Label,
    used: VertexSet,
}

/// Every monochromatic and canonical list colouring of the grid, in a fixed
/// order. `None` if the budget ran out.
fn structured_candidates(la: &ListAssignment, meter: &Meter) -> Option<Vec<Candidate>> {
    let (a, b) = (la.xs.len(), la.ys.len());
    let make = |f: &dyn Fn(usize, usize) -> Color| {
        let rows = (0..a).map(|i| (0..b).map(|j| f(i, j)).collect()).collect();
        GridColoring::new(la.xs.clone(), la.ys.clone(), rows).unwrap()
    };
    let mut out = Vec::new();

    let common = la
        .lists
        .iter()
        .skip(1)
        .fold(la.lists[0].clone(), |acc, l| acc.intersection(l));
    for c in &common {
        if !meter.tick() {
            return None;
        }
        out.push(Candidate {
            coloring: make(&|_, _| c),
            label: Label::Monochromatic,
            used: VertexSet::singleton(c),
        });
    }

    let row_common: Vec<VertexSet> = (0..a)
        .map(|i| (1..b).fold(la.at(i, 0).clone(), |acc, j| acc.intersection(la.at(i, j))))
        .collect();
    for pick in distinct_representatives(&row_common, meter)? {
        out.push(Candidate {
            coloring: make(&|i, _| pick[i]),
            label: Label::XCanonical,
            used: pick.iter().copied().collect(),
        });
    }

    let col_common: Vec<VertexSet> = (0..b)
        .map(|j| (1..a).fold(la.at(0, j).clone(), |acc, i| acc.intersection(la.at(i, j))))
        .collect();
    for pick in distinct_representatives(&col_common, meter)? {
        out.push(Candidate {
            coloring: make(&|_, j| pick[j]),
            label: Label::YCanonical,
            used: pick.iter().copied().collect(),
        });
    }
    Some(out)
}

/// All systems of distinct representatives, lexicographically.
fn distinct_representatives(sets: &[VertexSet], meter: &Meter) -> Option<Vec<Vec<Color>>> {
    fn rec(
        sets: &[VertexSet],
        cur: &mut Vec<Color>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<Color>>,
        meter: &Meter,
    ) -> bool {
        if cur.len() == sets.len() {
            out.push(cur.clone());
            return true;
        }
        for c in &sets[cur.len()] {
            if !meter.tick() {
                return false;
            }
            if used.contains(c) {
                continue;
            }
            used.insert(c);
            cur.push(c);
            let ok = rec(sets, cur, used, out, meter);
            cur.pop();
            used.remove(c);
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    rec(
        sets,
        &mut Vec::new(),
        &mut VertexSet::new(),
        &mut out,
        meter,
    )
    .then_some(out)
}

/// Chooses `m` candidates with pairwise disjoint colour sets, increasing
/// indices only so each packing is tried once.
fn pack(
    cands: &[Candidate],
    start: usize,
    m: usize,
    used: &mut VertexSet,
    chosen: &mut Vec<usize>,
    meter: &Meter,
) -> bool {
    if chosen.len() == m {
        return true;
    }
    for k in start..cands.len() {
        if cands.len() - k < m - chosen.len() || !meter.tick() {
            return false;
        }
        if !cands[k].used.is_disjoint(used) {
            continue;
        }
        used.union_with(&cands[k].used);
        chosen.push(k);
        if pack(cands, k + 1, m, used, chosen, meter) {
            return true;
        }
        chosen.pop();
        used.difference_with(&cands[k].used);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn uniform(a: usize, b: usize, f: impl Fn(usize, usize) -> VertexSet) -> ListAssignment {
        let rows = (0..a).map(|i| (0..b).map(|j| f(i, j)).collect()).collect();
        ListAssignment::new((0..a).collect(), (a..a + b).collect(), rows).unwrap()
    }

    #[test]
    fn list_examples() {
        let h = TripleSystem::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(
            build_list_assignment(&h, &[0], &[1]).unwrap().at(0, 0),
            &set(&[2])
        );
        let h = TripleSystem::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(
            build_list_assignment(&h, &[0], &[1]).unwrap().at(0, 0),
            &set(&[2, 3])
        );
        let h = TripleSystem::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(
            build_list_assignment(&h, &[0], &[2]).unwrap().at(0, 0),
            &set(&[1])
        );
        // 1 sits in the grid, so it drops out of L(02)
        let la = build_list_assignment(&h, &[0], &[1, 2]).unwrap();
        assert!(la.at(0, 1).is_empty());
        assert!(build_list_assignment(&h, &[0], &[0]).is_err());
        let h = TripleSystem::new(4, [[0, 1, 2]]).unwrap();
        assert!(build_list_assignment(&h, &[0], &[3]).is_err());
    }

    #[test]
    fn multicoloring_extraction() {
        let la = uniform(2, 2, |i, j| set(&[10 + i, 20 + j, 30]));
        let mc = extract_multicoloring(&la, 3).unwrap().unwrap();
        assert!(mc.is_valid_for(&la));
        assert!(extract_multicoloring(&la, 4).unwrap().is_none());
        let la = uniform(2, 2, |i, _| if i == 0 { set(&[1]) } else { set(&[1, 2]) });
        assert!(extract_multicoloring(&la, 2).unwrap().is_none());
        assert!(extract_multicoloring(&la, 0).is_err());
    }

    #[test]
    fn one_shared_colour_gives_monochromatic() {
        let la = uniform(2, 2, |_, _| set(&[7]));
        let StructuredOutcome::Found(f) =
            find_structured_multicoloring(&la, 1, 2, Budget::unlimited()).unwrap()
        else {
            panic!("expected a colouring");
        };
        assert!(f.is_valid(1));
        assert!(
            matches!(&f.result, StructuredColoring::Disjoint { labels, .. } if labels == &[Label::Monochromatic])
        );
    }

    #[test]
    fn disjoint_lists_give_rainbow() {
        let la = uniform(2, 2, |i, j| set(&[10 * i + j]));
        let StructuredOutcome::Found(f) =
            find_structured_multicoloring(&la, 1, 2, Budget::unlimited()).unwrap()
        else {
            panic!("expected a colouring");
        };
        assert!(matches!(f.result, StructuredColoring::Rainbow { .. }));
        assert!(f.is_valid(1));
    }

    #[test]
    fn crafted_three_by_three() {
        // every list {0, 1}: no rainbow, two disjoint monochromatic colourings
        let la = uniform(3, 3, |_, _| set(&[0, 1]));
        let StructuredOutcome::Found(f) =
            find_structured_multicoloring(&la, 2, 3, Budget::unlimited()).unwrap()
        else {
            panic!("expected a colouring");
        };
        assert!(f.is_valid(2));
        assert_eq!(
            find_structured_multicoloring(&la, 3, 3, Budget::unlimited()).unwrap(),
            StructuredOutcome::Absent
        );
        // row lists {i, 5}: X-canonical plus a monochromatic one
        let la = uniform(3, 3, |i, j| set(&[i, 5, 6 + 3 * i + j]));
        let out = find_structured_multicoloring(&la, 1, 3, Budget::unlimited()).unwrap();
        let StructuredOutcome::Found(f) = out else {
            panic!()
        };
        assert!(f.is_valid(1));
    }

    #[test]
    fn budget_and_range() {
        let la = uniform(3, 3, |_, _| set(&[0, 1]));
        let tiny = Budget::unlimited().with_nodes(2);
        assert_eq!(
            find_structured_multicoloring(&la, 3, 3, tiny).unwrap(),
            StructuredOutcome::BudgetExhausted
        );
        assert!(find_structured_multicoloring(&la, 1, 4, Budget::unlimited()).is_err());
        assert!(find_structured_multicoloring(&la, 0, 1, Budget::unlimited()).is_err());
    }
}
