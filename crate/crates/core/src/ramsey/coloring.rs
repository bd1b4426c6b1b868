use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::{Error, Result, Vertex};

pub type Color = usize;

/// An edge colouring of the complete bipartite grid `X × Y`, stored row-major
/// (row `i` is `xs[i]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GridRepr", try_from = "GridRepr")]
pub struct GridColoring {
    xs: Vec<Vertex>,
    ys: Vec<Vertex>,
    colors: Vec<Color>,
}

#[derive(Serialize, Deserialize)]
struct GridRepr {
    #[serde(rename = "X")]
    xs: Vec<Vertex>,
    #[serde(rename = "Y")]
    ys: Vec<Vertex>,
    color: Vec<Vec<Color>>,
}

impl From<GridColoring> for GridRepr {
    fn from(c: GridColoring) -> Self {
        let color = c.rows().map(|r| r.to_vec()).collect();
        GridRepr {
            xs: c.xs,
            ys: c.ys,
            color,
        }
    }
}

impl TryFrom<GridRepr> for GridColoring {
    type Error = Error;

    fn try_from(r: GridRepr) -> Result<Self> {
        GridColoring::new(r.xs, r.ys, r.color)
    }
}

pub(crate) fn check_sides(xs: &[Vertex], ys: &[Vertex]) -> Result<()> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::arg("both sides of a grid need at least one vertex"));
    }
    let mut all: Vec<Vertex> = xs.iter().chain(ys).copied().collect();
    all.sort_unstable();
    if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::arg(format!(
            "vertex {} appears twice in the grid",
            w[0]
        )));
    }
    Ok(())
}

impl GridColoring {
    /// `rows[i][j]` is the colour of `(xs[i], ys[j])`. The sides must be
    /// nonempty and disjoint, and the matrix must be total.
    pub fn new(xs: Vec<Vertex>, ys: Vec<Vertex>, rows: Vec<Vec<Color>>) -> Result<Self> {
        check_sides(&xs, &ys)?;
        if rows.len() != xs.len() || rows.iter().any(|r| r.len() != ys.len()) {
            return Err(Error::arg(format!(
                "colour matrix must be {} x {}",
                xs.len(),
                ys.len()
            )));
        }
        Ok(GridColoring {
            xs,
            ys,
            colors: rows.concat(),
        })
    }

    /// Grid on `X = 0..a`, `Y = a..a+b` coloured by `f(i, j)`.
    pub fn from_fn(a: usize, b: usize, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let rows = (0..a).map(|i| (0..b).map(|j| f(i, j)).collect()).collect();
        GridColoring::new((0..a).collect(), (a..a + b).collect(), rows)
    }

    pub fn xs(&self) -> &[Vertex] {
        &self.xs
    }

    pub fn ys(&self) -> &[Vertex] {
        &self.ys
    }

    /// Colour of the `(i, j)` cell, by position.
    pub fn at(&self, i: usize, j: usize) -> Color {
        self.colors[i * self.ys.len() + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Color]> {
        self.colors.chunks(self.ys.len())
    }

    /// Restriction to the given row and column positions.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> GridColoring {
        GridColoring {
            xs: rows.iter().map(|&i| self.xs[i]).collect(),
            ys: cols.iter().map(|&j| self.ys[j]).collect(),
            colors: rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| self.at(i, j)))
                .collect(),
        }
    }

    pub fn classify(&self) -> Classification {
        classify_cells(
            self,
            &(0..self.xs.len()).collect::<Vec<_>>(),
            &(0..self.ys.len()).collect::<Vec<_>>(),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    Monochromatic,
    Rainbow,
    XCanonical,
    YCanonical,
}

/// Which of the four labels a colouring satisfies. Degenerate grids can
/// satisfy several at once; all are reported.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Classification {
    pub monochromatic: bool,
    pub rainbow: bool,
    pub x_canonical: bool,
    pub y_canonical: bool,
}

impl Classification {
    pub fn labels(&self) -> Vec<Label> {
        [
            (self.monochromatic, Label::Monochromatic),
            (self.rainbow, Label::Rainbow),
            (self.x_canonical, Label::XCanonical),
            (self.y_canonical, Label::YCanonical),
        ]
        .into_iter()
        .filter(|p| p.0)
        .map(|p| p.1)
        .collect()
    }

    pub fn has(&self, l: Label) -> bool {
        self.labels().contains(&l)
    }

    /// True if some label holds.
    pub fn is_classified(&self) -> bool {
        self.monochromatic || self.rainbow || self.x_canonical || self.y_canonical
    }
}

/// Serialised as the list of labels, or `["none"]`.
impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let labels = self.labels();
        let mut seq = s.serialize_seq(Some(labels.len().max(1)))?;
        if labels.is_empty() {
            seq.serialize_element("none")?;
        }
        for l in labels {
            seq.serialize_element(&l)?;
        }
        seq.end()
    }
}

fn all_distinct(mut v: Vec<Color>) -> bool {
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

fn classify_cells(c: &GridColoring, rows: &[usize], cols: &[usize]) -> Classification {
    let first = c.at(rows[0], cols[0]);
    let cells = || {
        rows.iter()
            .flat_map(|&i| cols.iter().map(move |&j| c.at(i, j)))
    };
    let row_constant = rows
        .iter()
        .all(|&i| cols.iter().all(|&j| c.at(i, j) == c.at(i, cols[0])));
    let col_constant = cols
        .iter()
        .all(|&j| rows.iter().all(|&i| c.at(i, j) == c.at(rows[0], j)));
    Classification {
        monochromatic: cells().all(|x| x == first),
        rainbow: all_distinct(cells().collect()),
        x_canonical: row_constant && all_distinct(rows.iter().map(|&i| c.at(i, cols[0])).collect()),
        y_canonical: col_constant && all_distinct(cols.iter().map(|&j| c.at(rows[0], j)).collect()),
    }
}

/// A classified `s × s` subgrid, by vertex label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgrid {
    #[serde(rename = "X")]
    pub xs: Vec<Vertex>,
    #[serde(rename = "Y")]
    pub ys: Vec<Vertex>,
    pub classification: Classification,
}

/// All sorted `k`-subsets of `0..n`, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n - (k - cur.len()) {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// First `s × s` subgrid (row subsets in lexicographic order, then column
/// subsets) whose restriction is monochromatic, rainbow or canonical.
///
/// Row subsets are scanned in parallel; the earliest hit in that order wins,
/// so the answer does not depend on the thread count.
pub fn find_classified_subgrid(c: &GridColoring, s: usize) -> Result<Option<Subgrid>> {
    if s == 0 || s > c.xs.len().min(c.ys.len()) {
        return Err(Error::arg(format!(
            "s = {s} must be between 1 and min(|X|, |Y|) = {}",
            c.xs.len().min(c.ys.len())
        )));
    }
    let row_sets = subsets(c.xs.len(), s);
    let col_sets = subsets(c.ys.len(), s);
    Ok(row_sets.par_iter().find_map_first(|rows| {
        col_sets.iter().find_map(|cols| {
            let cl = classify_cells(c, rows, cols);
            cl.is_classified().then(|| Subgrid {
                xs: rows.iter().map(|&i| c.xs[i]).collect(),
                ys: cols.iter().map(|&j| c.ys[j]).collect(),
                classification: cl,
            })
        })
    }))
}

/// A 2-colouring of `K_{t,t}` with no classified `s × s` subgrid, if one
/// exists. Colourings are scanned as `t²`-bit masks in increasing order,
/// with cell `(0, 0)` fixed to colour 0 by colour symmetry.
pub fn two_coloring_counterexample(t: usize, s: usize) -> Result<Option<GridColoring>> {
    let cells = t * t;
    if cells > 36 {
        return Err(Error::arg(format!(
            "2^{cells} colourings is too many to sweep"
        )));
    }
    if s == 0 || s > t {
        return Err(Error::arg(format!("s = {s} must be between 1 and t = {t}")));
    }
    let total: u64 = 1 << cells.saturating_sub(1);
    let found = (0..total).into_par_iter().find_map_first(|mask| {
        let c =
            GridColoring::from_fn(t, t, |i, j| ((mask << 1) >> (i * t + j) & 1) as Color).unwrap();
        match find_classified_subgrid(&c, s) {
            Ok(Some(_)) => None,
            _ => Some(c),
        }
    });
    Ok(found)
}
