//! Readers for the command-specific file formats. Every format also accepts
//! JSON, detected by a leading `{` or `[`.

use std::path::Path;

use hyperexp::extraction::{AugmentedFamily, EdgeLists};
use hyperexp::ramsey::GridColoring;
use hyperexp::{io, Error, Graph, Result, TripleSystem, VertexSet};

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

pub fn graph(path: &Path) -> Result<Graph> {
    io::parse_graph(&read(path)?)
}

pub fn triples(path: &Path) -> Result<TripleSystem> {
    io::parse_triple_system(&read(path)?)
}

fn is_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('{' | '['))
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn numbers(s: &str, line: usize) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("expected an integer, got {t:?}"),
            })
        })
        .collect()
}

fn split_once(l: &str, sep: char, line: usize) -> Result<(&str, &str)> {
    l.split_once(sep).ok_or_else(|| Error::Parse {
        line,
        msg: format!("expected `{sep}` on this line"),
    })
}

/// One set per line, whitespace separated; `-` is the empty set. JSON: a
/// list of lists.
pub fn sets(path: &Path) -> Result<Vec<VertexSet>> {
    let text = read(path)?;
    if is_json(&text) {
        return Ok(serde_json::from_str(&text)?);
    }
    data_lines(&text)
        .map(|(line, l)| {
            if l == "-" {
                Ok(VertexSet::new())
            } else {
                Ok(numbers(l, line)?.into_iter().collect())
            }
        })
        .collect()
}

/// Lines `a : v1 v2 …` giving the point `a` and its set `A`. JSON: a list of
/// `[[v1, v2, …], a]`.
pub fn augmented(path: &Path) -> Result<AugmentedFamily> {
    let text = read(path)?;
    if is_json(&text) {
        return Ok(serde_json::from_str(&text)?);
    }
    let mut pairs = Vec::new();
    for (line, l) in data_lines(&text) {
        let (a, rest) = split_once(l, ':', line)?;
        let point = numbers(a, line)?;
        let [point] = point[..] else {
            return Err(Error::Parse {
                line,
                msg: "expected one point before `:`".into(),
            });
        };
        pairs.push((numbers(rest, line)?.into_iter().collect(), point));
    }
    AugmentedFamily::new(pairs)
}

/// Lines `u v : z1 z2 …`. JSON: a list of `{"edge": [u, v], "list": […]}`.
pub fn edge_lists(path: &Path) -> Result<EdgeLists> {
    let text = read(path)?;
    if is_json(&text) {
        return Ok(serde_json::from_str(&text)?);
    }
    let mut lists = EdgeLists::new();
    for (line, l) in data_lines(&text) {
        let (e, rest) = split_once(l, ':', line)?;
        let [u, v] = numbers(e, line)?[..] else {
            return Err(Error::Parse {
                line,
                msg: "expected two vertices before `:`".into(),
            });
        };
        lists.insert(u, v, numbers(rest, line)?.into_iter().collect());
    }
    Ok(lists)
}

/// `X: …` and `Y: …` lines, then one row of colours per vertex of `X`.
/// JSON: `{"X": […], "Y": […], "color": [[…], …]}`.
pub fn coloring(path: &Path) -> Result<GridColoring> {
    let text = read(path)?;
    if is_json(&text) {
        return Ok(serde_json::from_str(&text)?);
    }
    let mut lines = data_lines(&text);
    let mut side = |name: &str| -> Result<Vec<usize>> {
        let (line, l) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: format!("missing `{name}:` line"),
        })?;
        let (head, rest) = split_once(l, ':', line)?;
        if head.trim() != name {
            return Err(Error::Parse {
                line,
                msg: format!("expected `{name}:`"),
            });
        }
        numbers(rest, line)
    };
    let xs = side("X")?;
    let ys = side("Y")?;
    let rows = lines
        .map(|(line, l)| numbers(l, line))
        .collect::<Result<Vec<_>>>()?;
    GridColoring::new(xs, ys, rows)
}
