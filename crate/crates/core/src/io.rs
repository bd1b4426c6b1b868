//! Text and JSON file formats.
//!
//! Graph files are a header line `n m` followed by `m` lines `u v`; triple
//! system files are `n m` followed by `m` lines `u v w`. Tokens are
//! whitespace separated and 0-based; blank lines and `#` comments are
//! skipped. Either kind may instead be given as JSON `{"n": .., "edges": ..}`,
//! detected by a leading `{`.

use std::fmt::Write as _;

use crate::{Error, Graph, Result, TripleSystem, Vertex};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, got {tok:?}"),
    })
}

fn parse_records(text: &str, arity: usize) -> Result<(usize, Vec<Vec<Vertex>>)> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header line".into(),
    })?;
    if header.len() != 2 {
        return Err(Error::Parse {
            line: hl,
            msg: "header must be `n m`".into(),
        });
    }
    let n = parse_num(header[0], hl)?;
    let m = parse_num(header[1], hl)?;
    let mut records = Vec::with_capacity(m);
    for (line, toks) in lines {
        if toks.len() != arity {
            return Err(Error::Parse {
                line,
                msg: format!("expected {arity} vertices, got {}", toks.len()),
            });
        }
        records.push(
            toks.iter()
                .map(|t| parse_num(t, line))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if records.len() != m {
        return Err(Error::Parse {
            line: hl,
            msg: format!("header announces {m} edges, found {}", records.len()),
        });
    }
    Ok((n, records))
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    if is_json(text) {
        return Ok(serde_json::from_str(text)?);
    }
    let (n, recs) = parse_records(text, 2)?;
    Graph::new(n, recs.into_iter().map(|r| (r[0], r[1])))
}

pub fn parse_triple_system(text: &str) -> Result<TripleSystem> {
    if is_json(text) {
        return Ok(serde_json::from_str(text)?);
    }
    let (n, recs) = parse_records(text, 3)?;
    TripleSystem::new(n, recs.into_iter().map(|r| [r[0], r[1], r[2]]))
}

pub fn format_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn format_triple_system(h: &TripleSystem) -> String {
    let mut s = format!("{} {}\n", h.n(), h.len());
    for [a, b, c] in h.edges() {
        writeln!(s, "{a} {b} {c}").unwrap();
    }
    s
}
