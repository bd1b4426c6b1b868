//! Human-readable rendering of command results. Everything here reads the
//! JSON value a command produced; there is no second code path.

use std::fmt::Write as _;

use hyperexp::{io, Graph, TripleSystem};
use serde_json::Value;

const INLINE: usize = 80;

pub fn render(command: &str, v: &Value) -> String {
    let system = |key: &str| serde_json::from_value::<TripleSystem>(v[key].clone()).ok();
    match command {
        "expand" => system("triples").map(|h| io::format_triple_system(&h)),
        "sigma" => Some(format!("sigma={}\n{}\n", v["sigma"], v["pair"])),
        "complete-tree" => serde_json::from_value::<Graph>(v["tree"].clone())
            .ok()
            .map(|t| io::format_graph(&t)),
        "construct" => system("system").map(|h| {
            format!(
                "# n={} c={} edges={}\n{}",
                v["n"],
                v["c"],
                v["edges"],
                io::format_triple_system(&h)
            )
        }),
        "full-subgraph" => system("result").map(|h| {
            format!(
                "# d={} input_edges={} shadow_edges={} kept={}\n{}",
                v["d"],
                v["input_edges"],
                v["shadow_edges"],
                h.len(),
                io::format_triple_system(&h)
            )
        }),
        _ => None,
    }
    .unwrap_or_else(|| generic(v))
}

fn generic(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let compact = x.to_string();
                if is_leafy(x) && compact.len() <= INLINE {
                    writeln!(out, "{pad}{k}: {}", scalar(x)).unwrap();
                } else {
                    writeln!(out, "{pad}{k}:").unwrap();
                    write_value(out, x, indent + 2);
                }
            }
        }
        Value::Array(items) if !is_leafy(v) || v.to_string().len() > INLINE => {
            for x in items {
                if is_leafy(x) {
                    writeln!(out, "{pad}- {}", scalar(x)).unwrap();
                } else {
                    writeln!(out, "{pad}-").unwrap();
                    write_value(out, x, indent + 2);
                }
            }
        }
        _ => writeln!(out, "{pad}{}", scalar(v)).unwrap(),
    }
}

/// No objects below this value.
fn is_leafy(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(a) => a.iter().all(is_leafy),
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        _ => v.to_string(),
    }
}
