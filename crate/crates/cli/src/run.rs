use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hyperexp::extraction::{
    find_biclique_avoiding_lists, find_sunflower, full_subgraph, random_list_filter,
    select_disjoint_augmented, SetFamily,
};
use hyperexp::ramsey::{
    build_list_assignment, extract_multicoloring, find_classified_subgrid,
    find_structured_multicoloring, StructuredOutcome,
};
use hyperexp::search::{
    audit_jump, audit_theorem1, contains, contains_expansion, lower_bound_construction,
    turan_number,
};
use hyperexp::structure::{
    check_crosscut_lemmas, complete_forest_to_tree, expand, lambda_forest, sigma_expansion_with,
    SigmaMethod,
};
use hyperexp::{Budget, Result};

use crate::cli::{Command, Global, Method};
use crate::input;

/// A command's JSON result and whether a budget cut it short.
pub struct Outcome {
    pub value: Value,
    pub budget_exhausted: bool,
}

impl Outcome {
    fn done(value: Value) -> Self {
        Outcome {
            value,
            budget_exhausted: false,
        }
    }
}

fn budget(g: &Global) -> Budget {
    let mut b = Budget::unlimited();
    if let Some(ms) = g.budget_ms {
        b = b.with_time(Duration::from_millis(ms));
    }
    if let Some(n) = g.budget_nodes {
        b = b.with_nodes(n);
    }
    b
}

pub fn run(cmd: &Command, g: &Global) -> Result<Outcome> {
    Ok(match cmd {
        Command::Expand { graph } => {
            let x = expand(&input::graph(graph)?);
            Outcome::done(
                json!({ "graph": x.base, "triples": x.triples, "enlargement": x.enlargement }),
            )
        }
        Command::Sigma { graph, method } => {
            let m = match method {
                Method::Auto => SigmaMethod::Auto,
                Method::Bnb => SigmaMethod::BranchAndBound,
                Method::Dp => SigmaMethod::ForestDp,
            };
            let (sigma, pair) = sigma_expansion_with(&input::graph(graph)?, m)?;
            Outcome::done(json!({ "sigma": sigma, "pair": pair }))
        }
        Command::CrosscutAudit { tree } => {
            let audit = check_crosscut_lemmas(&input::graph(tree)?)?;
            let mut v = json!(audit);
            v["passed"] = json!(audit.passed());
            Outcome::done(v)
        }
        Command::Lambda { graph } => {
            Outcome::done(json!({ "lambda": lambda_forest(&input::graph(graph)?)? }))
        }
        Command::CompleteTree { forest } => {
            Outcome::done(json!({ "tree": complete_forest_to_tree(&input::graph(forest)?)? }))
        }
        Command::FullSubgraph { triples, d } => {
            let h = input::triples(triples)?;
            let f = full_subgraph(&h, *d)?;
            Outcome::done(json!({
                "d": d,
                "input_edges": h.len(),
                "shadow_edges": h.shadow().edge_count(),
                "result": f,
            }))
        }
        Command::Sunflower { sets, s, k } => {
            let sets = input::sets(sets)?;
            let k = k.unwrap_or_else(|| sets.iter().map(|s| s.len()).max().unwrap_or(0));
            let fam = SetFamily::new(sets, k)?;
            Outcome::done(json!({ "k": k, "s": s, "sunflower": find_sunflower(&fam, *s)? }))
        }
        Command::TrimSelect { family } => {
            let fam = input::augmented(family)?;
            let chosen = select_disjoint_augmented(&fam);
            Outcome::done(json!({ "m": fam.len(), "selected": chosen }))
        }
        Command::Biclique {
            graph,
            lists,
            host,
            t,
            filter,
        } => {
            let f = input::graph(graph)?;
            let lists = input::edge_lists(lists)?;
            let h = input::triples(host)?;
            let searched = if *filter {
                random_list_filter(&f, &lists, &mut ChaCha8Rng::seed_from_u64(g.seed))
            } else {
                f
            };
            let found = find_biclique_avoiding_lists(&searched, &lists, *t, &h)?;
            Outcome::done(json!({ "t": t, "filtered": filter, "biclique": found }))
        }
        Command::Classify { coloring } => {
            Outcome::done(json!({ "labels": input::coloring(coloring)?.classify() }))
        }
        Command::RamseySubgrid { coloring, s } => Outcome::done(
            json!({ "s": s, "subgrid": find_classified_subgrid(&input::coloring(coloring)?, *s)? }),
        ),
        Command::Lists(grid) => {
            let la = build_list_assignment(&input::triples(&grid.triples)?, &grid.x, &grid.y)?;
            Outcome::done(json!({ "lists": la, "min_list_size": la.min_list_size() }))
        }
        Command::Multicolor { grid, m, s } => {
            let la = build_list_assignment(&input::triples(&grid.triples)?, &grid.x, &grid.y)?;
            match s {
                None => Outcome::done(
                    json!({ "m": m, "multicoloring": extract_multicoloring(&la, *m)? }),
                ),
                Some(s) => {
                    let out = find_structured_multicoloring(&la, *m, *s, budget(g))?;
                    let exhausted = out == StructuredOutcome::BudgetExhausted;
                    Outcome {
                        value: json!({ "m": m, "s": s, "outcome": out }),
                        budget_exhausted: exhausted,
                    }
                }
            }
        }
        Command::Contains {
            host,
            pattern,
            graph,
        } => {
            let h = input::triples(host)?;
            let cert = match (pattern, graph) {
                (Some(p), _) => contains(&h, &input::triples(p)?),
                (None, Some(gr)) => contains_expansion(&h, &input::graph(gr)?),
                (None, None) => unreachable!("clap requires one of --pattern and --graph"),
            };
            Outcome::done(json!({ "found": cert.is_some(), "certificate": cert }))
        }
        Command::Construct { n, c } => {
            let h = lower_bound_construction(*n, *c)?;
            Outcome::done(json!({ "n": n, "c": c, "edges": h.len(), "system": h }))
        }
        Command::Turan { n, forbid } => {
            let r = turan_number(*n, &input::triples(forbid)?, budget(g), g.workers)?;
            Outcome {
                budget_exhausted: !r.exact,
                value: json!(r),
            }
        }
        Command::AuditTheorem1 { forest, n } => {
            let r = audit_theorem1(&input::graph(forest)?, n, budget(g), g.workers)?;
            let mut v = json!(r);
            v["passed"] = json!(r.passed());
            Outcome {
                budget_exhausted: r.budget_exhausted(),
                value: v,
            }
        }
        Command::AuditJump { graph, n } => {
            let r = audit_jump(&input::graph(graph)?, *n)?;
            let mut v = json!(r);
            v["passed"] = json!(r.passed());
            Outcome::done(v)
        }
    })
}
