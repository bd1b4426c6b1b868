use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn write(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    }
}

fn hyperexp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperexp"))
        .args(args)
        .env_remove("HYPEREXP_JSON")
        .env_remove("HYPEREXP_BUDGET_MS")
        .env_remove("HYPEREXP_BUDGET_NODES")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = hyperexp(&all);
    (
        serde_json::from_str(&stdout(&o)).unwrap_or(Value::Null),
        o.status.code().unwrap(),
    )
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn sigma_of_path_on_four_vertices() {
    let f = Files::new();
    let g = f.write("path4.g", "4 3\n0 1\n1 2\n2 3\n");
    let o = hyperexp(&["sigma", "--graph", p(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("sigma=2\n"), "{out}");
    let pair: Value = serde_json::from_str(out.lines().nth(1).unwrap()).unwrap();
    assert_eq!(pair["weight"], 2);
}

#[test]
fn turan_for_two_triples_sharing_one_vertex() {
    let f = Files::new();
    let h = f.write("p2plus.h", "5 2\n0 1 3\n1 2 4\n");
    let (v, code) = json(&["turan", "--n", "4", "--forbid", p(&h)]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 4);
    assert_eq!(v["exact"], true);
}

#[test]
fn turan_budget_exhaustion_exits_three() {
    let f = Files::new();
    let h = f.write("pair.h", "4 2\n0 1 2\n0 1 3\n");
    let (v, code) = json(&[
        "turan",
        "--n",
        "7",
        "--forbid",
        p(&h),
        "--budget-nodes",
        "3",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["exact"], false);
}

#[test]
fn budget_can_come_from_the_environment() {
    let f = Files::new();
    let h = f.write("pair.h", "4 2\n0 1 2\n0 1 3\n");
    let o = Command::new(env!("CARGO_BIN_EXE_hyperexp"))
        .args(["turan", "--n", "7", "--forbid", p(&h)])
        .env("HYPEREXP_BUDGET_NODES", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn expand_single_edge() {
    let f = Files::new();
    let g = f.write("k2.g", "2 1\n0 1\n");
    let o = hyperexp(&["expand", "--graph", p(&g)]);
    assert_eq!(stdout(&o), "3 1\n0 1 2\n");
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(hyperexp(&[]).status.code(), Some(1));
    assert_eq!(hyperexp(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        hyperexp(&["sigma", "--graph", "/nonexistent/x.g"])
            .status
            .code(),
        Some(2)
    );
    let f = Files::new();
    let bad = f.write("bad.g", "3 1\n0 7\n");
    assert_eq!(
        hyperexp(&["sigma", "--graph", p(&bad)]).status.code(),
        Some(2)
    );
    let cyc = f.write("c3.g", "3 3\n0 1\n1 2\n0 2\n");
    assert_eq!(
        hyperexp(&["lambda", "--graph", p(&cyc)]).status.code(),
        Some(2)
    );
}

#[test]
fn structure_commands() {
    let f = Files::new();
    let tree = f.write("broom.g", "6 5\n0 1\n1 2\n2 3\n2 4\n2 5\n");
    let (v, code) = json(&["crosscut-audit", "--tree", p(&tree)]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let (v, _) = json(&["lambda", "--graph", p(&tree)]);
    assert!(v["lambda"].is_u64());
    let forest = f.write("two.g", "4 2\n0 1\n2 3\n");
    let o = hyperexp(&["complete-tree", "--forest", p(&forest)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("4 3\n"));
}

#[test]
fn extraction_commands() {
    let f = Files::new();
    let k5 = f.write("k5.h", &{
        let mut s = String::from("5 10\n");
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    s += &format!("{a} {b} {c}\n");
                }
            }
        }
        s
    });
    let (v, _) = json(&["full-subgraph", "--triples", p(&k5), "--d", "2"]);
    assert_eq!(v["result"]["edges"].as_array().unwrap().len(), 10);

    let sets = f.write("sets.txt", "0 1\n0 2\n0 3\n");
    let (v, _) = json(&["sunflower", "--sets", p(&sets), "--s", "3"]);
    assert_eq!(v["sunflower"]["core"], serde_json::json!([0]));

    let fam = f.write("fam.txt", "5 : 0 1\n6 : 2 3\n0 : 4\n");
    let (v, _) = json(&["trim-select", "--family", p(&fam)]);
    assert!(!v["selected"].as_array().unwrap().is_empty());

    let g = f.write("k22.g", "10 4\n0 2\n0 3\n1 2\n1 3\n");
    let h = f.write("host.h", "10 4\n0 2 9\n0 3 9\n1 2 9\n1 3 9\n");
    let lists = f.write("lists.txt", "0 2 : 9\n0 3 : 9\n1 2 : 9\n1 3 : 9\n");
    let (v, code) = json(&[
        "biclique",
        "--graph",
        p(&g),
        "--lists",
        p(&lists),
        "--host",
        p(&h),
        "--t",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["biclique"]["left"], serde_json::json!([0, 1]));
}

#[test]
fn ramsey_commands() {
    let f = Files::new();
    let c = f.write("c.txt", "X: 0 1 2\nY: 3 4 5\n0 0 0\n1 1 1\n2 2 2\n");
    let (v, _) = json(&["classify", "--coloring", p(&c)]);
    assert_eq!(v["labels"], serde_json::json!(["x-canonical"]));
    let (v, _) = json(&["ramsey-subgrid", "--coloring", p(&c), "--s", "2"]);
    assert_eq!(v["subgrid"]["X"], serde_json::json!([0, 1]));
    assert_eq!(
        json(&["ramsey-subgrid", "--coloring", p(&c), "--s", "4"]).1,
        2
    );

    let h = f.write("h.h", "4 2\n0 1 2\n0 1 3\n");
    let (v, _) = json(&["lists", "--triples", p(&h), "--x", "0", "--y", "1"]);
    assert_eq!(v["min_list_size"], 2);
    let (v, _) = json(&[
        "multicolor",
        "--triples",
        p(&h),
        "--x",
        "0",
        "--y",
        "1",
        "--m",
        "2",
    ]);
    assert_eq!(v["multicoloring"]["colorings"].as_array().unwrap().len(), 2);
    let (v, code) = json(&[
        "multicolor",
        "--triples",
        p(&h),
        "--x",
        "0",
        "--y",
        "1",
        "--m",
        "1",
        "--s",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"]["status"], "found");
}

#[test]
fn search_commands() {
    let f = Files::new();
    let host = f.write("h.h", "5 2\n0 1 2\n0 3 4\n");
    let pat = f.write("p.h", "5 2\n0 1 3\n1 2 4\n");
    let (v, _) = json(&["contains", "--host", p(&host), "--pattern", p(&pat)]);
    assert_eq!(v["found"], true);
    let g = f.write("p3.g", "3 2\n0 1\n1 2\n");
    let (v, _) = json(&["contains", "--host", p(&host), "--graph", p(&g)]);
    assert_eq!(v["certificate"]["kind"], "expansion");
    let (v, _) = json(&["construct", "--n", "6", "--c", "2"]);
    assert_eq!(v["edges"], 12);
    assert_eq!(json(&["construct", "--n", "3", "--c", "4"]).1, 2);

    let path4 = f.write("path4.g", "4 3\n0 1\n1 2\n2 3\n");
    let (v, code) = json(&["audit-theorem1", "--forest", p(&path4), "--n", "5,6"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["rows"][1]["bound"], 10);
    let (v, _) = json(&["audit-jump", "--graph", p(&path4), "--n", "6"]);
    assert_eq!(v["edges"], 10);
    assert_eq!(v["free"], true);
}

#[test]
fn output_is_deterministic_across_runs_and_workers() {
    let f = Files::new();
    let h = f.write("pair.h", "4 2\n0 1 2\n0 1 3\n");
    let a = hyperexp(&["--json", "turan", "--n", "6", "--forbid", p(&h)]);
    let b = hyperexp(&[
        "--json",
        "--workers",
        "3",
        "turan",
        "--n",
        "6",
        "--forbid",
        p(&h),
    ]);
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_str(&stdout(o)).unwrap();
        v.as_object_mut().unwrap().remove("nodes");
        v
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(a.status.code(), b.status.code());
}
