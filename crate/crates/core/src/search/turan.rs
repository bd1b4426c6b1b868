use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::embed::contains;
use super::host::{contains_through, Host, Pattern};
use crate::budget::{Budget, Meter};
use crate::triple::Triple;
use crate::{Error, Result, TripleSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TuranMethod {
    /// Settled without search: `F` does not fit in `n` vertices or is a
    /// single triple.
    Exhaustive,
    BranchAndBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TuranResult {
    pub n: usize,
    pub forbidden: TripleSystem,
    /// `ex₃(n, F)` when `exact`, otherwise a lower bound.
    pub value: usize,
    pub exact: bool,
    /// An `F`-free system with `value` edges: the lexicographically smallest
    /// edge set among extremal ones when `exact`.
    pub witness: TripleSystem,
    pub method: TuranMethod,
    pub nodes: u64,
}

/// Triples in lexicographic order; prefix decisions on triples `1..=SPLIT`
/// define the parallel tasks.
const SPLIT: usize = 5;

/// Exact `ex₃(n, F)` by branch and bound over triples in lexicographic
/// order.
///
/// Triple `{0,1,2}` is forced in, which loses nothing up to relabelling. A
/// triple is blocked once adding it to the current family would create a
/// copy of `F`; blocking is inherited by every extension, so
/// `|family| + #unblocked later triples` bounds each subtree. Subtrees are
/// split into `2^SPLIT` prefix tasks run on `workers` threads. Tasks prune
/// against each other only on strict inequality and the earliest task wins
/// ties, so the value and witness do not depend on scheduling.
pub fn turan_number(
    n: usize,
    f: &TripleSystem,
    budget: Budget,
    workers: usize,
) -> Result<TuranResult> {
    if n < 3 {
        return Err(Error::arg(format!("n = {n} must be at least 3")));
    }
    if f.is_empty() {
        return Err(Error::arg("the forbidden system needs at least one edge"));
    }
    if workers == 0 {
        return Err(Error::arg("workers must be at least 1"));
    }
    let settled = |value: Vec<Triple>| {
        let witness = TripleSystem::new(n, value).unwrap();
        TuranResult {
            n,
            forbidden: f.clone(),
            value: witness.len(),
            exact: true,
            witness,
            method: TuranMethod::Exhaustive,
            nodes: 0,
        }
    };
    let complete = TripleSystem::complete(n);
    if contains(&complete, f).is_none() {
        return Ok(settled(complete.edges().to_vec()));
    }
    if contains(&TripleSystem::new(n, [[0, 1, 2]]).unwrap(), f).is_some() {
        return Ok(settled(Vec::new()));
    }

    let triples = complete.edges().to_vec();
    let pattern = Pattern::new(f);
    let meter = budget.start();
    let shared = AtomicUsize::new(1);
    let depth = SPLIT.min(triples.len() - 1);
    let tasks: Vec<u32> = (0..1u32 << depth)
        .map(|t| !t & ((1 << depth) - 1))
        .collect();
    let run = |&mask: &u32| {
        let mut task = Task::new(&pattern, &triples, &meter, &shared);
        task.run_prefix(mask, depth);
        (task.best, task.best_len)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let outcomes: Vec<(Vec<usize>, usize)> = pool.install(|| tasks.par_iter().map(run).collect());

    let mut best: Vec<usize> = vec![0];
    for (family, len) in outcomes {
        if len > best.len() {
            best = family;
        }
    }
    let witness = TripleSystem::new(n, best.iter().map(|&i| triples[i])).unwrap();
    if contains(&witness, f).is_some() {
        return Err(Error::Internal(
            "Turán witness contains the forbidden system".into(),
        ));
    }
    Ok(TuranResult {
        n,
        forbidden: f.clone(),
        value: witness.len(),
        exact: !meter.exhausted(),
        witness,
        method: TuranMethod::BranchAndBound,
        nodes: meter.nodes(),
    })
}

struct Task<'a> {
    pattern: &'a Pattern,
    triples: &'a [Triple],
    meter: &'a Meter,
    shared: &'a AtomicUsize,
    host: Host,
    chosen: Vec<usize>,
    blocked: Vec<bool>,
    best: Vec<usize>,
    best_len: usize,
}

impl<'a> Task<'a> {
    fn new(
        pattern: &'a Pattern,
        triples: &'a [Triple],
        meter: &'a Meter,
        shared: &'a AtomicUsize,
    ) -> Self {
        let n = triples.last().unwrap()[2] + 1;
        let mut task = Task {
            pattern,
            triples,
            meter,
            shared,
            host: Host::new(n),
            chosen: Vec::new(),
            blocked: vec![false; triples.len()],
            best: Vec::new(),
            best_len: 0,
        };
        task.include(0);
        task
    }

    /// Adds triple `i` and blocks every later triple that would now complete
    /// a copy. Returns the newly blocked indices.
    fn include(&mut self, i: usize) -> Vec<usize> {
        self.host.add(self.triples[i]);
        self.chosen.push(i);
        let mut newly = Vec::new();
        for j in i + 1..self.triples.len() {
            if self.blocked[j] {
                continue;
            }
            self.host.add(self.triples[j]);
            if contains_through(self.pattern, &self.host, self.triples[j]) {
                self.blocked[j] = true;
                newly.push(j);
            }
            self.host.remove(self.triples[j]);
        }
        newly
    }

    fn exclude_last(&mut self, newly: Vec<usize>) {
        let i = self.chosen.pop().unwrap();
        self.host.remove(self.triples[i]);
        for j in newly {
            self.blocked[j] = false;
        }
    }

    /// Replays the prefix decisions on triples `1..=depth` (bit `depth-k` of
    /// `mask` set means triple `k` is taken), then searches the rest.
    /// Decreasing masks are the include-first depth-first order.
    fn run_prefix(&mut self, mask: u32, depth: usize) {
        for k in 1..=depth {
            if mask >> (depth - k) & 1 == 1 {
                if self.blocked[k] {
                    return;
                }
                self.include(k);
            }
        }
        self.search(depth + 1);
    }

    fn search(&mut self, i: usize) {
        if !self.meter.tick() {
            return;
        }
        if self.chosen.len() > self.best_len {
            self.best = self.chosen.clone();
            self.best_len = self.chosen.len();
            self.shared.fetch_max(self.best_len, Ordering::Relaxed);
        }
        if i >= self.triples.len() {
            return;
        }
        let open = self.blocked[i..].iter().filter(|&&b| !b).count();
        let bound = self.chosen.len() + open;
        if bound <= self.best_len || bound < self.shared.load(Ordering::Relaxed) {
            return;
        }
        if !self.blocked[i] {
            let newly = self.include(i);
            self.search(i + 1);
            self.exclude_last(newly);
        }
        self.search(i + 1);
    }
}
