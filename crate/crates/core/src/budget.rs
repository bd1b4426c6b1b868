//! Wall-clock and node-count limits for exhaustive searches.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

/// Limits for a search. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_time(mut self, t: Duration) -> Self {
        self.time = Some(t);
        self
    }

    pub fn with_nodes(mut self, n: u64) -> Self {
        self.nodes = Some(n);
        self
    }

    /// Starts the clock.
    pub fn start(&self) -> Meter {
        Meter {
            deadline: self.time.map(|t| Instant::now() + t),
            max_nodes: self.nodes,
            used: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }
}

/// A running budget, shareable between worker threads.
#[derive(Debug)]
pub struct Meter {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    used: AtomicU64,
    exhausted: AtomicBool,
}

impl Meter {
    /// Charges one node. Returns false once the budget is spent; after that
    /// every call returns false.
    #[inline]
    pub fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.max_nodes.is_some_and(|m| used > m);
        let over_time = used.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }

    pub fn nodes(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}
