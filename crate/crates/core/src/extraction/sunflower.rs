//! Sunflowers (Δ-systems) via the Erdős–Rado recursion.

use serde::Serialize;

use crate::{Error, Result, VertexSet};

/// A family of sets of size at most `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    sets: Vec<VertexSet>,
    k: usize,
}

impl SetFamily {
    /// Rejects sets larger than `k` and repeated sets.
    pub fn new(sets: Vec<VertexSet>, k: usize) -> Result<Self> {
        let fam = Self::with_duplicates(sets, k)?;
        let mut sorted: Vec<&VertexSet> = fam.sets.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::arg(format!("set {:?} occurs twice", w[0])));
        }
        Ok(fam)
    }

    /// Like [`SetFamily::new`] but keeps repeated sets.
    pub fn with_duplicates(sets: Vec<VertexSet>, k: usize) -> Result<Self> {
        if let Some(s) = sets.iter().find(|s| s.len() > k) {
            return Err(Error::arg(format!(
                "set {s:?} has more than k = {k} elements"
            )));
        }
        Ok(SetFamily { sets, k })
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sunflower {
    /// Indices into the family.
    pub petals: Vec<usize>,
    pub core: VertexSet,
}

impl Sunflower {
    /// Distinct in-range petals whose pairwise intersections all equal the core.
    pub fn is_valid_for(&self, family: &SetFamily) -> bool {
        let sets = family.sets();
        let mut idx = self.petals.clone();
        idx.sort_unstable();
        idx.dedup();
        if idx.len() != self.petals.len() || idx.iter().any(|&i| i >= sets.len()) {
            return false;
        }
        if idx.len() == 1 {
            return sets[idx[0]] == self.core;
        }
        idx.iter().enumerate().all(|(a, &i)| {
            idx[a + 1..]
                .iter()
                .all(|&j| sets[i].intersection(&sets[j]) == self.core)
        })
    }
}

/// `k!(s-1)^k`, or `None` on overflow.
pub fn sunflower_bound(k: usize, s: usize) -> Option<u128> {
    let mut fact: u128 = 1;
    for i in 2..=k as u128 {
        fact = fact.checked_mul(i)?;
    }
    fact.checked_mul((s.checked_sub(1)? as u128).checked_pow(k as u32)?)
}

/// Looks for `s` sets forming a sunflower.
///
/// Takes a greedy maximal pairwise-disjoint subfamily; if it has `s` members
/// they form a sunflower with empty core. Otherwise branches on elements in
/// order of decreasing frequency, recursing on the link of each. Families of
/// size `> k!(s-1)^k` always succeed on the first branch.
pub fn find_sunflower(family: &SetFamily, s: usize) -> Result<Option<Sunflower>> {
    if s == 0 {
        return Err(Error::arg("a sunflower needs at least one petal"));
    }
    let members: Vec<usize> = (0..family.len()).collect();
    let Some(petals) = search(family.sets(), &members, &VertexSet::new(), s) else {
        return Ok(None);
    };
    let sets = family.sets();
    let core = if petals.len() == 1 {
        sets[petals[0]].clone()
    } else {
        sets[petals[0]].intersection(&sets[petals[1]])
    };
    let flower = Sunflower { petals, core };
    debug_assert!(flower.is_valid_for(family));
    Ok(Some(flower))
}

/// `members` all contain `core`; searches their remainders `set - core`.
fn search(sets: &[VertexSet], members: &[usize], core: &VertexSet, s: usize) -> Option<Vec<usize>> {
    if members.len() < s {
        return None;
    }
    if s == 1 {
        return Some(vec![members[0]]);
    }
    let rest: Vec<VertexSet> = members.iter().map(|&i| sets[i].difference(core)).collect();

    let mut union = VertexSet::new();
    let mut disjoint = Vec::new();
    for (pos, r) in rest.iter().enumerate() {
        if r.is_disjoint(&union) {
            union.union_with(r);
            disjoint.push(members[pos]);
            if disjoint.len() == s {
                return Some(disjoint);
            }
        }
    }

    let mut freq: Vec<(usize, usize)> = Vec::new();
    let span = rest.iter().fold(VertexSet::new(), |acc, r| acc.union(r));
    for x in &span {
        let c = rest.iter().filter(|r| r.contains(x)).count();
        if c >= s {
            freq.push((c, x));
        }
    }
    freq.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, x) in freq {
        let link: Vec<usize> = members
            .iter()
            .zip(&rest)
            .filter(|(_, r)| r.contains(x))
            .map(|(&i, _)| i)
            .collect();
        let mut deeper = core.clone();
        deeper.insert(x);
        if let Some(p) = search(sets, &link, &deeper, s) {
            return Some(p);
        }
    }
    None
}
