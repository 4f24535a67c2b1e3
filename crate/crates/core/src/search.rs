//! Exhaustive enumeration of the hypergraphs admitting a given antimorphism.
//!
//! If `tau` is an antimorphism of `H`, membership alternates along every cycle
//! of `<tau>` acting on k-subsets. So each cycle must have even length, and `H`
//! is fixed by choosing, per cycle, whether the cycle's least subset is an edge.
//! Assignment `x` in `[0, 2^orbits)` sets that choice for orbit `j` from bit
//! `orbits - 1 - j`, so increasing `x` walks the bit strings lexicographically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::thread;

use crate::error::{Error, Result};
use crate::hypercore::{
    choose_small, rank_sorted, unrank_into, Hypergraph, Permutation, MAX_ORDER,
};
use crate::verify::t_subset_regularity;

/// Default ceiling on the number of candidates enumerated.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// Cycles of `<tau>` on the k-subsets of `[0, n)`, as colex ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    n: usize,
    k: usize,
    orbits: Vec<Vec<u64>>,
}

impl OrbitDecomposition {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    /// Each cycle starts at its least rank and follows `tau`; cycles are sorted by that rank.
    pub fn orbits(&self) -> &[Vec<u64>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn odd_orbits(&self) -> usize {
        self.orbits.iter().filter(|o| o.len() % 2 == 1).count()
    }

    /// True iff every cycle has even length, i.e. some hypergraph has `tau` as an antimorphism.
    pub fn is_feasible(&self) -> bool {
        self.odd_orbits() == 0
    }
}

pub fn tau_orbits_on_ksubsets(n: usize, k: usize, tau: &Permutation) -> Result<OrbitDecomposition> {
    tau.check_len(n)?;
    if n > MAX_ORDER || k > n {
        return Err(Error::InvalidParameters(format!(
            "need k <= n <= {MAX_ORDER}, got n = {n}, k = {k}"
        )));
    }
    let total = choose_small(n, k);
    if total > crate::hypercore::MAX_SUBSETS {
        return Err(Error::InvalidParameters(format!(
            "C({n},{k}) = {total} subsets is too many"
        )));
    }
    let mut seen = vec![false; total as usize];
    let mut orbits = Vec::new();
    let mut img = vec![0usize; k];
    for start in 0..total {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize] = true;
        let mut cur = unrank_into(start, n, k);
        loop {
            tau.apply_into(&cur, &mut img);
            let r = rank_sorted(&img);
            if r == start {
                break;
            }
            seen[r as usize] = true;
            cycle.push(r);
            std::mem::swap(&mut cur, &mut img);
        }
        orbits.push(cycle);
    }
    Ok(OrbitDecomposition { n, k, orbits })
}

/// How many candidates may be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapPolicy {
    pub cap: u64,
    /// Enumerate only the first `cap` assignments instead of refusing.
    pub truncate: bool,
}

impl Default for CapPolicy {
    fn default() -> Self {
        CapPolicy {
            cap: DEFAULT_CAP,
            truncate: false,
        }
    }
}

/// The candidate hypergraphs for one `(n, k, tau)`.
#[derive(Debug, Clone)]
pub struct Enumeration {
    decomposition: OrbitDecomposition,
    limit: u64,
    truncated: bool,
}

/// Number of assignments, `2^orbits`, if it fits in a `u64`.
fn assignment_count(orbits: usize) -> Option<u64> {
    1u64.checked_shl(orbits as u32).filter(|_| orbits < 64)
}

/// Formats `2^orbits` in decimal when it fits, else as `2^orbits`.
pub fn format_candidate_count(orbits: usize) -> String {
    match assignment_count(orbits) {
        Some(c) => c.to_string(),
        None => format!("2^{orbits}"),
    }
}

pub fn enumerate_sc_hypergraphs(
    n: usize,
    k: usize,
    tau: &Permutation,
    policy: CapPolicy,
) -> Result<Enumeration> {
    let decomposition = tau_orbits_on_ksubsets(n, k, tau)?;
    if !decomposition.is_feasible() {
        return Err(Error::Infeasible {
            k,
            odd_orbits: decomposition.odd_orbits(),
        });
    }
    let orbits = decomposition.len();
    let (limit, truncated) = match assignment_count(orbits) {
        Some(total) if total <= policy.cap => (total, false),
        _ if policy.truncate => (policy.cap, true),
        _ => {
            return Err(Error::CapExceeded {
                orbits,
                cap: policy.cap,
            })
        }
    };
    Ok(Enumeration {
        decomposition,
        limit,
        truncated,
    })
}

impl Enumeration {
    pub fn decomposition(&self) -> &OrbitDecomposition {
        &self.decomposition
    }

    /// Candidates this enumeration will produce.
    pub fn len(&self) -> u64 {
        self.limit
    }

    pub fn is_empty(&self) -> bool {
        self.limit == 0
    }

    /// True when the cap cut the enumeration short of `2^orbits`.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// The hypergraph for assignment `x`.
    pub fn candidate(&self, x: u64) -> Hypergraph {
        let orbits = self.decomposition.orbits();
        let o = orbits.len();
        let mut ranks = Vec::new();
        for (j, cycle) in orbits.iter().enumerate() {
            let shift = o - 1 - j;
            let bit = if shift >= 64 { 0 } else { (x >> shift) & 1 };
            let first = if bit == 1 { 0 } else { 1 };
            ranks.extend(cycle.iter().skip(first).step_by(2).copied());
        }
        Hypergraph::from_ranks(self.decomposition.n, self.decomposition.k, ranks)
            .expect("orbit ranks are in range")
    }

    pub fn iter(&self) -> impl Iterator<Item = Hypergraph> + '_ {
        self.range(0..self.limit)
    }

    /// Candidates for the assignments in `range`, clipped to the enumeration.
    pub fn range(&self, range: Range<u64>) -> impl Iterator<Item = Hypergraph> + '_ {
        let end = range.end.min(self.limit);
        (range.start.min(end)..end).map(move |x| self.candidate(x))
    }
}

/// Result of filtering an enumeration for t-subset-regularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSummary {
    pub orbits: usize,
    pub examined: u64,
    pub truncated: bool,
    /// Survivors, deduplicated by edge set and ordered by their ascending rank lists.
    pub regular: Vec<Hypergraph>,
}

impl fmt::Display for SearchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "orbits={} candidates={} regular={}",
            self.orbits,
            format_candidate_count(self.orbits),
            self.regular.len()
        )?;
        if self.truncated {
            write!(f, " examined={} truncated=true", self.examined)?;
        }
        Ok(())
    }
}

/// Filters every candidate for t-subset-regularity, splitting the assignment range
/// over `workers` threads. The survivors do not depend on `workers`.
pub fn search_regular_sc(
    n: usize,
    k: usize,
    t: usize,
    tau: &Permutation,
    policy: CapPolicy,
    workers: usize,
) -> Result<SearchSummary> {
    if !(1 <= t && t < k && k <= n) {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= t < k <= n, got t = {t}, k = {k}, n = {n}"
        )));
    }
    let en = enumerate_sc_hypergraphs(n, k, tau, policy)?;
    let workers = workers.clamp(1, 64) as u64;
    let chunk = en.len().div_ceil(workers).max(1);
    let scan = |range: Range<u64>| -> Result<BTreeMap<Vec<u64>, Hypergraph>> {
        let mut found = BTreeMap::new();
        for h in en.range(range) {
            if t_subset_regularity(&h, t)?.is_regular() {
                found.insert(h.ranks().to_vec(), h);
            }
        }
        Ok(found)
    };
    let parts: Vec<Result<BTreeMap<Vec<u64>, Hypergraph>>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let range = w * chunk..(w + 1) * chunk;
                s.spawn(move || scan(range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    let mut merged = BTreeMap::new();
    for part in parts {
        merged.extend(part?);
    }
    Ok(SearchSummary {
        orbits: en.decomposition().len(),
        examined: en.len(),
        truncated: en.truncated(),
        regular: merged.into_values().collect(),
    })
}
