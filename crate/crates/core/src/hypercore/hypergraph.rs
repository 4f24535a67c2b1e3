use super::binom::{choose_small, MAX_ORDER};
use super::permutation::Permutation;
use super::subset::{for_each_subset_of, rank_sorted, unrank_into, KSubset};
use crate::error::{Error, Result};

/// Upper bound on `C(n, k)` for a stored hypergraph (one indicator bit per k-subset).
pub const MAX_SUBSETS: u64 = 1 << 34;

/// A k-uniform hypergraph on vertices `[0, n)`.
///
/// Edges are held both as a bit indicator over colex ranks, for constant-time
/// membership, and as an ascending list of ranks, for iteration in colex order.
/// Values are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    total: u64,
    present: Vec<u64>,
    ranks: Vec<u64>,
}

fn check_params(n: usize, k: usize) -> Result<u64> {
    if n > MAX_ORDER {
        return Err(Error::InvalidParameters(format!(
            "order {n} above the supported maximum {MAX_ORDER}"
        )));
    }
    if k > n {
        return Err(Error::InvalidParameters(format!(
            "uniformity {k} exceeds order {n}"
        )));
    }
    let total = choose_small(n, k);
    if total > MAX_SUBSETS {
        return Err(Error::InvalidParameters(format!(
            "C({n},{k}) = {total} subsets is too many to index"
        )));
    }
    Ok(total)
}

impl Hypergraph {
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::from_ranks(n, k, std::iter::empty())
    }

    pub fn complete(n: usize, k: usize) -> Result<Self> {
        let total = check_params(n, k)?;
        Self::from_ranks(n, k, 0..total)
    }

    /// Builds from colex ranks; duplicates collapse.
    pub fn from_ranks(n: usize, k: usize, ranks: impl IntoIterator<Item = u64>) -> Result<Self> {
        let total = check_params(n, k)?;
        let mut present = vec![0u64; total.div_ceil(64) as usize];
        for r in ranks {
            if r >= total {
                return Err(Error::RankOutOfRange {
                    rank: r,
                    n,
                    k,
                    total,
                });
            }
            present[(r / 64) as usize] |= 1 << (r % 64);
        }
        Ok(Self::from_indicator(n, k, total, present))
    }

    /// Builds from explicit edges, validating each as a k-subset of `[0, n)`; duplicates collapse.
    pub fn from_edges<'a>(
        n: usize,
        k: usize,
        edges: impl IntoIterator<Item = &'a KSubset>,
    ) -> Result<Self> {
        check_params(n, k)?;
        let ranks = edges
            .into_iter()
            .map(|e| super::subset::rank_colex(e, n, k))
            .collect::<Result<Vec<_>>>()?;
        Self::from_ranks(n, k, ranks)
    }

    fn from_indicator(n: usize, k: usize, total: u64, present: Vec<u64>) -> Self {
        let mut ranks = Vec::new();
        for (w, &word) in present.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as u64;
                ranks.push(w as u64 * 64 + b);
                bits &= bits - 1;
            }
        }
        Hypergraph {
            n,
            k,
            total,
            present,
            ranks,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    /// `C(n, k)`, the number of k-subsets of the vertex set.
    pub fn subset_count(&self) -> u64 {
        self.total
    }

    pub fn edge_count(&self) -> usize {
        self.ranks.len()
    }

    /// Edge ranks in ascending (colex) order.
    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    #[inline]
    pub fn contains_rank(&self, r: u64) -> bool {
        r < self.total && self.present[(r / 64) as usize] >> (r % 64) & 1 == 1
    }

    /// Membership for a strictly increasing k-slice of in-range vertices.
    #[inline]
    pub(crate) fn contains_sorted(&self, vertices: &[usize]) -> bool {
        self.contains_rank(rank_sorted(vertices))
    }

    pub fn contains(&self, e: &KSubset) -> bool {
        e.len() == self.k
            && e.vertices().last().is_none_or(|&v| v < self.n)
            && self.contains_sorted(e.vertices())
    }

    /// Edges in colex order.
    pub fn edges(&self) -> impl Iterator<Item = KSubset> + '_ {
        self.ranks
            .iter()
            .map(move |&r| KSubset::from_sorted_unchecked(unrank_into(r, self.n, self.k)))
    }

    /// Same vertices, edge set `V^(k) \ E`.
    pub fn complement(&self) -> Self {
        let mut present: Vec<u64> = self.present.iter().map(|w| !w).collect();
        let tail = self.total % 64;
        if tail != 0 {
            if let Some(last) = present.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        Self::from_indicator(self.n, self.k, self.total, present)
    }

    /// `{ sigma(e) : e in E }`.
    pub fn permuted(&self, sigma: &Permutation) -> Result<Self> {
        sigma.check_len(self.n)?;
        let mut img = vec![0usize; self.k];
        let ranks: Vec<u64> = self
            .edges()
            .map(|e| {
                sigma.apply_into(e.vertices(), &mut img);
                rank_sorted(&img)
            })
            .collect();
        Self::from_ranks(self.n, self.k, ranks)
    }

    /// True iff every k-subset of `set` is an edge.
    pub fn is_complete_on(&self, set: &[usize]) -> Result<bool> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameters(
                "vertex set has repeated entries".into(),
            ));
        }
        if let Some(&v) = sorted.last().filter(|&&v| v >= self.n) {
            return Err(Error::InvalidParameters(format!("vertex {v} out of range")));
        }
        if sorted.len() < self.k {
            return Err(Error::InvalidParameters(format!(
                "vertex set of size {} is smaller than the uniformity {}",
                sorted.len(),
                self.k
            )));
        }
        let mut complete = true;
        for_each_subset_of(&sorted, self.k, |s| complete &= self.contains_sorted(s));
        Ok(complete)
    }

    /// Number of edges containing vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges().filter(|e| e.contains(v)).count()
    }
}
