use std::fmt;

use super::binom::{choose_small, MAX_ORDER};
use crate::error::{Error, Result};

/// A k-element vertex subset, stored as strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset(Vec<usize>);

impl KSubset {
    /// Validates `vertices` as a k-subset of `[0, n)` with `k = vertices.len()`.
    pub fn new(vertices: Vec<usize>, n: usize) -> Result<Self> {
        check_shape(&vertices, n, vertices.len())?;
        Ok(KSubset(vertices))
    }

    /// Sorts `vertices` first; fails on repeats or out-of-range entries.
    pub fn from_unsorted(mut vertices: Vec<usize>, n: usize) -> Result<Self> {
        vertices.sort_unstable();
        Self::new(vertices, n)
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        KSubset(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

fn check_shape(vertices: &[usize], n: usize, k: usize) -> Result<()> {
    let fail = |reason: String| Err(Error::InvalidSubset { n, k, reason });
    if n > MAX_ORDER {
        return fail(format!("order above the supported maximum {MAX_ORDER}"));
    }
    if vertices.len() != k {
        return fail(format!("has {} entries", vertices.len()));
    }
    if let Some(w) = vertices.windows(2).find(|w| w[0] >= w[1]) {
        return fail(format!(
            "entries {} and {} are not strictly increasing",
            w[0], w[1]
        ));
    }
    if let Some(&last) = vertices.last() {
        if last >= n {
            return fail(format!("vertex {last} out of range"));
        }
    }
    Ok(())
}

/// Colex rank of a sorted k-subset: `sum_i C(s_i, i + 1)`.
///
/// The caller guarantees the slice is strictly increasing with entries `<= MAX_ORDER`.
#[inline]
pub(crate) fn rank_sorted(vertices: &[usize]) -> u64 {
    vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| choose_small(v, i + 1))
        .sum()
}

/// Position of `s` in the colex order of all k-subsets of `[0, n)`.
pub fn rank_colex(s: &KSubset, n: usize, k: usize) -> Result<u64> {
    check_shape(s.vertices(), n, k)?;
    Ok(rank_sorted(s.vertices()))
}

/// Inverse of [`rank_colex`].
pub fn unrank_colex(rank: u64, n: usize, k: usize) -> Result<KSubset> {
    if n > MAX_ORDER || k > n {
        return Err(Error::InvalidParameters(format!(
            "need k <= n <= {MAX_ORDER}, got n = {n}, k = {k}"
        )));
    }
    let total = choose_small(n, k);
    if rank >= total {
        return Err(Error::RankOutOfRange { rank, n, k, total });
    }
    Ok(KSubset(unrank_into(rank, n, k)))
}

pub(crate) fn unrank_into(mut rank: u64, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    let mut hi = n;
    for i in (1..=k).rev() {
        // Largest c < hi with C(c, i) <= rank; C(i - 1, i) = 0 so the search always stops.
        let mut c = hi - 1;
        while choose_small(c, i) > rank {
            c -= 1;
        }
        out[i - 1] = c;
        rank -= choose_small(c, i);
        hi = c;
    }
    out
}

/// Advances `s` to its colex successor among k-subsets of `[0, n)`.
///
/// Returns `false` (leaving `s` unchanged) when `s` is already the last one.
pub fn next_colex(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    for i in 0..k {
        let limit = if i + 1 < k { s[i + 1] } else { n };
        if s[i] + 1 < limit {
            s[i] += 1;
            for (j, slot) in s[..i].iter_mut().enumerate() {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// Iterator over all k-subsets of `[0, n)` in colex order.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    current: Vec<usize>,
    n: usize,
    done: bool,
}

impl ColexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        ColexSubsets {
            current: (0..k).collect(),
            n,
            done: k > n,
        }
    }
}

impl Iterator for ColexSubsets {
    type Item = KSubset;

    fn next(&mut self) -> Option<KSubset> {
        if self.done {
            return None;
        }
        let out = KSubset(self.current.clone());
        self.done = !next_colex(&mut self.current, self.n);
        Some(out)
    }
}

/// Calls `f` on every `size`-subset of `pool` (given ascending), in colex order of positions.
pub(crate) fn for_each_subset_of(pool: &[usize], size: usize, mut f: impl FnMut(&[usize])) {
    if size > pool.len() {
        return;
    }
    let mut pos: Vec<usize> = (0..size).collect();
    let mut buf = vec![0usize; size];
    loop {
        for (b, &p) in buf.iter_mut().zip(&pos) {
            *b = pool[p];
        }
        f(&buf);
        if !next_colex(&mut pos, pool.len()) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(v: &[usize], n: usize) -> KSubset {
        KSubset::new(v.to_vec(), n).unwrap()
    }

    // Independent oracle: all k-subsets sorted by reversed vertex list.
    fn colex_by_sorting(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut all = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                all.push((0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>());
            }
        }
        all.sort_by_key(|s| s.iter().rev().copied().collect::<Vec<_>>());
        all
    }

    #[test]
    fn colex_examples() {
        let order = colex_by_sorting(6, 3);
        assert_eq!(order.len(), 20);
        assert_eq!(order[0], vec![0, 1, 2]);
        assert_eq!(order[1], vec![0, 1, 3]);
        assert_eq!(order[19], vec![3, 4, 5]);

        assert_eq!(rank_colex(&subset(&[0, 1, 2], 6), 6, 3).unwrap(), 0);
        assert_eq!(rank_colex(&subset(&[3, 4, 5], 6), 6, 3).unwrap(), 19);
        assert_eq!(rank_colex(&subset(&[0, 1, 3], 6), 6, 3).unwrap(), 1);
        assert_eq!(unrank_colex(0, 6, 3).unwrap().vertices(), &[0, 1, 2]);
        assert_eq!(unrank_colex(19, 6, 3).unwrap().vertices(), &[3, 4, 5]);
        assert_eq!(unrank_colex(1, 6, 3).unwrap().vertices(), &[0, 1, 3]);
    }

    #[test]
    fn ranks_follow_sorted_oracle() {
        for n in 0..=9 {
            for k in 0..=n {
                for (r, s) in colex_by_sorting(n, k).into_iter().enumerate() {
                    let ks = KSubset::new(s, n).unwrap();
                    assert_eq!(rank_colex(&ks, n, k).unwrap(), r as u64);
                }
            }
        }
    }

    #[test]
    fn iterator_matches_oracle() {
        let via_iter: Vec<Vec<usize>> = ColexSubsets::new(7, 3).map(KSubset::into_vec).collect();
        assert_eq!(via_iter, colex_by_sorting(7, 3));
        assert_eq!(ColexSubsets::new(4, 0).count(), 1);
        assert_eq!(ColexSubsets::new(3, 4).count(), 0);
    }

    #[test]
    fn shape_errors() {
        assert!(KSubset::new(vec![1, 1, 2], 6).is_err());
        assert!(KSubset::new(vec![2, 1], 6).is_err());
        assert!(KSubset::new(vec![0, 6], 6).is_err());
        assert!(rank_colex(&subset(&[0, 1], 6), 6, 3).is_err());
        assert!(matches!(
            unrank_colex(20, 6, 3),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(unrank_colex(0, 3, 4).is_err());
    }

    #[test]
    fn subsets_of_pool() {
        let mut seen = Vec::new();
        for_each_subset_of(&[2, 5, 7, 9], 2, |s| seen.push(s.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![2, 5],
                vec![2, 7],
                vec![5, 7],
                vec![2, 9],
                vec![5, 9],
                vec![7, 9]
            ]
        );
    }
}
