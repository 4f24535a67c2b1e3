use std::fmt;

use crate::error::{Error, Result};
use crate::hypercore::{
    binomial, choose_small, for_each_subset_of, rank_sorted, unrank_into, Hypergraph, KSubset,
    MAX_SUBSETS,
};

/// Outcome of a t-subset-regularity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    /// Every t-subset lies in exactly `valence` edges.
    Regular { valence: u64 },
    /// `witness` is the first t-subset (colex order) whose coverage differs from
    /// that of the first t-subset, `reference`.
    Irregular {
        reference: KSubset,
        reference_count: u64,
        witness: KSubset,
        witness_count: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub t: usize,
    pub outcome: Regularity,
}

impl RegularityReport {
    pub fn valence(&self) -> Option<u64> {
        match self.outcome {
            Regularity::Regular { valence } => Some(valence),
            Regularity::Irregular { .. } => None,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.valence().is_some()
    }
}

impl fmt::Display for RegularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Regularity::Regular { valence } => {
                write!(f, "{}-subset-regular with valence {valence}", self.t)
            }
            Regularity::Irregular {
                reference,
                reference_count,
                witness,
                witness_count,
            } => write!(
                f,
                "not {}-subset-regular: {witness} lies in {witness_count} edges but {reference} lies in {reference_count}",
                self.t
            ),
        }
    }
}

/// Coverage of every t-subset, indexed by colex rank.
///
/// One pass over the edges, bumping the `C(k, t)` t-subsets of each.
pub fn coverage_counts(h: &Hypergraph, t: usize) -> Result<Vec<u64>> {
    let (n, k) = (h.order(), h.uniformity());
    if t > k {
        return Err(Error::InvalidParameters(format!("t = {t} exceeds k = {k}")));
    }
    let slots = choose_small(n, t);
    if slots > MAX_SUBSETS {
        return Err(Error::InvalidParameters(format!(
            "C({n},{t}) = {slots} is too many to count"
        )));
    }
    let mut counts = vec![0u64; slots as usize];
    for e in h.edges() {
        for_each_subset_of(e.vertices(), t, |s| counts[rank_sorted(s) as usize] += 1);
    }
    Ok(counts)
}

pub fn t_subset_regularity(h: &Hypergraph, t: usize) -> Result<RegularityReport> {
    let (n, k) = (h.order(), h.uniformity());
    if !(1 <= t && t < k && k <= n) {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= t < k <= n, got t = {t}, k = {k}, n = {n}"
        )));
    }
    let counts = coverage_counts(h, t)?;
    let reference_count = counts[0];
    let outcome = match counts.iter().position(|&c| c != reference_count) {
        None => Regularity::Regular {
            valence: reference_count,
        },
        Some(r) => Regularity::Irregular {
            reference: KSubset::new(unrank_into(0, n, t), n)?,
            reference_count,
            witness: KSubset::new(unrank_into(r as u64, n, t), n)?,
            witness_count: counts[r],
        },
    };
    Ok(RegularityReport { t, outcome })
}

/// `C(n - t, k - t) / 2`, the only valence a self-complementary t-subset-regular
/// k-hypergraph of order n can have (it and its complement share the t-subsets' coverage).
pub fn expected_valence(n: u64, k: u64, t: u64) -> Result<u64> {
    if !(t <= k && k <= n) {
        return Err(Error::InvalidParameters(format!(
            "need t <= k <= n, got n = {n}, k = {k}, t = {t}"
        )));
    }
    let c = binomial(n - t, k - t)?;
    if c % 2 != 0 {
        return Err(Error::Precondition(format!(
            "C({},{}) = {c} is odd, so no self-complementary {t}-subset-regular hypergraph exists",
            n - t,
            k - t
        )));
    }
    Ok(c / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_gamma;

    #[test]
    fn gamma_valences() {
        let r = t_subset_regularity(&build_gamma(6).unwrap(), 2).unwrap();
        assert_eq!(r.outcome, Regularity::Regular { valence: 2 });
        let r = t_subset_regularity(&build_gamma(10).unwrap(), 2).unwrap();
        assert_eq!(r.valence(), Some(4));
    }

    #[test]
    fn complete_hypergraph_valence() {
        let h = Hypergraph::complete(5, 3).unwrap();
        assert_eq!(t_subset_regularity(&h, 2).unwrap().valence(), Some(3));
        assert_eq!(t_subset_regularity(&h, 1).unwrap().valence(), Some(6));
    }

    #[test]
    fn removed_edge_gives_witness() {
        let g = build_gamma(6).unwrap();
        let h = Hypergraph::from_ranks(6, 3, g.ranks()[1..].iter().copied()).unwrap();
        let removed = g.edges().next().unwrap();
        let r = t_subset_regularity(&h, 2).unwrap();
        match r.outcome {
            Regularity::Irregular {
                reference,
                reference_count,
                witness,
                witness_count,
            } => {
                let mut counts = [reference_count, witness_count];
                counts.sort_unstable();
                assert_eq!(counts, [1, 2]);
                // exactly one of the two lies inside the removed edge
                let inside = |s: &KSubset| s.vertices().iter().all(|&v| removed.contains(v));
                assert_ne!(inside(&reference), inside(&witness));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn parameter_checks() {
        let g = build_gamma(6).unwrap();
        assert!(t_subset_regularity(&g, 0).is_err());
        assert!(t_subset_regularity(&g, 3).is_err());
    }

    #[test]
    fn expected_valence_values() {
        assert_eq!(expected_valence(6, 3, 2).unwrap(), 2);
        assert_eq!(expected_valence(5, 2, 1).unwrap(), 2);
        for n in (6..=50).step_by(4) {
            assert_eq!(expected_valence(n, 3, 2).unwrap(), (n - 2) / 2);
        }
        assert!(matches!(
            expected_valence(7, 3, 2),
            Err(Error::Precondition(_))
        ));
    }
}
