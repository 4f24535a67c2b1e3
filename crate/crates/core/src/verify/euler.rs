use crate::error::{Error, Result};
use crate::hypercore::{choose_small, Hypergraph};

use super::regularity::{coverage_counts, t_subset_regularity};

/// Which vertex pairs count as edges of the 1-skeleton.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Skeleton {
    /// All `C(n, 2)` pairs: the triangles form a triangular embedding of `K_n`.
    #[default]
    CompleteGraph,
    /// Only pairs lying in some triangle.
    CoveredPairs,
}

/// `V - E + F` for a 3-uniform hypergraph read as a closed triangulated surface.
///
/// With [`Skeleton::CompleteGraph`] every pair must lie in exactly two triangles;
/// with [`Skeleton::CoveredPairs`] every pair must lie in zero or two.
pub fn euler_characteristic_triangulation(h: &Hypergraph, skeleton: Skeleton) -> Result<i64> {
    if h.uniformity() != 3 {
        return Err(Error::Precondition(format!(
            "not a triangulation candidate: uniformity {} is not 3",
            h.uniformity()
        )));
    }
    let n = h.order();
    let faces = h.edge_count() as i64;
    let skeleton_edges = match skeleton {
        Skeleton::CompleteGraph => {
            if n < 3 || t_subset_regularity(h, 2)?.valence() != Some(2) {
                return Err(Error::Precondition(
                    "not a triangulation candidate: some pair is not in exactly two triangles"
                        .into(),
                ));
            }
            choose_small(n, 2) as i64
        }
        Skeleton::CoveredPairs => {
            let counts = coverage_counts(h, 2)?;
            if counts.iter().any(|&c| c != 0 && c != 2) {
                return Err(Error::Precondition(
                    "not a triangulation candidate: some covered pair is not in exactly two triangles"
                        .into(),
                ));
            }
            counts.iter().filter(|&&c| c == 2).count() as i64
        }
    };
    Ok(n as i64 - skeleton_edges + faces)
}
