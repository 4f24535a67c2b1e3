use std::fmt;

use crate::construct::{Family, Gamma, Vertex};
use crate::error::{Error, Result};

/// The four kinds of vertex pairs in the constructed hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairCase {
    /// `a_0, b_0` with `a != b`
    A,
    /// `a_1, b_1` with `a != b`
    B,
    /// `a_0, a_1`
    C,
    /// `a_0, c_1` with `a != c`
    D,
}

impl PairCase {
    pub fn classify(u: Vertex, v: Vertex) -> Self {
        match (u.side, v.side) {
            (0, 0) => PairCase::A,
            (1, 1) => PairCase::B,
            _ if u.residue == v.residue => PairCase::C,
            _ => PairCase::D,
        }
    }
}

impl fmt::Display for PairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairCase::A => "(a)",
            PairCase::B => "(b)",
            PairCase::C => "(c)",
            PairCase::D => "(d)",
        })
    }
}

/// How many edges of each family contain a given pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCaseBreakdown {
    pub case: PairCase,
    /// Indexed by [`Family::index`].
    pub counts: [u64; 3],
}

impl PairCaseBreakdown {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn pair_case_breakdown(gamma: &Gamma, u: usize, v: usize) -> Result<PairCaseBreakdown> {
    let params = gamma.params();
    if u == v {
        return Err(Error::InvalidParameters(format!(
            "pair needs two distinct vertices, got {u} twice"
        )));
    }
    if u.max(v) >= params.n {
        return Err(Error::InvalidParameters(format!(
            "vertex {} out of range for n = {}",
            u.max(v),
            params.n
        )));
    }
    let (lo, hi) = (u.min(v), u.max(v));
    let case = PairCase::classify(params.vertex(lo), params.vertex(hi));
    let counts = Family::ALL.map(|f| {
        gamma
            .family(f)
            .edges()
            .filter(|e| e.contains(lo) && e.contains(hi))
            .count() as u64
    });
    Ok(PairCaseBreakdown { case, counts })
}
