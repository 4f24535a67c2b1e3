//! The explicit self-complementary 2-subset-regular 3-hypergraph of order `n = 4k + 2`.
//!
//! Vertices are two copies `V_0`, `V_1` of `Z_m` with `m = 2k + 1`; residue `a`
//! on side `i` has index `a + i * m`. The edge set is the disjoint union of
//!
//! * `E1`: every triple inside `V_0`;
//! * `E2`: `{a_0, b_0, c_1}` with `a != b` and `2c = a + b (mod m)`;
//! * `E3`: `{a_0, b_1, c_1}` with `b != c` and `2a != b + c (mod m)`.
//!
//! Swapping the two sides maps the edge set onto its complement.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypercore::{binomial, Hypergraph, Permutation, MAX_ORDER};

/// Uniformity of the constructed hypergraph.
pub const UNIFORMITY: usize = 3;

/// Orders `n = 4 * kparam + 2`, with `m = 2 * kparam + 1` residues per side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionParams {
    pub kparam: usize,
    pub m: usize,
    pub n: usize,
}

impl ConstructionParams {
    /// Validates `n >= 6` and `n ≡ 2 (mod 4)`.
    pub fn for_order(n: usize) -> Result<Self> {
        if n < 6 {
            return Err(Error::Inadmissible {
                n,
                condition: "the construction requires n >= 6".into(),
            });
        }
        if n % 4 != 2 {
            return Err(Error::Inadmissible {
                n,
                condition: format!(
                    "the construction requires n ≡ 2 (mod 4), but n ≡ {} (mod 4)",
                    n % 4
                ),
            });
        }
        if n > MAX_ORDER {
            return Err(Error::Inadmissible {
                n,
                condition: format!("orders above {MAX_ORDER} are not supported"),
            });
        }
        let kparam = (n - 2) / 4;
        Ok(ConstructionParams {
            kparam,
            m: 2 * kparam + 1,
            n,
        })
    }

    /// The common pair coverage `(n - 2) / 2`.
    pub fn valence(&self) -> usize {
        2 * self.kparam
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        Vertex::from_index(index, self.m)
    }
}

/// A residue of `Z_m` tagged with its side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub residue: usize,
    pub side: u8,
}

impl Vertex {
    pub fn new(residue: usize, side: u8) -> Self {
        Vertex { residue, side }
    }

    pub fn index(self, m: usize) -> usize {
        self.residue + usize::from(self.side) * m
    }

    pub fn from_index(index: usize, m: usize) -> Self {
        Vertex {
            residue: index % m,
            side: (index / m) as u8,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.residue, self.side)
    }
}

/// `(m + 1) / 2`, the inverse of 2 modulo odd `m`.
pub fn inverse_of_two(m: u64) -> Result<u64> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenModulus(m));
    }
    if m < 3 {
        return Err(Error::InvalidParameters(format!(
            "modulus must be at least 3, got {m}"
        )));
    }
    Ok(m.div_ceil(2))
}

/// The unique `y` in `Z_m` with `2y ≡ x`.
pub fn half(x: u64, m: u64) -> Result<u64> {
    let inv = inverse_of_two(m)?;
    if x >= m {
        return Err(Error::InvalidParameters(format!(
            "residue {x} not reduced modulo {m}"
        )));
    }
    Ok((x as u128 * inv as u128 % m as u128) as u64)
}

/// One of the three edge families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E1,
    E2,
    E3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::E1, Family::E2, Family::E3];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::E1 => "E1",
            Family::E2 => "E2",
            Family::E3 => "E3",
        };
        f.write_str(s)
    }
}

/// The constructed hypergraph together with its family partition.
#[derive(Debug, Clone)]
pub struct Gamma {
    params: ConstructionParams,
    hypergraph: Hypergraph,
    families: [Hypergraph; 3],
}

impl Gamma {
    pub fn build(n: usize) -> Result<Self> {
        let params = ConstructionParams::for_order(n)?;
        let m = params.m;
        let inv2 = m.div_ceil(2);
        let half = |x: usize| x % m * inv2 % m;
        let side1 = |r: usize| r + m;

        let mut e1 = Vec::new();
        for c in 2..m {
            for b in 1..c {
                for a in 0..b {
                    e1.push([a, b, c]);
                }
            }
        }

        let mut e2 = Vec::new();
        for b in 1..m {
            for a in 0..b {
                let c = half(a + b);
                assert!(
                    c != a && c != b,
                    "midpoint of {a} and {b} mod {m} coincides with an endpoint"
                );
                e2.push([a, b, side1(c)]);
            }
        }

        let mut e3 = Vec::new();
        for a in 0..m {
            for c in 1..m {
                for b in 0..c {
                    if (2 * a) % m != (b + c) % m {
                        e3.push([a, side1(b), side1(c)]);
                    }
                }
            }
        }

        let to_graph = |edges: Vec<[usize; 3]>| {
            let ranks = edges.iter().map(|e| crate::hypercore::rank_sorted(e));
            Hypergraph::from_ranks(n, UNIFORMITY, ranks)
        };
        let (c1, c2, c3) = (e1.len(), e2.len(), e3.len());
        let families = [to_graph(e1)?, to_graph(e2)?, to_graph(e3)?];
        // Distinct families never share an edge: they differ in |e ∩ V_0|.
        assert_eq!(
            (
                families[0].edge_count(),
                families[1].edge_count(),
                families[2].edge_count()
            ),
            (c1, c2, c3)
        );
        let all = families.iter().flat_map(|f| f.ranks().iter().copied());
        let hypergraph = Hypergraph::from_ranks(n, UNIFORMITY, all)?;
        assert_eq!(hypergraph.edge_count(), c1 + c2 + c3);
        Ok(Gamma {
            params,
            hypergraph,
            families,
        })
    }

    pub fn params(&self) -> ConstructionParams {
        self.params
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.hypergraph
    }

    /// The sub-hypergraph formed by one family.
    pub fn family(&self, f: Family) -> &Hypergraph {
        &self.families[f.index()]
    }

    /// Which family an edge (by colex rank) belongs to.
    pub fn family_of(&self, rank: u64) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| self.families[f.index()].contains_rank(rank))
    }
}

/// The hypergraph on `n` vertices defined above.
pub fn build_gamma(n: usize) -> Result<Hypergraph> {
    Gamma::build(n).map(Gamma::into_hypergraph)
}

/// The side swap `a_i -> a_{i+1}`: index `v <-> v + n/2`.
pub fn swap_antimorphism(n: usize) -> Result<Permutation> {
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "side swap needs an even order, got {n}"
        )));
    }
    let m = n / 2;
    Permutation::new((0..n).map(|v| (v + m) % n).collect())
}

/// Closed-form family sizes `(C(m,3), C(m,2), C(m,2) * (m - 1))`.
pub fn edge_counts(n: usize) -> Result<(u64, u64, u64)> {
    let m = ConstructionParams::for_order(n)?.m as u64;
    let pairs = binomial(m, 2)?;
    Ok((binomial(m, 3)?, pairs, pairs * (m - 1)))
}
