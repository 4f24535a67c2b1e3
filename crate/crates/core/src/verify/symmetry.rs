//! Antimorphism checks and backtracking searches over vertex permutations.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::hypercore::{
    for_each_subset_of, next_colex, rank_sorted, Hypergraph, KSubset, Permutation,
};

/// Result of checking one permutation against the antimorphism condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AntimorphismCheck {
    Holds,
    /// `subset` and its image are both edges (`is_edge`) or both non-edges.
    Violated {
        subset: KSubset,
        is_edge: bool,
    },
}

impl AntimorphismCheck {
    pub fn holds(&self) -> bool {
        matches!(self, AntimorphismCheck::Holds)
    }
}

/// Checks that for every k-subset `e`, exactly one of `e` and `tau(e)` is an edge.
///
/// The first violating subset in colex order is returned as the witness.
pub fn verify_antimorphism(h: &Hypergraph, tau: &Permutation) -> Result<AntimorphismCheck> {
    tau.check_len(h.order())?;
    let (n, k) = (h.order(), h.uniformity());
    if k > n {
        return Ok(AntimorphismCheck::Holds);
    }
    let mut e: Vec<usize> = (0..k).collect();
    let mut img = vec![0usize; k];
    let mut rank = 0u64;
    loop {
        tau.apply_into(&e, &mut img);
        let is_edge = h.contains_rank(rank);
        if is_edge == h.contains_sorted(&img) {
            return Ok(AntimorphismCheck::Violated {
                subset: KSubset::new(e, n)?,
                is_edge,
            });
        }
        if !next_colex(&mut e, n) {
            return Ok(AntimorphismCheck::Holds);
        }
        rank += 1;
    }
}

/// Caps on the permutation backtracking searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Partial assignments explored before giving up as inconclusive.
    pub max_nodes: u64,
    /// Permits the larger orders that are refused by default.
    pub extended: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 50_000_000,
            extended: false,
        }
    }
}

/// Largest order searched for antimorphisms without [`SearchLimits::extended`].
pub const ANTIMORPHISM_DEFAULT_MAX_ORDER: usize = 8;
/// Largest order searched for antimorphisms at all.
pub const ANTIMORPHISM_EXTENDED_MAX_ORDER: usize = 10;
/// Largest order for orbit computation without [`SearchLimits::extended`].
pub const ORBITS_DEFAULT_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AntimorphismSearch {
    Found(Permutation),
    NoneExists,
    /// The node budget ran out before the search space was exhausted.
    Inconclusive {
        nodes: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Relation {
    /// `e in E <=> tau(e) in E`
    Preserve,
    /// `e in E <=> tau(e) not in E`
    Reverse,
}

struct Backtrack<'a> {
    h: &'a Hypergraph,
    relation: Relation,
    images: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    max_nodes: u64,
    scratch: Vec<usize>,
    mapped: Vec<usize>,
}

enum Stop {
    Budget,
    Visitor,
}

impl<'a> Backtrack<'a> {
    fn new(h: &'a Hypergraph, relation: Relation, max_nodes: u64) -> Self {
        let n = h.order();
        Backtrack {
            h,
            relation,
            images: vec![usize::MAX; n],
            used: vec![false; n],
            nodes: 0,
            max_nodes,
            scratch: Vec::with_capacity(h.uniformity()),
            mapped: vec![0; h.uniformity()],
        }
    }

    /// Every k-subset of `{0..=v}` containing `v` satisfies the relation under the partial map.
    fn consistent_at(&mut self, v: usize) -> bool {
        let k = self.h.uniformity();
        if k == 0 || v + 1 < k {
            return true;
        }
        let prefix: Vec<usize> = (0..v).collect();
        let mut ok = true;
        let (h, relation, images) = (self.h, self.relation, &self.images);
        let (scratch, mapped) = (&mut self.scratch, &mut self.mapped);
        for_each_subset_of(&prefix, k - 1, |rest| {
            if !ok {
                return;
            }
            scratch.clear();
            scratch.extend_from_slice(rest);
            scratch.push(v);
            for (m, &x) in mapped.iter_mut().zip(scratch.iter()) {
                *m = images[x];
            }
            mapped.sort_unstable();
            let a = h.contains_rank(rank_sorted(scratch));
            let b = h.contains_rank(rank_sorted(mapped));
            ok = match relation {
                Relation::Preserve => a == b,
                Relation::Reverse => a != b,
            };
        });
        ok
    }

    fn run(
        &mut self,
        v: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> std::result::Result<(), Stop> {
        let n = self.h.order();
        if v == n {
            return match visit(&self.images) {
                ControlFlow::Continue(()) => Ok(()),
                ControlFlow::Break(()) => Err(Stop::Visitor),
            };
        }
        for img in 0..n {
            if self.used[img] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Stop::Budget);
            }
            self.images[v] = img;
            self.used[img] = true;
            if self.consistent_at(v) {
                let r = self.run(v + 1, visit);
                if r.is_err() {
                    self.used[img] = false;
                    return r;
                }
            }
            self.used[img] = false;
        }
        self.images[v] = usize::MAX;
        Ok(())
    }
}

/// Searches for an antimorphism, assigning vertices in increasing order and trying
/// images in increasing order; the first success is returned.
pub fn find_antimorphism(h: &Hypergraph, limits: SearchLimits) -> Result<AntimorphismSearch> {
    let n = h.order();
    if 2 * h.edge_count() as u64 != h.subset_count() {
        return Ok(AntimorphismSearch::NoneExists);
    }
    let cap = if limits.extended {
        ANTIMORPHISM_EXTENDED_MAX_ORDER
    } else {
        ANTIMORPHISM_DEFAULT_MAX_ORDER
    };
    if n > cap {
        let hint = if n <= ANTIMORPHISM_EXTENDED_MAX_ORDER {
            " without the extended-search override"
        } else {
            ""
        };
        return Err(Error::Precondition(format!(
            "antimorphism search refused for n = {n} > {cap}{hint}"
        )));
    }
    let mut bt = Backtrack::new(h, Relation::Reverse, limits.max_nodes);
    let mut found = None;
    let outcome = bt.run(0, &mut |images| {
        found = Some(images.to_vec());
        ControlFlow::Break(())
    });
    match (outcome, found) {
        (_, Some(images)) => Ok(AntimorphismSearch::Found(Permutation::new(images)?)),
        (Err(Stop::Budget), None) => Ok(AntimorphismSearch::Inconclusive { nodes: bt.nodes }),
        _ => Ok(AntimorphismSearch::NoneExists),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexOrbits {
    /// Orbits of the full automorphism group, each ascending, ordered by least element.
    Complete {
        orbits: Vec<Vec<usize>>,
        automorphisms: u64,
    },
    Inconclusive {
        nodes: u64,
    },
}

impl VertexOrbits {
    pub fn orbit_count(&self) -> Option<usize> {
        match self {
            VertexOrbits::Complete { orbits, .. } => Some(orbits.len()),
            VertexOrbits::Inconclusive { .. } => None,
        }
    }
}

fn find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Vertex orbits of the automorphism group, by enumerating every automorphism.
pub fn automorphism_vertex_orbits(h: &Hypergraph, limits: SearchLimits) -> Result<VertexOrbits> {
    let n = h.order();
    if n > ORBITS_DEFAULT_MAX_ORDER && !limits.extended {
        return Err(Error::Precondition(format!(
            "exhaustive orbit computation refused for n = {n} > {ORBITS_DEFAULT_MAX_ORDER} without the extended-search override"
        )));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut automorphisms = 0u64;
    let mut bt = Backtrack::new(h, Relation::Preserve, limits.max_nodes);
    let outcome = bt.run(0, &mut |images| {
        automorphisms += 1;
        for (v, &w) in images.iter().enumerate() {
            let (a, b) = (find_root(&mut parent, v), find_root(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        ControlFlow::Continue(())
    });
    if let Err(Stop::Budget) = outcome {
        return Ok(VertexOrbits::Inconclusive { nodes: bt.nodes });
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find_root(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[r]].push(v);
    }
    Ok(VertexOrbits::Complete {
        orbits,
        automorphisms,
    })
}

/// Number of 4-sets through `v` whose four triples are all edges (3-uniform only).
pub fn vertex_invariant_k4(h: &Hypergraph, v: usize) -> Result<u64> {
    if h.uniformity() != 3 {
        return Err(Error::InvalidParameters(format!(
            "K4 invariant needs a 3-uniform hypergraph, got k = {}",
            h.uniformity()
        )));
    }
    let n = h.order();
    if v >= n {
        return Err(Error::InvalidParameters(format!(
            "vertex {v} out of range for n = {n}"
        )));
    }
    let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
    let mut count = 0;
    for_each_subset_of(&others, 3, |abc| {
        let mut quad = [abc[0], abc[1], abc[2], v];
        quad.sort_unstable();
        let all = (0..4).all(|skip| {
            let tri: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| quad[i]).collect();
            h.contains_rank(rank_sorted(&tri))
        });
        if all {
            count += 1;
        }
    });
    Ok(count)
}
