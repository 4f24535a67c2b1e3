//! k-uniform hypergraphs, k-subsets and the permutation action on them.

mod binom;
mod edgelist;
mod hypergraph;
mod permutation;
mod subset;

pub use binom::{binomial, MAX_ORDER};
pub use edgelist::{
    parse_edge_list, parse_permutation, read_edge_list, to_edge_list, write_edge_list,
};
pub use hypergraph::{Hypergraph, MAX_SUBSETS};
pub use permutation::Permutation;
pub use subset::{next_colex, rank_colex, unrank_colex, ColexSubsets, KSubset};

pub(crate) use binom::choose_small;
pub(crate) use subset::{for_each_subset_of, rank_sorted, unrank_into};
