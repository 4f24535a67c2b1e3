//! Construction and verification of self-complementary t-subset-regular
//! uniform hypergraphs, with an exhaustive search oracle for small orders.

pub mod construct;
pub mod error;
pub mod hypercore;
pub mod parity;
pub mod search;
pub mod verify;

pub use construct::{build_gamma, swap_antimorphism, Gamma};
pub use error::{Error, Result};
pub use hypercore::{Hypergraph, KSubset, Permutation};
