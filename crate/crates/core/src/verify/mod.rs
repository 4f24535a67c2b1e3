//! Mechanical checks of regularity, self-complementarity and symmetry.

mod cases;
mod euler;
mod regularity;
mod report;
mod symmetry;

pub use cases::{pair_case_breakdown, PairCase, PairCaseBreakdown};
pub use euler::{euler_characteristic_triangulation, Skeleton};
pub use regularity::{
    coverage_counts, expected_valence, t_subset_regularity, Regularity, RegularityReport,
};
pub use report::{OrbitCount, VerificationReport};
pub use symmetry::{
    automorphism_vertex_orbits, find_antimorphism, verify_antimorphism, vertex_invariant_k4,
    AntimorphismCheck, AntimorphismSearch, SearchLimits, VertexOrbits,
    ANTIMORPHISM_DEFAULT_MAX_ORDER, ANTIMORPHISM_EXTENDED_MAX_ORDER, ORBITS_DEFAULT_MAX_ORDER,
};
