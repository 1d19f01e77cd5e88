//! Combinatorics of Dyck patterns for Kac modules of the Lie superalgebra
//! `gl(m|n)`, and the equivariant Betti tables of principal `GL`-invariant
//! ideals in the coordinate ring of `m × n` matrices that they compute.

pub mod dyck;
pub mod enumerate;
pub mod error;
pub mod grothendieck;
pub mod oracle;
mod par;
pub mod partition;
pub mod render;
pub mod series;
pub mod store;
pub mod syzygy;

pub use dyck::{
    check_admissible, decompose_bullets, is_admissible, lambda_of, lambda_of_bullets, AugmentedDyckPath,
    Condition, DyckPath, DyckPattern, PatternSizes, Violation,
};
pub use enumerate::{
    a_to_b, b_to_a, enumerate_b_side, enumerate_b_side_all, enumerate_kac_patterns, enumerate_syzygy_patterns, FamilyKind,
    FamilyMember, PatternFamily,
};
pub use error::{Error, Result};
pub use grothendieck::{
    hilbert_series_kac, hilbert_series_simple, kac_class, simple_in_kac_basis, Basis, GrothendieckClass, HilbertCalculator,
};
pub use par::is_parallel;
pub use partition::{Cell, Partition};
pub use series::HilbertSeries;
pub use store::{CACHE_ENV, CACHE_HEADER};
pub use syzygy::{
    betti_json, betti_table, general_ideal_terms, homology_classes, homology_classes_with, BettiTable, HomologyResult,
    InclusionExclusionTerm, StrandMember,
};
