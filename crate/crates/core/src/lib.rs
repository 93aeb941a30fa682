//! Exact-arithmetic invariants and classification for the total spaces of
//! 3-sphere bundles over the 4-sphere.
//!
//! A bundle index `(m, n)` determines a closed 7-manifold; this crate
//! computes its classifying invariants and decides when two indices give
//! the same manifold up to homotopy equivalence, homeomorphism, or
//! diffeomorphism. All arithmetic is exact — integers, 128-bit
//! intermediates, and reduced rationals in `Q/Z`; no floating point
//! appears anywhere.
//!
//! # Layout
//!
//! * [`types`] — validated parameter types, exact `Q/Z` rationals, the
//!   equivalence-level lattice, and domain errors;
//! * [`invariants`] — cohomology order, Euler number, first Pontrjagin
//!   class residues, the Eells–Kuiper `mu` invariant, and the
//!   sphere-bundle/Milnor index dictionary;
//! * [`classify`] — pairwise equivalence predicates and enumeration of
//!   equivalence classes over one period;
//! * [`counting`] — the diffeomorphism-class count `d(m, n)` (decision
//!   table and independent direct count), structure-set sizes, and modular
//!   counting primitives.
//!
//! # Example
//!
//! ```
//! use s3bundle::{classify_pair, BundleIndex, EquivalenceLevel};
//!
//! let a = BundleIndex::new(0, 1)?;
//! let b = BundleIndex::new(1, 1)?;
//! // Same homeomorphism type, different smooth structures.
//! assert_eq!(classify_pair(a, b), EquivalenceLevel::Homeomorphic);
//! # Ok::<(), s3bundle::DomainError>(())
//! ```

pub mod classify;
pub mod counting;
pub mod invariants;
pub mod types;

pub use classify::{
    canonical_representative, classify_pair, default_window, diffeomorphic, enumerate_classes,
    homeomorphic, homotopy_equivalent, p1_congruent, ClassPartition, EquivalenceClass,
};
pub use counting::{
    count_consecutive_products_mod, count_squares_mod, d_case, d_formula, d_oracle, mu_difference,
    structure_set_report, BundleSubset, CaseId, DCase, Parity, StructureSetReport,
    SMOOTH_STRUCTURES_PER_HOMOTOPY_TYPE,
};
pub use invariants::{
    from_milnor, invariant_record, mu_invariant, p1_bundle, to_milnor, InvariantRecord, MilnorIndex,
};
pub use types::{
    factor_two, mod_one, BundleIndex, DomainError, EquivalenceLevel, ModOneRational,
    TwoFactorization,
};
