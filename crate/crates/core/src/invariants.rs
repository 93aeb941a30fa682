//! Numerical invariants of one total space: cohomology order, Euler number,
//! Pontrjagin data, the Eells–Kuiper invariant, and the alternative
//! Milnor-style indexing.

use serde::Serialize;

use crate::types::{BundleIndex, DomainError, ModOneRational};

/// Alternative indexing of the same bundle family by a pair `(k, l)` with
/// `k + l` equal to the Euler number and `l = -m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MilnorIndex {
    pub k: i64,
    pub l: i64,
}

/// Converts `(m, n)` to the `(k, l)` indexing: `k = n + m`, `l = -m`.
pub fn to_milnor(b: BundleIndex) -> MilnorIndex {
    MilnorIndex {
        k: b.n() + b.m(),
        l: -b.m(),
    }
}

/// Converts `(k, l)` back to `(m, n) = (-l, k + l)`; rejects `k + l <= 0`.
pub fn from_milnor(i: MilnorIndex) -> Result<BundleIndex, DomainError> {
    let n = i.k + i.l;
    if n < 1 {
        return Err(DomainError::MilnorPairOutOfRange { k: i.k, l: i.l });
    }
    BundleIndex::new(-i.l, n)
}

/// The Eells–Kuiper invariant of the total space:
/// `mu = ((n + 2m)^2 - 1) / 224 mod 1`.
///
/// It is an invariant of the smooth structure; two total spaces with the same
/// `n` are diffeomorphic exactly when they are homeomorphic and share this
/// value. The denominator always divides 224 = 2^5 * 7.
pub fn mu_invariant(b: BundleIndex) -> ModOneRational {
    let y = b.n() as i128 + 2 * b.m() as i128;
    // Reduce the numerator mod 224 before building the rational; the square
    // is taken in 128-bit arithmetic so no intermediate can overflow.
    ModOneRational::from_ratio(y * y - 1, 224)
}

/// Magnitude of the first Pontrjagin number of the bundle itself (a class
/// over the base 4-sphere): `|2(2m + n)|`. The sign depends on a choice of
/// orientation, so only the magnitude is well defined.
pub fn p1_bundle(b: BundleIndex) -> i64 {
    (2 * (2 * b.m() + b.n())).abs()
}

/// Invariants of the total space that only depend on its topology, plus the
/// smooth `mu` invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    /// Order of the fourth cohomology group (cyclic of order `n`).
    pub h4_order: i64,
    /// Euler number of the bundle; equals `h4_order`.
    pub euler: i64,
    /// First Pontrjagin class of the total space as a residue set mod `n`:
    /// `{4m mod n, -4m mod n}`, closed under negation because the sign is an
    /// orientation choice. One element when the two residues coincide.
    pub p1_residues: Vec<i64>,
    /// Eells–Kuiper invariant.
    pub mu: ModOneRational,
}

/// Collects the invariants of one total space.
pub fn invariant_record(b: BundleIndex) -> InvariantRecord {
    let n = b.n() as i128;
    let x = (4 * b.m() as i128).rem_euclid(n) as i64;
    // x is already in [0, n), so n - x lies in (0, n] and one reduction
    // suffices for the negated residue.
    let neg = (b.n() - x) % b.n();
    let mut p1_residues = vec![x, neg];
    p1_residues.sort_unstable();
    p1_residues.dedup();
    InvariantRecord {
        h4_order: b.n(),
        euler: b.n(),
        p1_residues,
        mu: mu_invariant(b),
    }
}
