//! Pairwise classification predicates and class enumeration.
//!
//! Three nested equivalence relations on bundle indices with the same Euler
//! number `n`:
//!
//! * homotopy equivalence: `m = +/-m' mod gcd(n, 12)`;
//! * homeomorphism: homotopy equivalence and `4m = +/-4m' mod n` (the two
//!   total spaces have equal Pontrjagin residue sets);
//! * diffeomorphism: homeomorphism and equal Eells–Kuiper invariants.
//!
//! The two sign conditions are tested independently of each other.

use num_integer::Integer;
use serde::Serialize;

use crate::invariants::mu_invariant;
use crate::types::{BundleIndex, DomainError, EquivalenceLevel};

/// Congruence `x = +/-y mod k`, each sign tested separately. `k = 0` means no
/// constraint beyond exact equality of `x` and `+/-y`.
fn pm_congruent(x: i64, y: i64, k: i64) -> bool {
    let (x, y, k) = (x as i128, y as i128, k as i128);
    (x - y).rem_euclid(k) == 0 || (x + y).rem_euclid(k) == 0
}

/// Whether the two total spaces are homotopy equivalent: same `n` and
/// `m = +/-m' mod gcd(n, 12)`.
pub fn homotopy_equivalent(a: BundleIndex, b: BundleIndex) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let g = a.n().gcd(&12);
    pm_congruent(a.m(), b.m(), g)
}

/// The Pontrjagin condition alone: same `n` and `4m = +/-4m' mod n`. This is
/// exactly when the two total spaces have equal Pontrjagin residue sets.
pub fn p1_congruent(a: BundleIndex, b: BundleIndex) -> bool {
    a.n() == b.n() && pm_congruent(4 * a.m(), 4 * b.m(), a.n())
}

/// Whether the two total spaces are homeomorphic: homotopy equivalent and
/// `4m = +/-4m' mod n`.
pub fn homeomorphic(a: BundleIndex, b: BundleIndex) -> bool {
    homotopy_equivalent(a, b) && p1_congruent(a, b)
}

/// Whether the two total spaces are diffeomorphic: homeomorphic with equal
/// `mu` invariants.
pub fn diffeomorphic(a: BundleIndex, b: BundleIndex) -> bool {
    homeomorphic(a, b) && mu_invariant(a) == mu_invariant(b)
}

/// Strongest level at which the two indices are identified.
pub fn classify_pair(a: BundleIndex, b: BundleIndex) -> EquivalenceLevel {
    if !homotopy_equivalent(a, b) {
        EquivalenceLevel::Distinct
    } else if !pm_congruent(4 * a.m(), 4 * b.m(), a.n()) {
        EquivalenceLevel::HomotopyEquivalent
    } else if mu_invariant(a) != mu_invariant(b) {
        EquivalenceLevel::Homeomorphic
    } else {
        EquivalenceLevel::Diffeomorphic
    }
}

/// One equivalence class inside an enumeration window: its smallest member
/// (the representative) and all members in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceClass {
    pub representative: i64,
    pub members: Vec<i64>,
}

/// Partition of `{0 <= m < window}` for a fixed `n` into classes at one
/// equivalence level. Classes are ordered by representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassPartition {
    pub n: i64,
    pub level: EquivalenceLevel,
    pub window: i64,
    pub classes: Vec<EquivalenceClass>,
}

/// Default enumeration window `56 * n`: `mu` has period 56 in `m`, and every
/// congruence modulus involved divides `n`, so one window meets every class.
pub fn default_window(n: i64) -> i64 {
    56 * n
}

/// Partitions `{0 <= m < window}` at the given level. `window` defaults to
/// `56 * n` and must be a positive multiple of `lcm(56, n)`; the level must
/// not be [`EquivalenceLevel::Distinct`].
pub fn enumerate_classes(
    n: i64,
    level: EquivalenceLevel,
    window: Option<i64>,
) -> Result<ClassPartition, DomainError> {
    if n < 1 {
        return Err(DomainError::EulerOutOfRange(n));
    }
    if level == EquivalenceLevel::Distinct {
        return Err(DomainError::TrivialLevel);
    }
    let period = 56.lcm(&n);
    let window = window.unwrap_or_else(|| default_window(n));
    if window < 1 || window % period != 0 {
        return Err(DomainError::WindowNotAligned {
            given: window,
            required: period,
        });
    }

    let mut classes: Vec<EquivalenceClass> = Vec::new();
    for m in 0..window {
        let b = BundleIndex::new(m, n).expect("n validated above");
        let found = classes.iter_mut().find(|class| {
            let rep = BundleIndex::new(class.representative, n).expect("n validated above");
            classify_pair(rep, b) >= level
        });
        match found {
            Some(class) => class.members.push(m),
            None => classes.push(EquivalenceClass {
                representative: m,
                members: vec![m],
            }),
        }
    }
    // Scanning in ascending order makes each representative the class
    // minimum and leaves the classes sorted by representative.
    Ok(ClassPartition {
        n,
        level,
        window,
        classes,
    })
}

/// Smallest `m'` in `[0, 56n)` whose index is related to `b` at the given
/// level (or stronger). Always exists: `m mod 56n` is diffeomorphic to `m`.
pub fn canonical_representative(b: BundleIndex, level: EquivalenceLevel) -> BundleIndex {
    let window = default_window(b.n());
    for m in 0..window {
        let candidate = BundleIndex::new(m, b.n()).expect("n >= 1 by construction");
        if classify_pair(candidate, b) >= level {
            return candidate;
        }
    }
    unreachable!("reduction of m mod 56n is equivalent at every level")
}
