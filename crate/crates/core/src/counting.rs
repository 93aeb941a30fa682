//! Diffeomorphism-class counts, structure-set sizes, and modular counting
//! primitives.
//!
//! The central quantity is `d(m, n)`: the number of diffeomorphism classes
//! inside the homeomorphism class of the total space indexed by `(m, n)`.
//! It is computed two independent ways:
//!
//! * [`d_formula`] looks the answer up in a closed decision table keyed by
//!   the divisibility of the odd part of `n` by 3 and 7, the 2-adic
//!   valuation of `n`, and the parity of `m`;
//! * [`d_oracle`] enumerates every index homeomorphic to the given one
//!   inside one full period and counts the distinct `mu` values directly.
//!
//! The table is stored as literal rows rather than collapsed into formulas
//! so each lookup can report which row fired.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::classify::homeomorphic;
use crate::invariants::mu_invariant;
use crate::types::{BundleIndex, DomainError, EquivalenceLevel, ModOneRational};

/// Order of the group of smooth structures on the 7-sphere: every homotopy
/// 7-sphere bounds one of 28 smooth structures, so `mu` differences between
/// homeomorphic total spaces are multiples of `1/28`.
pub const SMOOTH_STRUCTURES_PER_HOMOTOPY_TYPE: u32 = 28;

/// Parity of the bundle parameter `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: i64) -> Parity {
        if value.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// The four divisibility cases for the odd part `a` of the Euler number,
/// split by whether 3 and 7 divide `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseId {
    /// `3 ∤ a`, `7 ∤ a`
    I,
    /// `3 | a`, `7 ∤ a`
    II,
    /// `3 ∤ a`, `7 | a`
    III,
    /// `3 | a`, `7 | a`
    IV,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CaseId::I => "I",
            CaseId::II => "II",
            CaseId::III => "III",
            CaseId::IV => "IV",
        };
        write!(f, "{name}")
    }
}

/// Everything the decision table keys on, derived from one bundle index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DCase {
    pub case: CaseId,
    /// 2-adic valuation of the Euler number.
    pub two_adic_valuation: u32,
    /// Odd part of the Euler number.
    pub odd_part: i64,
    pub m_parity: Parity,
}

/// Classifies a bundle index into its decision-table case.
pub fn d_case(b: BundleIndex) -> DCase {
    let f = b.two_factorization();
    let a = f.odd_part;
    let case = match (a % 3 == 0, a % 7 == 0) {
        (false, false) => CaseId::I,
        (true, false) => CaseId::II,
        (false, true) => CaseId::III,
        (true, true) => CaseId::IV,
    };
    DCase {
        case,
        two_adic_valuation: f.exponent,
        odd_part: a,
        m_parity: Parity::of(b.m()),
    }
}

/// Row selector on the 2-adic valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RSel {
    Exactly(u32),
    AtLeast(u32),
}

impl RSel {
    fn matches(self, r: u32) -> bool {
        match self {
            RSel::Exactly(v) => r == v,
            RSel::AtLeast(v) => r >= v,
        }
    }
}

/// Row selector on the parity of `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ParitySel {
    Any,
    Only(Parity),
}

impl ParitySel {
    fn matches(self, p: Parity) -> bool {
        match self {
            ParitySel::Any => true,
            ParitySel::Only(v) => p == v,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct TableRow {
    case: CaseId,
    r: RSel,
    parity: ParitySel,
    d: usize,
}

const fn row(case: CaseId, r: RSel, parity: ParitySel, d: usize) -> TableRow {
    TableRow { case, r, parity, d }
}

/// The decision table, one row per (case, valuation, parity) cell. Rows are
/// matched top to bottom; the selectors make each case's rows disjoint, so
/// the order within a case never matters.
const DECISION_TABLE: &[TableRow] = &[
    // 7 does not divide the odd part (cases I and II).
    row(CaseId::I, RSel::Exactly(0), ParitySel::Any, 16),
    row(
        CaseId::I,
        RSel::Exactly(1),
        ParitySel::Only(Parity::Even),
        4,
    ),
    row(CaseId::I, RSel::Exactly(1), ParitySel::Only(Parity::Odd), 8),
    row(CaseId::I, RSel::AtLeast(2), ParitySel::Any, 4),
    row(CaseId::II, RSel::Exactly(0), ParitySel::Any, 16),
    row(
        CaseId::II,
        RSel::Exactly(1),
        ParitySel::Only(Parity::Even),
        4,
    ),
    row(
        CaseId::II,
        RSel::Exactly(1),
        ParitySel::Only(Parity::Odd),
        8,
    ),
    row(CaseId::II, RSel::AtLeast(2), ParitySel::Any, 4),
    // 7 divides the odd part (cases III and IV): counts shrink by 4.
    row(CaseId::III, RSel::Exactly(0), ParitySel::Any, 4),
    row(
        CaseId::III,
        RSel::Exactly(1),
        ParitySel::Only(Parity::Even),
        1,
    ),
    row(
        CaseId::III,
        RSel::Exactly(1),
        ParitySel::Only(Parity::Odd),
        2,
    ),
    row(CaseId::III, RSel::AtLeast(2), ParitySel::Any, 1),
    row(CaseId::IV, RSel::Exactly(0), ParitySel::Any, 4),
    row(
        CaseId::IV,
        RSel::Exactly(1),
        ParitySel::Only(Parity::Even),
        1,
    ),
    row(
        CaseId::IV,
        RSel::Exactly(1),
        ParitySel::Only(Parity::Odd),
        2,
    ),
    row(CaseId::IV, RSel::AtLeast(2), ParitySel::Any, 1),
];

/// Number of diffeomorphism classes in the homeomorphism class of the total
/// space, read off the decision table.
pub fn d_formula(b: BundleIndex) -> usize {
    let key = d_case(b);
    DECISION_TABLE
        .iter()
        .find(|r| {
            r.case == key.case
                && r.r.matches(key.two_adic_valuation)
                && r.parity.matches(key.m_parity)
        })
        .map(|r| r.d)
        .expect("decision table covers every (case, valuation, parity) cell")
}

/// Number of diffeomorphism classes in the homeomorphism class, counted
/// directly: enumerate all `m'` in one full period that index a total space
/// homeomorphic to `b`, and count the distinct `mu` values among them.
pub fn d_oracle(b: BundleIndex) -> usize {
    let window = 56 * b.n();
    let mut mus: BTreeSet<ModOneRational> = BTreeSet::new();
    for m in 0..window {
        let candidate = BundleIndex::new(m, b.n()).expect("n >= 1 by construction");
        if homeomorphic(candidate, b) {
            mus.insert(mu_invariant(candidate));
        }
    }
    mus.len()
}

/// Difference of the `mu` invariants of two total spaces, as an element of
/// `Q/Z`. For homeomorphic pairs this is always a multiple of 1/28.
pub fn mu_difference(a: BundleIndex, b: BundleIndex) -> ModOneRational {
    mu_invariant(a).sub(mu_invariant(b))
}

/// How many distinct squares there are modulo `k`.
pub fn count_squares_mod(k: i64) -> Result<usize, DomainError> {
    if k < 1 {
        return Err(DomainError::NonPositiveModulus(k));
    }
    let k = k as usize;
    let mut seen = vec![false; k];
    for i in 0..k {
        seen[(i * i) % k] = true;
    }
    Ok(seen.iter().filter(|&&s| s).count())
}

/// How many distinct values `i * (i + 1)` takes modulo `k`.
pub fn count_consecutive_products_mod(k: i64) -> Result<usize, DomainError> {
    if k < 1 {
        return Err(DomainError::NonPositiveModulus(k));
    }
    let k = k as usize;
    let mut seen = vec![false; k];
    for i in 0..k {
        seen[(i * (i + 1)) % k] = true;
    }
    Ok(seen.iter().filter(|&&s| s).count())
}

/// The part of the topological structure set realized by bundle indices over
/// the same base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BundleSubset {
    /// A cyclic group of the given order.
    Cyclic { order: i64 },
    /// Euler numbers 1, 2, and 4, where the generic description breaks down;
    /// reported by the number of homeomorphism classes instead.
    SpecialCase { homeomorphism_classes: usize },
}

/// Structure-set data for one Euler number: the order of the full
/// topological structure set of the homotopy type, and the subset realized
/// by bundles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureSetReport {
    pub n: i64,
    /// Order of the full topological structure set; equals the Euler number.
    pub full_order: i64,
    pub bundle_subset: BundleSubset,
}

/// Computes the structure-set report for an Euler number. Writing
/// `n = 2^r * a` with `a` odd, the bundle subset is cyclic of order
/// `2^(r-2) * a` when `r >= 3` and of order `n` when `r < 3` and `a > 1`;
/// for `n` in `{1, 2, 4}` it falls back to the homeomorphism-class count.
pub fn structure_set_report(n: i64) -> Result<StructureSetReport, DomainError> {
    let probe = BundleIndex::new(0, n)?;
    let f = probe.two_factorization();
    let bundle_subset = if f.exponent >= 3 {
        BundleSubset::Cyclic {
            order: (1i64 << (f.exponent - 2)) * f.odd_part,
        }
    } else if f.odd_part > 1 {
        BundleSubset::Cyclic { order: n }
    } else {
        let partition =
            crate::classify::enumerate_classes(n, EquivalenceLevel::Homeomorphic, None)?;
        BundleSubset::SpecialCase {
            homeomorphism_classes: partition.classes.len(),
        }
    };
    Ok(StructureSetReport {
        n,
        full_order: n,
        bundle_subset,
    })
}
