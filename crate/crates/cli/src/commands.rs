//! Typed result payloads for each subcommand, plus the builder functions
//! that compute them from parsed inputs.
//!
//! The builders are the single source of truth for what each command
//! reports: the executable calls them to produce output, and the
//! integration tests call them again on the echoed `inputs` of a parsed
//! envelope to check that the published `result` is reproducible.

use serde::Serialize;

use s3bundle::{
    classify_pair, d_case, d_formula, d_oracle, enumerate_classes, from_milnor,
    homotopy_equivalent, invariant_record, mu_invariant, p1_bundle, p1_congruent, to_milnor,
    BundleIndex, ClassPartition, DCase, EquivalenceLevel, InvariantRecord, MilnorIndex,
    ModOneRational,
};

use crate::error::CliError;

pub const NOTES_INVARIANTS: &[&str] = &[
    "h4_order: the fourth integral cohomology of the total space is cyclic of this order",
    "euler: Euler number of the bundle; equals h4_order",
    "p1_residues: the first Pontrjagin class of the total space is +/-4m in Z/n; the set {4m mod n, -4m mod n} is listed",
    "mu: Eells-Kuiper invariant ((n + 2m)^2 - 1)/224 mod 1, reported as an exact num/den pair",
    "p1_bundle: magnitude of the bundle's own first Pontrjagin number 2(2m + n)",
    "milnor: alternative indexing with k = n + m, l = -m",
];

pub const NOTES_COMPARE: &[&str] = &[
    "level: strongest of the three nested relations that holds for the pair",
    "homotopy_congruence: same Euler number and m = +/-m' (mod gcd(n, 12)), each sign tested separately; null when the Euler numbers differ",
    "p1_congruence: 4m = +/-4m' (mod n), equivalent to equal Pontrjagin residue sets; null when the Euler numbers differ",
    "mu_equal: equality of the exact Eells-Kuiper invariants; decides diffeomorphism among homeomorphic pairs",
];

pub const NOTES_COUNT: &[&str] = &[
    "d: number of diffeomorphism classes in the homeomorphism class of the indexed total space",
    "case: decision-table cell, keyed by divisibility of the odd part of n by 3 and 7 (cases I-IV), the 2-adic valuation of n, and the parity of m",
    "oracle: independent direct count, the number of distinct Eells-Kuiper values among all indices homeomorphic to (m, n) within one period of 56n",
];

pub const NOTES_CLASSES: &[&str] = &[
    "classes: indices 0 <= m < window grouped by the selected relation; each class is listed by its smallest member",
    "window: a positive multiple of lcm(56, n) — the Eells-Kuiper invariant has period 56 in m and every congruence modulus divides n",
];

pub const NOTES_CONVERT: &[&str] = &[
    "milnor indexing: k = n + m and l = -m; inversely m = -l and n = k + l (requires k + l >= 1)",
];

pub const NOTES_MODCOUNT_SQUARES: &[&str] = &["count: number of distinct values of q^2 modulo k"];

pub const NOTES_MODCOUNT_PRODUCTS: &[&str] =
    &["count: number of distinct values of q(q + 1) modulo k"];

/// Payload of `invariants`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsResult {
    #[serde(flatten)]
    pub record: InvariantRecord,
    pub p1_bundle: i64,
    pub milnor: MilnorIndex,
}

pub fn invariants_result(m: i64, n: i64) -> Result<InvariantsResult, CliError> {
    let idx = BundleIndex::new(m, n)?;
    Ok(InvariantsResult {
        record: invariant_record(idx),
        p1_bundle: p1_bundle(idx),
        milnor: to_milnor(idx),
    })
}

/// Payload of `compare`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareResult {
    pub level: EquivalenceLevel,
    pub same_euler_number: bool,
    /// `None` when the Euler numbers differ (the congruence has no modulus).
    pub homotopy_congruence: Option<bool>,
    /// `None` when the Euler numbers differ.
    pub p1_congruence: Option<bool>,
    pub mu_equal: bool,
    pub mu_left: ModOneRational,
    pub mu_right: ModOneRational,
}

pub fn compare_result(
    m: i64,
    n: i64,
    m_prime: i64,
    n_prime: i64,
) -> Result<CompareResult, CliError> {
    let left = BundleIndex::new(m, n)?;
    let right = BundleIndex::new(m_prime, n_prime)?;
    let same = n == n_prime;
    let (mu_left, mu_right) = (mu_invariant(left), mu_invariant(right));
    Ok(CompareResult {
        level: classify_pair(left, right),
        same_euler_number: same,
        homotopy_congruence: same.then(|| homotopy_equivalent(left, right)),
        p1_congruence: same.then(|| p1_congruent(left, right)),
        mu_equal: mu_left == mu_right,
        mu_left,
        mu_right,
    })
}

/// Oracle cross-check attached to `count --oracle`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub d_oracle: usize,
    pub agree: bool,
}

/// Payload of `count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountResult {
    pub d: usize,
    pub case: DCase,
    pub oracle: Option<OracleCheck>,
}

pub fn count_result(m: i64, n: i64, oracle: bool) -> Result<CountResult, CliError> {
    let idx = BundleIndex::new(m, n)?;
    let d = d_formula(idx);
    let oracle = if oracle {
        let direct = d_oracle(idx);
        if direct != d {
            return Err(CliError::Consistency(format!(
                "decision table gives d = {d} but the direct count gives {direct} for ({m}, {n})"
            )));
        }
        Some(OracleCheck {
            d_oracle: direct,
            agree: true,
        })
    } else {
        None
    };
    Ok(CountResult {
        d,
        case: d_case(idx),
        oracle,
    })
}

/// Payload of `classes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassesResult {
    #[serde(flatten)]
    pub partition: ClassPartition,
    pub class_count: usize,
}

pub fn classes_result(
    n: i64,
    level: EquivalenceLevel,
    window: Option<i64>,
) -> Result<ClassesResult, CliError> {
    let partition = enumerate_classes(n, level, window)?;
    let class_count = partition.classes.len();
    Ok(ClassesResult {
        partition,
        class_count,
    })
}

pub fn to_milnor_result(m: i64, n: i64) -> Result<MilnorIndex, CliError> {
    Ok(to_milnor(BundleIndex::new(m, n)?))
}

/// Payload of `convert from-milnor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FromMilnorResult {
    pub m: i64,
    pub n: i64,
}

pub fn from_milnor_result(k: i64, l: i64) -> Result<FromMilnorResult, CliError> {
    let idx = from_milnor(MilnorIndex { k, l })?;
    Ok(FromMilnorResult {
        m: idx.m(),
        n: idx.n(),
    })
}

/// Payload of `modcount`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModcountResult {
    pub kind: &'static str,
    pub modulus: i64,
    pub count: usize,
}

pub fn modcount_squares(k: i64) -> Result<ModcountResult, CliError> {
    Ok(ModcountResult {
        kind: "squares",
        modulus: k,
        count: s3bundle::count_squares_mod(k)?,
    })
}

pub fn modcount_products(k: i64) -> Result<ModcountResult, CliError> {
    Ok(ModcountResult {
        kind: "products",
        modulus: k,
        count: s3bundle::count_consecutive_products_mod(k)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_builder_examples() {
        let r = invariants_result(1, 1).unwrap();
        assert_eq!(r.record.mu, ModOneRational::new(1, 28).unwrap());
        assert_eq!(r.p1_bundle, 6);
        assert_eq!(r.milnor, MilnorIndex { k: 2, l: -1 });
        assert_eq!(
            invariants_result(1, 0),
            Err(CliError::Input("n must be >= 1 (got 0)".into()))
        );
    }

    #[test]
    fn compare_builder_examples() {
        let r = compare_result(0, 1, 1, 1).unwrap();
        assert_eq!(r.level, EquivalenceLevel::Homeomorphic);
        assert_eq!(r.homotopy_congruence, Some(true));
        assert_eq!(r.p1_congruence, Some(true));
        assert!(!r.mu_equal);

        let r = compare_result(1, 12, 2, 12).unwrap();
        assert_eq!(r.level, EquivalenceLevel::Distinct);
        assert_eq!(r.homotopy_congruence, Some(false));

        let r = compare_result(3, 5, 3, 5).unwrap();
        assert_eq!(r.level, EquivalenceLevel::Diffeomorphic);
        assert!(r.mu_equal);

        // Different Euler numbers: congruences have no modulus to live in.
        let r = compare_result(0, 5, 0, 7).unwrap();
        assert_eq!(r.level, EquivalenceLevel::Distinct);
        assert!(!r.same_euler_number);
        assert_eq!(r.homotopy_congruence, None);
        assert_eq!(r.p1_congruence, None);
    }

    #[test]
    fn count_builder_reports_the_fired_cell() {
        let r = count_result(0, 12, true).unwrap();
        assert_eq!(r.d, 4);
        assert_eq!(format!("{}", r.case.case), "II");
        assert_eq!(r.case.two_adic_valuation, 2);
        assert_eq!(
            r.oracle,
            Some(OracleCheck {
                d_oracle: 4,
                agree: true
            })
        );
        let without = count_result(0, 12, false).unwrap();
        assert_eq!(without.oracle, None);
    }

    #[test]
    fn classes_builder_counts_match_partition() {
        let r = classes_result(1, EquivalenceLevel::Diffeomorphic, None).unwrap();
        assert_eq!(r.class_count, 16);
        assert_eq!(r.partition.classes.len(), 16);
        assert!(matches!(
            classes_result(3, EquivalenceLevel::Homeomorphic, Some(100)),
            Err(CliError::Input(msg)) if msg.contains("multiple of lcm(56, n)")
        ));
    }

    #[test]
    fn conversion_builders() {
        assert_eq!(to_milnor_result(1, 1).unwrap(), MilnorIndex { k: 2, l: -1 });
        assert_eq!(
            from_milnor_result(2, -1).unwrap(),
            FromMilnorResult { m: 1, n: 1 }
        );
        assert!(matches!(
            from_milnor_result(1, -1),
            Err(CliError::Input(msg)) if msg.contains("k + l must be >= 1")
        ));
    }

    #[test]
    fn modcount_builders() {
        assert_eq!(modcount_squares(7).unwrap().count, 4);
        assert_eq!(modcount_products(56).unwrap().count, 16);
        assert!(matches!(
            modcount_squares(0),
            Err(CliError::Input(msg)) if msg.contains("modulus")
        ));
    }
}
