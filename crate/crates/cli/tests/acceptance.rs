//! Acceptance gate: one test per release criterion, each ending in a
//! single summary line. Run with
//! `cargo test -p s3bundle-cli --test acceptance -- --nocapture`
//! to see the lines; the test names alone give one pass/fail line per
//! criterion in the standard harness output.

use std::collections::BTreeSet;
use std::process::Command;

use rayon::prelude::*;
use serde_json::Value;

use s3bundle::{
    classify_pair, count_consecutive_products_mod, count_squares_mod, d_formula, d_oracle,
    diffeomorphic, enumerate_classes, from_milnor, homeomorphic, homotopy_equivalent, mod_one,
    mu_difference, structure_set_report, to_milnor, BundleIndex, BundleSubset, EquivalenceLevel,
    ModOneRational,
};

fn b(m: i64, n: i64) -> BundleIndex {
    BundleIndex::new(m, n).unwrap()
}

fn class_count_via_binary(n: &str, level: &str) -> u64 {
    let out = Command::new(env!("CARGO_BIN_EXE_s3bundle"))
        .args(["classes", n, "--level", level, "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "classes {n} --level {level} failed");
    let env: Value = serde_json::from_slice(&out.stdout).expect("envelope parses");
    env["result"]["class_count"]
        .as_u64()
        .expect("integer class count")
}

/// Sixteen smooth classes, one topological class, over Euler number 1.
#[test]
fn criterion_1_sphere_counts_over_euler_number_one() {
    let diffeo = class_count_via_binary("1", "diffeo");
    let homeo = class_count_via_binary("1", "homeo");
    assert_eq!(diffeo, 16);
    assert_eq!(homeo, 1);
    println!(
        "criterion 1 pass: `classes 1` finds {diffeo} diffeomorphism classes and {homeo} homeomorphism class"
    );
}

/// The decision table agrees with the independent direct count on the full
/// survey range.
#[test]
fn criterion_2_decision_table_agrees_with_direct_count() {
    let checked: usize = (1..=200i64)
        .into_par_iter()
        .map(|n| {
            for m in [0, 1, -1, -2] {
                let idx = b(m, n);
                assert_eq!(
                    d_formula(idx),
                    d_oracle(idx),
                    "decision table vs direct count at ({m}, {n})"
                );
            }
            4
        })
        .sum();
    assert_eq!(checked, 800);
    println!("criterion 2 pass: d agrees with the direct count on all {checked} survey points");
}

/// The modular counting primitives return the pinned values.
#[test]
fn criterion_3_modular_counting_values() {
    let squares: Vec<usize> = [7, 14, 2]
        .iter()
        .map(|&k| count_squares_mod(k).unwrap())
        .collect();
    assert_eq!(squares, [4, 8, 2]);
    let products: Vec<usize> = [56, 14, 8, 2]
        .iter()
        .map(|&k| count_consecutive_products_mod(k).unwrap())
        .collect();
    assert_eq!(products, [16, 4, 4, 1]);
    println!(
        "criterion 3 pass: squares mod 7/14/2 = {squares:?}, products mod 56/14/8/2 = {products:?}"
    );
}

/// For Euler numbers 2 and 4 the homeomorphism partition collapses onto the
/// homotopy partition. (The class counts are 2 and 3; over n = 4 the
/// homotopy classes are {0}, {1, 3}, {2} mod 4.)
#[test]
fn criterion_4_homeomorphism_collapse_for_euler_numbers_2_and_4() {
    let mut counts = Vec::new();
    for n in [2i64, 4] {
        let homotopy = enumerate_classes(n, EquivalenceLevel::HomotopyEquivalent, None).unwrap();
        let homeo = enumerate_classes(n, EquivalenceLevel::Homeomorphic, None).unwrap();
        assert_eq!(
            homotopy.classes, homeo.classes,
            "homeomorphism refines homotopy over n = {n}"
        );
        counts.push(homeo.classes.len());
    }
    assert_eq!(counts, [2, 3]);
    // The n = 4 partition really has three classes: residues 0, {1, 3}, 2.
    let p = enumerate_classes(4, EquivalenceLevel::Homeomorphic, None).unwrap();
    let reps: Vec<i64> = p.classes.iter().map(|c| c.representative).collect();
    assert_eq!(reps, [0, 1, 2]);
    assert!(p.classes[1]
        .members
        .iter()
        .all(|m| m % 4 == 1 || m % 4 == 3));
    println!(
        "criterion 4 pass: homeomorphism = homotopy partition for n = 2 ({} classes) and n = 4 ({} classes)",
        counts[0], counts[1]
    );
}

/// Reflexivity, symmetry, transitivity, and nesting, exhaustively over one
/// full period for every Euler number up to 48.
///
/// Transitivity is verified without enumerating triples: for each level,
/// assign every index the smallest window member related to it, and check
/// that relation membership coincides with equality of assignments on every
/// ordered pair. A relation that agrees everywhere with the kernel of a
/// function is an equivalence relation, so transitivity follows for all
/// triples.
#[test]
fn criterion_5_equivalence_relation_suite() {
    use EquivalenceLevel::*;
    let pairs_checked: u64 = (1..=48i64)
        .into_par_iter()
        .map(|n| {
            let w = (56 * n) as usize;
            let idx: Vec<BundleIndex> = (0..w as i64).map(|m| b(m, n)).collect();
            let mut levels = vec![Distinct; w * w];
            for x in 0..w {
                for y in 0..w {
                    let level = classify_pair(idx[x], idx[y]);
                    // The level must agree with each predicate, and the
                    // predicates must nest.
                    let h1 = homotopy_equivalent(idx[x], idx[y]);
                    let h2 = homeomorphic(idx[x], idx[y]);
                    let h3 = diffeomorphic(idx[x], idx[y]);
                    assert_eq!(level >= HomotopyEquivalent, h1, "({x}, {y}) over n = {n}");
                    assert_eq!(level >= Homeomorphic, h2, "({x}, {y}) over n = {n}");
                    assert_eq!(level >= Diffeomorphic, h3, "({x}, {y}) over n = {n}");
                    assert!(
                        h3 <= h2 && h2 <= h1,
                        "nesting fails at ({x}, {y}) over n = {n}"
                    );
                    levels[x * w + y] = level;
                }
            }
            for x in 0..w {
                assert_eq!(
                    levels[x * w + x],
                    Diffeomorphic,
                    "reflexivity at {x}, n = {n}"
                );
                for y in 0..x {
                    assert_eq!(
                        levels[x * w + y],
                        levels[y * w + x],
                        "symmetry at ({x}, {y}), n = {n}"
                    );
                }
            }
            for level in [HomotopyEquivalent, Homeomorphic, Diffeomorphic] {
                let class_of: Vec<usize> = (0..w)
                    .map(|x| (0..=x).find(|&y| levels[y * w + x] >= level).unwrap())
                    .collect();
                for x in 0..w {
                    for y in 0..w {
                        assert_eq!(
                            levels[x * w + y] >= level,
                            class_of[x] == class_of[y],
                            "kernel agreement fails at ({x}, {y}), level {level:?}, n = {n}"
                        );
                    }
                }
            }
            (w * w) as u64
        })
        .sum();
    println!(
        "criterion 5 pass: equivalence laws verified on {pairs_checked} ordered pairs across n = 1..=48"
    );
}

/// The specialized closed forms of the mu difference, their substitutions,
/// their q-translations, and the equality of the two value sets.
///
/// Writing n = 2^r * a with a odd, the substituted index is
/// m' = F(r) * q * a +/- m with F = 1, 2, 4, 4, 2^(r-2) for
/// r = 0, 1, 2, 3, >= 4. Each closed form below must equal
/// mu(m, n) - mu(m', n) exactly, for every a <= 21, r <= 6, and q over a
/// full period.
#[test]
fn criterion_6_mu_difference_closed_forms() {
    fn pow2(e: u32) -> i64 {
        1i64 << e
    }
    fn subst_factor(r: u32) -> i64 {
        match r {
            0 => 1,
            1 => 2,
            2 | 3 => 4,
            _ => pow2(r - 2),
        }
    }
    fn plus_form(a: i64, r: u32, q: i64, m: i64) -> ModOneRational {
        let (num, den) = match r {
            0 => (-a * q * (2 * m + a * q + a), 56),
            1 => (-a * q * (m + a * q + a), 14),
            2 => (-a * q * (m + 2 * a * q + 2 * a), 7),
            3 => (-a * q * (m + 2 * a * q + 4 * a), 7),
            _ => (
                -pow2(r - 4) * a * q * (m + pow2(r - 1) * a + pow2(r - 3) * a * q),
                7,
            ),
        };
        mod_one(num, den).unwrap()
    }
    fn minus_form(a: i64, r: u32, q: i64, m: i64) -> ModOneRational {
        let (num, den) = match r {
            0 => (a * (1 + q) * (2 * m - a * q), 56),
            1 => (a * (1 + q) * (m - a * q), 14),
            2 => (a * (1 + q) * (m - 2 * a * q), 7),
            3 => (a * (2 + q) * (m - 2 * a * q), 7),
            _ => (pow2(r - 4) * a * (4 + q) * (m - pow2(r - 3) * a * q), 7),
        };
        mod_one(num, den).unwrap()
    }

    let mut checks: u64 = 0;
    for a in (1..=21i64).step_by(2) {
        for r in 0..=6u32 {
            let n = pow2(r) * a;
            let f = subst_factor(r);
            // The q-translation that exchanges the two sign branches.
            let t = match r {
                0..=2 => 1,
                3 => 2,
                _ => 4,
            };
            for m in [-3i64, -1, 0, 1, 2, 6] {
                let mut plus_values = BTreeSet::new();
                let mut minus_values = BTreeSet::new();
                for q in 0..56i64 {
                    let plus = plus_form(a, r, q, m);
                    let m_plus = f * q * a + m;
                    assert_eq!(
                        plus,
                        mu_difference(b(m, n), b(m_plus, n)),
                        "plus form at a={a} r={r} q={q} m={m}"
                    );
                    let minus = minus_form(a, r, q, m);
                    let m_minus = f * q * a - m;
                    assert_eq!(
                        minus,
                        mu_difference(b(m, n), b(m_minus, n)),
                        "minus form at a={a} r={r} q={q} m={m}"
                    );
                    // Translating q by q -> -(t + q) carries one branch to
                    // the other.
                    assert_eq!(
                        plus_form(a, r, -(t + q), m),
                        minus,
                        "translation at a={a} r={r} q={q} m={m}"
                    );
                    plus_values.insert(plus);
                    minus_values.insert(minus);
                    checks += 3;
                }
                // Both sign branches realize the same set of differences.
                assert_eq!(
                    plus_values, minus_values,
                    "value sets differ at a={a} r={r} m={m}"
                );
                checks += 1;
            }
        }
    }
    println!("criterion 6 pass: {checks} closed-form identities verified");
}

/// Structure-set sizes across the survey range, with the special-case
/// marker exactly on Euler numbers 1, 2, 4.
#[test]
fn criterion_7_structure_set_sizes() {
    let mut special = Vec::new();
    for n in 1..=200i64 {
        let report = structure_set_report(n).unwrap();
        assert_eq!(report.full_order, n, "full structure set order at n = {n}");
        let f = b(0, n).two_factorization();
        match report.bundle_subset {
            BundleSubset::Cyclic { order } => {
                let expected = if f.exponent >= 3 {
                    (1i64 << (f.exponent - 2)) * f.odd_part
                } else {
                    assert!(f.odd_part > 1, "generic cyclic case requires odd part > 1");
                    n
                };
                assert_eq!(order, expected, "bundle subset order at n = {n}");
            }
            BundleSubset::SpecialCase { .. } => special.push(n),
        }
    }
    assert_eq!(special, [1, 2, 4]);
    println!(
        "criterion 7 pass: structure sets verified for n = 1..=200; special cases exactly {special:?}"
    );
}

/// The two index systems convert back and forth without loss.
#[test]
fn criterion_8_milnor_round_trip() {
    let mut count = 0u64;
    for n in 1..=100i64 {
        for m in -100..=100i64 {
            let idx = b(m, n);
            let milnor = to_milnor(idx);
            assert_eq!(milnor.k + milnor.l, n, "k + l = n at ({m}, {n})");
            assert_eq!(milnor.l, -m, "l = -m at ({m}, {n})");
            assert_eq!(
                from_milnor(milnor).unwrap(),
                idx,
                "round trip at ({m}, {n})"
            );
            count += 1;
        }
    }
    assert_eq!(count, 20100);
    println!("criterion 8 pass: {count} Milnor index round trips");
}
