//! Plain-text rendering of command results.

use s3bundle::{EquivalenceLevel, ModOneRational};

use crate::commands::{
    ClassesResult, CompareResult, CountResult, FromMilnorResult, InvariantsResult, ModcountResult,
};
use s3bundle::MilnorIndex;

/// English phrase for a level, used in prose output.
pub fn level_phrase(level: EquivalenceLevel) -> &'static str {
    match level {
        EquivalenceLevel::Distinct => "distinct",
        EquivalenceLevel::HomotopyEquivalent => "homotopy equivalent",
        EquivalenceLevel::Homeomorphic => "homeomorphic",
        EquivalenceLevel::Diffeomorphic => "diffeomorphic",
    }
}

fn residues(values: &[i64]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

pub fn invariants_text(m: i64, n: i64, r: &InvariantsResult) -> String {
    let mut out = format!(
        "total space M({m}, {n})\n  h4 order:      {}\n  euler number:  {}\n  p1 residues:   {} (mod {n})\n  p1 of bundle:  {}\n  mu invariant:  {}\n  milnor (k, l): ({}, {})",
        r.record.h4_order,
        r.record.euler,
        residues(&r.record.p1_residues),
        r.p1_bundle,
        r.record.mu,
        r.milnor.k,
        r.milnor.l,
    );
    if n == 1 {
        out.push_str(
            "\nnote: n = 1, so the total space is a homotopy 7-sphere, homeomorphic to the standard S^7",
        );
        if r.record.mu == ModOneRational::ZERO {
            out.push_str("\nnote: mu = 0 — the diffeomorphism class of the standard smooth S^7");
        }
    }
    out
}

fn congruence_line(holds: Option<bool>) -> &'static str {
    match holds {
        Some(true) => "holds",
        Some(false) => "fails",
        None => "not applicable (different Euler numbers)",
    }
}

pub fn compare_text(m: i64, n: i64, m_prime: i64, n_prime: i64, r: &CompareResult) -> String {
    format!(
        "M({m}, {n}) vs M({m_prime}, {n_prime})\n  same euler number:   {}\n  homotopy congruence (m = +/-m' mod gcd(n, 12)): {}\n  p1 congruence (4m = +/-4m' mod n):              {}\n  mu invariants:       {} vs {} — {}\nverdict: {}",
        if r.same_euler_number { "yes" } else { "no" },
        congruence_line(r.homotopy_congruence),
        congruence_line(r.p1_congruence),
        r.mu_left,
        r.mu_right,
        if r.mu_equal { "equal" } else { "differ" },
        level_phrase(r.level),
    )
}

pub fn count_text(m: i64, n: i64, r: &CountResult) -> String {
    let c = &r.case;
    let mut out = format!(
        "d({m}, {n}) = {}\n  case {}: odd part a = {} ({} by 3, {} by 7), r = {}, m {}",
        r.d,
        c.case,
        c.odd_part,
        if c.odd_part % 3 == 0 {
            "divisible"
        } else {
            "not divisible"
        },
        if c.odd_part % 7 == 0 {
            "divisible"
        } else {
            "not divisible"
        },
        c.two_adic_valuation,
        c.m_parity,
    );
    if let Some(oracle) = &r.oracle {
        out.push_str(&format!(
            "\n  direct count: {} — {}",
            oracle.d_oracle,
            if oracle.agree { "agrees" } else { "DISAGREES" }
        ));
    }
    out
}

pub fn classes_text(r: &ClassesResult) -> String {
    let p = &r.partition;
    let mut out = format!(
        "n = {}, level = {}, window = {}: {} classes",
        p.n,
        level_phrase(p.level),
        p.window,
        r.class_count,
    );
    for class in &p.classes {
        out.push_str(&format!(
            "\n  representative {}: {} members",
            class.representative,
            class.members.len()
        ));
    }
    out
}

pub fn to_milnor_text(m: i64, n: i64, r: &MilnorIndex) -> String {
    format!("M({m}, {n}) -> milnor (k, l) = ({}, {})", r.k, r.l)
}

pub fn from_milnor_text(k: i64, l: i64, r: &FromMilnorResult) -> String {
    format!("milnor (k, l) = ({k}, {l}) -> M({}, {})", r.m, r.n)
}

pub fn modcount_text(r: &ModcountResult) -> String {
    match r.kind {
        "squares" => format!("distinct squares modulo {}: {}", r.modulus, r.count),
        _ => format!(
            "distinct values of q(q + 1) modulo {}: {}",
            r.modulus, r.count
        ),
    }
}
