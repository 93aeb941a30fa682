//! The survey table: one row per Euler number and parity of `m`.
//!
//! Column layout (fixed so downstream diffs stay stable):
//! `n, r, a, m_parity, d_formula, d_oracle, homeo_classes, s_top_size,
//! s_hat_size_or_special`, where `n = 2^r * a` with `a` odd.

use serde::Serialize;
use serde_json::json;

use s3bundle::{
    d_formula, d_oracle, enumerate_classes, structure_set_report, BundleIndex, BundleSubset,
    EquivalenceLevel, Parity,
};

use crate::envelope::OutputEnvelope;
use crate::error::CliError;

pub const NOTES_TABLE: &[&str] = &[
    "one row per Euler number and parity of m; the even representative is m = 0, the odd one m = 1",
    "d_formula and d_oracle: decision-table and direct diffeomorphism-class counts; they must agree or the run aborts",
    "homeo_classes: number of homeomorphism classes among 0 <= m < 56n",
    "s_top_size: order of the full topological structure set of the homotopy type (equals n)",
    "s_hat_size_or_special: order of the bundle-realized subset, or the marker special_case for n in {1, 2, 4}",
];

pub const CSV_HEADER: &str =
    "n,r,a,m_parity,d_formula,d_oracle,homeo_classes,s_top_size,s_hat_size_or_special";

/// Last column: a cyclic-group order, or the marker for the three special
/// Euler numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SHatCell {
    Order(i64),
    Marker(&'static str),
}

impl SHatCell {
    fn as_csv(&self) -> String {
        match self {
            SHatCell::Order(o) => o.to_string(),
            SHatCell::Marker(m) => (*m).to_string(),
        }
    }
}

/// One row of the survey table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: i64,
    /// 2-adic valuation of `n`.
    pub r: u32,
    /// Odd part of `n`.
    pub a: i64,
    pub m_parity: Parity,
    pub d_formula: usize,
    pub d_oracle: usize,
    pub homeo_classes: usize,
    pub s_top_size: i64,
    pub s_hat_size_or_special: SHatCell,
}

impl TableRow {
    /// The representative `m` this row was computed from.
    pub fn representative_m(&self) -> i64 {
        match self.m_parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Computes the survey rows for `n_min <= n <= n_max`, two per `n` (even and
/// odd `m`), in ascending `(n, m)` order. A formula/direct-count mismatch
/// aborts with a consistency error rather than publishing a wrong row.
pub fn table_rows(n_min: i64, n_max: i64) -> Result<Vec<TableRow>, CliError> {
    if n_min < 1 || n_min > n_max {
        return Err(CliError::Input(format!(
            "table range requires 1 <= n_min <= n_max (got {n_min} and {n_max})"
        )));
    }
    let mut rows = Vec::with_capacity(2 * (n_max - n_min + 1) as usize);
    for n in n_min..=n_max {
        let factorization = BundleIndex::new(0, n)?.two_factorization();
        let homeo_classes = enumerate_classes(n, EquivalenceLevel::Homeomorphic, None)
            .map_err(CliError::from)?
            .classes
            .len();
        let report = structure_set_report(n)?;
        let s_hat = match report.bundle_subset {
            BundleSubset::Cyclic { order } => SHatCell::Order(order),
            BundleSubset::SpecialCase { .. } => SHatCell::Marker("special_case"),
        };
        for m in [0i64, 1] {
            let idx = BundleIndex::new(m, n)?;
            let formula = d_formula(idx);
            let direct = d_oracle(idx);
            if formula != direct {
                return Err(CliError::Consistency(format!(
                    "decision table gives d = {formula} but the direct count gives {direct} for ({m}, {n})"
                )));
            }
            rows.push(TableRow {
                n,
                r: factorization.exponent,
                a: factorization.odd_part,
                m_parity: s3bundle::Parity::of(m),
                d_formula: formula,
                d_oracle: direct,
                homeo_classes,
                s_top_size: report.full_order,
                s_hat_size_or_special: s_hat.clone(),
            });
        }
    }
    Ok(rows)
}

/// CSV with header row, comma separators, LF line endings, no trailing
/// newline (the caller appends one when writing).
pub fn rows_to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    for row in rows {
        out.push('\n');
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}",
            row.n,
            row.r,
            row.a,
            row.m_parity,
            row.d_formula,
            row.d_oracle,
            row.homeo_classes,
            row.s_top_size,
            row.s_hat_size_or_special.as_csv()
        ));
    }
    out
}

/// JSON lines: one output envelope per row, in row order.
pub fn rows_to_jsonl(rows: &[TableRow]) -> String {
    rows.iter()
        .map(|row| {
            OutputEnvelope::new(
                "table",
                json!({"n": row.n, "m": row.representative_m()}),
                serde_json::to_value(row).expect("row serialization cannot fail"),
                NOTES_TABLE,
            )
            .to_json_line()
        })
        .collect::<Vec<_>>()
        .join("\n")
}
