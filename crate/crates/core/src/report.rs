//! Invariant reports and the Whitehead-double family table.

use serde::Serialize;
use thiserror::Error;

use crate::classical::{facts_of, KnotFacts};
use crate::fog::{fog_of, FogResult};
use crate::knotlang::{validate, KnotExpr, TriState, Warning};

/// Everything the engines say about one expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub expression: String,
    pub facts: KnotFacts,
    pub fog: FogResult,
    pub warnings: Vec<Warning>,
}

impl Report {
    pub fn evaluate(e: &KnotExpr) -> Self {
        Report {
            expression: e.render(),
            facts: facts_of(e),
            fog: fog_of(e),
            warnings: validate(e),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let f = &self.facts;
        let alexander = f
            .alexander
            .as_ref()
            .map_or_else(|| "unknown".to_string(), |p| p.canonical().to_string());
        let mut rows = vec![
            vec!["expression".into(), self.expression.clone()],
            vec!["genus".into(), f.genus.to_string()],
            vec!["alexander".into(), alexander],
            vec!["slice".into(), f.slice.to_string()],
            vec!["in_R".into(), f.in_r.to_string()],
            vec!["trivial".into(), f.trivial.to_string()],
            vec!["g1".into(), self.fog.interval.to_string()],
        ];
        for rec in &self.fog.provenance {
            let bound = match rec.bound {
                crate::fog::Bound::Lo => "g1 lo",
                crate::fog::Bound::Hi => "g1 hi",
            };
            rows.push(vec![bound.into(), format!("{} ({}: {})", rec.value, rec.rule, rec.anchor)]);
        }
        for w in &self.warnings {
            rows.push(vec!["warning".into(), format!("{}: {}", w.node, w.message)]);
        }
        format_table(&["field", "value"], &rows)
    }
}

/// Space-padded columns, header first, one row per line.
pub fn format_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let mut line = String::new();
        for (i, (cell, w)) in row.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat(' ').take(w - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub const FAMILY_MAX: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyTableError {
    #[error("family table needs 1 <= n <= {FAMILY_MAX}, got {0}")]
    Usage(i64),
    #[error("self-check failed for wh0(kfam({n})): {what}")]
    Violation { n: u32, what: String },
}

/// One row per `wh0(kfam(n))`, `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub n: u32,
    pub knot: String,
    pub genus: String,
    pub alexander: String,
    pub slice: TriState,
    pub g1_lo: u64,
    pub g1_hi: Option<u64>,
}

/// Evaluate the Whitehead doubles of the pretzel family and check that
/// they share genus one, trivial Alexander polynomial and sliceness while
/// having pairwise distinct first-order genus.
pub fn family_rows(n_max: i64) -> Result<Vec<FamilyRow>, FamilyTableError> {
    if !(1..=FAMILY_MAX as i64).contains(&n_max) {
        return Err(FamilyTableError::Usage(n_max));
    }
    let mut rows: Vec<FamilyRow> = Vec::new();
    for n in 1..=n_max as u32 {
        let e = KnotExpr::wh0(KnotExpr::Kfam(n));
        let facts = facts_of(&e);
        let fog = fog_of(&e);
        let violation = |what: String| FamilyTableError::Violation { n, what };
        if facts.genus.as_point() != Some(1) {
            return Err(violation(format!("genus {}", facts.genus)));
        }
        let alex = facts.alexander.as_ref().map(|p| p.canonical());
        if !alex.as_ref().is_some_and(|p| p.is_one()) {
            return Err(violation("Alexander polynomial is not 1".into()));
        }
        if !facts.slice.is_yes() {
            return Err(violation(format!("slice = {}", facts.slice)));
        }
        let Some(g1) = fog.interval.as_point() else {
            return Err(violation(format!("g1 not exact: {}", fog.interval)));
        };
        if let Some(prev) = rows.iter().find(|r| r.g1_lo == g1) {
            return Err(violation(format!("g1 = {g1} repeats row n = {}", prev.n)));
        }
        rows.push(FamilyRow {
            n,
            knot: e.render(),
            genus: facts.genus.to_string(),
            alexander: alex.unwrap().to_string(),
            slice: facts.slice,
            g1_lo: fog.interval.lo,
            g1_hi: fog.interval.hi,
        });
    }
    Ok(rows)
}

pub fn family_table(n_max: i64) -> Result<String, FamilyTableError> {
    let rows = family_rows(n_max)?;
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.knot.clone(),
                r.genus.clone(),
                r.alexander.clone(),
                r.slice.to_string(),
                r.g1_lo.to_string(),
                r.g1_hi.map_or_else(|| "inf".into(), |h| h.to_string()),
            ]
        })
        .collect();
    Ok(format_table(&["knot", "g", "alexander", "slice", "g1_lo", "g1_hi"], &cells))
}
