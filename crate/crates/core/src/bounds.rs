//! Lower bounds for `h^{2,0}` in terms of `q` and `d`.
//!
//! If every nonzero element of `ker ψ_2` has rank `> 2r`, then
//! `h^{2,0} >= 2rq - C(2r+1, 2)` for `1 <= r <= min(⌊q/2⌋, d - 1)`.
//! Maximizing over `r` gives `C(q, 2)` when `q <= 2d - 1` and
//! `2(d-1)q - C(2d-1, 2)` otherwise.

use std::fmt;

use crate::basis::binomial;
use crate::error::{Error, Result};

/// `2rq - C(2r+1, 2)`, which can be negative only outside the admissible
/// range.
pub fn per_r_bound(q: usize, r: usize) -> i64 {
    2 * (r * q) as i64 - binomial(2 * r + 1, 2) as i64
}

/// Largest `r` in the table, `min(⌊q/2⌋, d - 1)`.
pub fn r_max(q: usize, d: usize) -> usize {
    (q / 2).min(d.saturating_sub(1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTable {
    pub q: usize,
    pub d: usize,
    /// `(r, 2rq - C(2r+1, 2))` for `r = 1..=r_max`.
    pub rows: Vec<(usize, i64)>,
    /// The closed-form value.
    pub value: i64,
    /// First `r` attaining the maximum; `None` for an empty table.
    pub argmax: Option<usize>,
}

fn check_qd(q: usize, d: usize) -> Result<()> {
    if q < 1 || d < 2 {
        return Err(Error::OutOfRange {
            what: "bound parameters",
            detail: format!("need q >= 1 and d >= 2, got q={q}, d={d}"),
        });
    }
    Ok(())
}

/// Closed form together with the per-`r` table. The maximum of an empty
/// table (only for `q = 1`) is taken to be 0, which is also `C(1, 2)`.
pub fn bound_rhs(q: usize, d: usize) -> Result<BoundTable> {
    check_qd(q, d)?;
    let value =
        if q < 2 * d { binomial(q, 2) as i64 } else { 2 * ((d - 1) * q) as i64 - binomial(2 * d - 1, 2) as i64 };
    let rows: Vec<(usize, i64)> = (1..=r_max(q, d)).map(|r| (r, per_r_bound(q, r))).collect();
    let max = rows.iter().map(|&(_, b)| b).max().unwrap_or(0);
    if max != value {
        return Err(Error::Internal(format!(
            "closed form {value} differs from the table maximum {max} at q={q}, d={d}"
        )));
    }
    let argmax = rows.iter().find(|&&(_, b)| b == max).map(|&(r, _)| r);
    Ok(BoundTable { q, d, rows, value, argmax })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

impl Verdict {
    fn of(applicable: bool, h20: usize, bound: i64) -> Self {
        match (applicable, h20 as i64 >= bound) {
            (false, _) => Verdict::NotApplicable,
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::Violated,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub r: usize,
    pub bound: i64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub q: usize,
    pub d: usize,
    pub h20: usize,
    /// Largest `k` with the min-rank hypothesis `rank > 2k` certified,
    /// capped at `⌊q/2⌋`.
    pub admissible_k: usize,
    pub rows: Vec<BoundRow>,
    /// Max over admissible rows, with its `r`.
    pub aggregate: Option<(usize, i64)>,
    pub aggregate_verdict: Verdict,
    /// The closed form; applicable only when every row is admissible.
    pub closed_form: i64,
    pub closed_form_verdict: Verdict,
}

impl BoundReport {
    pub fn any_violated(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == Verdict::Violated)
            || self.aggregate_verdict == Verdict::Violated
            || self.closed_form_verdict == Verdict::Violated
    }
}

/// `k* = ⌊(m - 1) / 2⌋` for a minimal rank `m`, and `⌊q/2⌋` when
/// `ker ψ_2 = 0` (`m = None`).
pub fn admissible_k(q: usize, min_rank: Option<usize>) -> usize {
    match min_rank {
        None => q / 2,
        Some(m) => (m.saturating_sub(1) / 2).min(q / 2),
    }
}

pub fn evaluate(q: usize, d: usize, h20: usize, admissible_k: usize) -> Result<BoundReport> {
    let table = bound_rhs(q, d)?;
    let rows: Vec<BoundRow> = table
        .rows
        .iter()
        .map(|&(r, bound)| BoundRow { r, bound, verdict: Verdict::of(r <= admissible_k, h20, bound) })
        .collect();
    let aggregate = rows.iter().filter(|row| row.verdict != Verdict::NotApplicable).fold(
        None,
        |best: Option<(usize, i64)>, row| match best {
            Some((_, b)) if b >= row.bound => best,
            _ => Some((row.r, row.bound)),
        },
    );
    let aggregate_verdict = match aggregate {
        Some((_, b)) => Verdict::of(true, h20, b),
        None => Verdict::NotApplicable,
    };
    let all_admissible = rows.iter().all(|row| row.verdict != Verdict::NotApplicable);
    Ok(BoundReport {
        q,
        d,
        h20,
        admissible_k,
        rows,
        aggregate,
        aggregate_verdict,
        closed_form: table.value,
        closed_form_verdict: Verdict::of(all_admissible, h20, table.value),
    })
}
