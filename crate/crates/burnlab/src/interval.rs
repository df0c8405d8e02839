//! Interval representations as checkable certificates. A model is a list
//! of closed intervals, one per vertex; it represents a graph when two
//! distinct vertices are adjacent exactly if their intervals intersect.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalModel {
    /// intervals[v] = (lo, hi) with lo <= hi.
    pub intervals: Vec<(i64, i64)>,
}

impl IntervalModel {
    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    /// One line per vertex: "v lo hi".
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, (lo, hi)) in self.intervals.iter().enumerate() {
            out.push_str(&format!("{v} {lo} {hi}\n"));
        }
        out
    }

    /// Parses the `to_text` format. Every vertex id 0..n-1 must appear
    /// exactly once; n is the number of non-blank lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut seen: Vec<(usize, (i64, i64), usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse_num = |tok: Option<&str>, what: &str| -> Result<i64> {
                tok.ok_or_else(|| Error::Parse { line: idx + 1, msg: format!("missing {what}") })?
                    .parse::<i64>()
                    .map_err(|_| Error::Parse { line: idx + 1, msg: format!("bad {what}") })
            };
            let v = parse_num(it.next(), "vertex id")?;
            let lo = parse_num(it.next(), "interval start")?;
            let hi = parse_num(it.next(), "interval end")?;
            if it.next().is_some() {
                return Err(Error::Parse { line: idx + 1, msg: "trailing content".into() });
            }
            if v < 0 || lo > hi {
                return Err(Error::Parse { line: idx + 1, msg: "empty interval or negative id".into() });
            }
            seen.push((v as usize, (lo, hi), idx + 1));
        }
        let n = seen.len();
        let mut intervals = vec![None; n];
        for (v, iv, line) in seen {
            if v >= n {
                return Err(Error::Parse { line, msg: format!("vertex {v} out of range for {n} lines") });
            }
            if intervals[v].replace(iv).is_some() {
                return Err(Error::Parse { line, msg: format!("vertex {v} listed twice") });
            }
        }
        Ok(IntervalModel { intervals: intervals.into_iter().map(|iv| iv.unwrap()).collect() })
    }
}

/// Checks that the model realizes g: intervals intersect exactly for
/// adjacent pairs. With `proper` also forbids containment between the
/// intervals of distinct vertices. Returns Ok(false) on any mismatch,
/// Err only when the sizes disagree.
pub fn verify_interval_model(g: &Graph, model: &IntervalModel, proper: bool) -> Result<bool> {
    if model.n() != g.n() {
        return Err(Error::ModelSizeMismatch { got: model.n(), want: g.n() });
    }
    for u in 0..g.n() {
        let (alo, ahi) = model.intervals[u];
        for v in u + 1..g.n() {
            let (blo, bhi) = model.intervals[v];
            let meet = alo.max(blo) <= ahi.min(bhi);
            if meet != g.has_edge(u, v) {
                return Ok(false);
            }
            if proper && ((alo <= blo && bhi <= ahi) || (blo <= alo && ahi <= bhi)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
