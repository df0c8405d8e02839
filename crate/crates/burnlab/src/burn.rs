//! Burning sequences and their semantics.
//!
//! A sequence carries a horizon k and sources b_1..b_t with t <= k. At
//! step i the fire first spreads from everything already burning, then
//! b_i ignites; steps t+1..k only spread. A step is flagged invalid when
//! its source was already burning before the step began, i.e. the new
//! source must be outside the burned set of the previous step. Under
//! that reading, the flags coincide exactly with violations of the
//! pairwise constraint d(b_i, b_j) >= j - i, which is what makes the two
//! validation routes below interchangeable.

use crate::distance::bfs_distances;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurningSequence {
    sources: Vec<usize>,
    horizon: usize,
}

impl BurningSequence {
    pub fn new(sources: Vec<usize>, horizon: usize) -> Result<Self> {
        if sources.is_empty() {
            return Err(Error::InvalidSequence("no sources".into()));
        }
        if horizon < sources.len() {
            return Err(Error::InvalidSequence(format!(
                "{} sources exceed horizon {horizon}",
                sources.len()
            )));
        }
        let mut seen = sources.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSequence("repeated source".into()));
        }
        Ok(BurningSequence { sources, horizon })
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty source lists
    }

    /// "k; b_1 b_2 ... b_t"
    pub fn to_text(&self) -> String {
        let srcs: Vec<String> = self.sources.iter().map(|s| s.to_string()).collect();
        format!("{}; {}", self.horizon, srcs.join(" "))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (head, tail) = text
            .split_once(';')
            .ok_or_else(|| Error::Parse { line: 1, msg: "expected \"k; sources\"".into() })?;
        let horizon = head
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse { line: 1, msg: "bad horizon".into() })?;
        let mut sources = Vec::new();
        for tok in tail.split_whitespace() {
            sources.push(
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse { line: 1, msg: format!("bad source {tok:?}") })?,
            );
        }
        BurningSequence::new(sources, horizon)
    }
}

#[derive(Debug, Clone)]
pub struct BurnTrace {
    /// Step at which each vertex caught fire (1-based), None if never.
    pub ignition_time: Vec<Option<usize>>,
    /// Burned set after each step; steps[i] is the set after step i+1.
    pub steps: Vec<Vec<usize>>,
    /// Steps whose source was already burning when the step began.
    pub invalid_steps: Vec<usize>,
}

impl BurnTrace {
    pub fn fully_burned(&self) -> bool {
        self.ignition_time.iter().all(|t| t.is_some())
    }

    pub fn clean(&self) -> bool {
        self.invalid_steps.is_empty()
    }
}

/// Runs the process for the full horizon regardless of flags, so the
/// trace shows exactly what a given (possibly bad) sequence does.
pub fn simulate(g: &Graph, seq: &BurningSequence) -> Result<BurnTrace> {
    for &s in seq.sources() {
        if s >= g.n() {
            return Err(Error::VertexOutOfRange { v: s, n: g.n() });
        }
    }
    let n = g.n();
    let mut ignition = vec![None; n];
    let mut burning = vec![false; n];
    let mut frontier: Vec<usize> = Vec::new();
    let mut steps = Vec::with_capacity(seq.horizon());
    let mut invalid = Vec::new();

    for step in 1..=seq.horizon() {
        // Spread first: neighbours of the previous burned set ignite.
        let mut new: Vec<usize> = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if !burning[w] {
                    burning[w] = true;
                    ignition[w] = Some(step);
                    new.push(w);
                }
            }
        }
        // Then this step's source, checked against the pre-spread set.
        if let Some(&b) = seq.sources().get(step - 1) {
            let burned_before_step = burning[b] && ignition[b] != Some(step);
            if burned_before_step {
                invalid.push(step);
            }
            if !burning[b] {
                burning[b] = true;
                ignition[b] = Some(step);
                new.push(b);
            }
        }
        frontier = new;
        steps.push((0..n).filter(|&v| burning[v]).collect());
    }
    Ok(BurnTrace { ignition_time: ignition, steps, invalid_steps: invalid })
}

/// Ball-covering route: every vertex lies in some N^{k-i}[b_i] and the
/// sources pairwise satisfy d(b_i, b_j) >= j - i.
pub fn validate_by_covering(g: &Graph, seq: &BurningSequence) -> Result<bool> {
    for &s in seq.sources() {
        if s >= g.n() {
            return Err(Error::VertexOutOfRange { v: s, n: g.n() });
        }
    }
    let k = seq.horizon();
    let dists: Vec<Vec<u32>> = seq.sources().iter().map(|&b| bfs_distances(g, b)).collect();
    for v in 0..g.n() {
        let covered = seq.sources().iter().enumerate().any(|(idx, _)| {
            let radius = (k - (idx + 1)) as u32;
            dists[idx][v] <= radius
        });
        if !covered {
            return Ok(false);
        }
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if dists[i][seq.sources()[j]] < (j - i) as u32 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Simulation route: run the process, demand no flagged step and a fully
/// burned graph at the horizon.
pub fn validate_by_simulation(g: &Graph, seq: &BurningSequence) -> Result<bool> {
    let trace = simulate(g, seq)?;
    Ok(trace.clean() && trace.fully_burned())
}

/// Both routes; they agree by construction, and debug builds check it.
pub fn validate(g: &Graph, seq: &BurningSequence) -> Result<bool> {
    let by_cover = validate_by_covering(g, seq)?;
    let by_sim = validate_by_simulation(g, seq)?;
    debug_assert_eq!(by_cover, by_sim, "validation routes split on {}", seq.to_text());
    Ok(by_cover && by_sim)
}
