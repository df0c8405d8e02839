//! Minimum connected dominating sets by exhaustive search, plus the
//! classification of what the chosen set induces. Sized for the small
//! dense-ish graphs the recursion in `pkfree` feeds it.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induced::longest_induced_path;
use crate::iso::path_order;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InducedKind {
    /// Induces no path on `k` vertices.
    PathFree { k: usize },
    /// Induces exactly a path on `len` vertices.
    IsPath { len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdsCertificate {
    /// Sorted vertex ids; lexicographically smallest among minimum sets.
    pub vertices: Vec<usize>,
    /// Filled in by callers that classify the induced subgraph.
    pub kind: Option<InducedKind>,
}

fn dominates(g: &Graph, set: &[usize]) -> bool {
    let mut hit = vec![false; g.n()];
    for &v in set {
        hit[v] = true;
        for &w in g.neighbors(v) {
            hit[w] = true;
        }
    }
    hit.into_iter().all(|x| x)
}

fn induces_connected(g: &Graph, set: &[usize]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::new();
    seen[set[0]] = true;
    queue.push_back(set[0]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if member[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == set.len()
}

/// Smallest set whose closed neighbourhood is V and whose induced
/// subgraph is connected; ties broken lexicographically by enumerating
/// size classes in lexicographic order. Exhaustive, so exponential in n.
pub fn minimum_connected_dominating_set(g: &Graph) -> Result<CdsCertificate> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for size in 1..=g.n() {
        for set in (0..g.n()).combinations(size) {
            if dominates(g, &set) && induces_connected(g, &set) {
                return Ok(CdsCertificate { vertices: set, kind: None });
            }
        }
    }
    Err(Error::Internal("a connected graph dominates itself".into()))
}

/// Decides which side of the dominator dichotomy `gd` (a dominating
/// set's induced subgraph) falls on, for threshold k: either it contains
/// no induced path on k vertices, or it is itself a path on exactly k
/// vertices. Anything else is reported as a violation.
pub fn classify_induced(gd: &Graph, k: usize) -> Result<InducedKind> {
    if let Some(order) = path_order(gd) {
        if order.len() == k {
            return Ok(InducedKind::IsPath { len: k });
        }
    }
    let found = longest_induced_path(gd, k);
    if found < k {
        return Ok(InducedKind::PathFree { k });
    }
    Err(Error::Internal(format!(
        "dominating set of {} vertices induces a {k}-vertex path without being one",
        gd.n()
    )))
}
