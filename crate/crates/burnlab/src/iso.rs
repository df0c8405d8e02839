//! Small-scale isomorphism helpers: path/cycle/complete recognition, a
//! brute-force check for tiny graphs, and verification of an explicit map.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// If `g` is a path graph, returns its vertices in path order.
pub fn path_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 || !g.is_connected() || g.edge_count() != n - 1 {
        return None;
    }
    if n == 1 {
        return Some(vec![0]);
    }
    if (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev)?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3
        && g.is_connected()
        && g.edge_count() == g.n()
        && (0..g.n()).all(|v| g.degree(v) == 2)
}

pub fn is_complete(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() == g.n() * (g.n() - 1) / 2
}

/// Checks that `map` (new id for each vertex of `a`) is an isomorphism
/// a -> b. Bijectivity + equal edge counts + edge preservation suffice.
pub fn isomorphic_by_map(a: &Graph, b: &Graph, map: &[usize]) -> bool {
    if a.n() != b.n() || map.len() != a.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut hit = vec![false; b.n()];
    for &m in map {
        if m >= b.n() || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    a.edges().iter().all(|&(u, v)| b.has_edge(map[u], map[v]))
}

const ISO_GUARD: usize = 8;

/// Brute-force isomorphism for n <= 8, with a degree-sequence prefilter.
pub fn isomorphic_small(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let n = a.n();
    if n > ISO_GUARD {
        return Err(Error::BruteForceGuard { n, max: ISO_GUARD });
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok((0..n).permutations(n).any(|perm| isomorphic_by_map(a, b, &perm)))
}
