//! BFS hop distances. `UNREACHABLE` marks cross-component pairs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>, // row-major n*n
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn reachable(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != UNREACHABLE
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Max finite distance from `v` (its own component only).
    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0)
    }

    /// |{u : d(v,u) <= r}|, counting within v's component.
    pub fn ball_size(&self, v: usize, r: u32) -> usize {
        self.row(v).iter().filter(|&&d| d != UNREACHABLE && d <= r).count()
    }
}

/// Single-source BFS distances; `UNREACHABLE` off-component.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for v in 0..n {
        dist.extend_from_slice(&bfs_distances(g, v));
    }
    DistanceMatrix { n, dist }
}

pub fn diameter(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = 0;
    for v in 0..g.n() {
        for d in bfs_distances(g, v) {
            best = best.max(d);
        }
    }
    Ok(best as usize)
}
