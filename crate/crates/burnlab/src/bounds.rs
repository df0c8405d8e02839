//! Cheap certified bounds on the burning number. The exact solver uses
//! the ball-counting lower bound to pick its starting depth, and the
//! suite uses both sides to sandwich solver output.

use serde::Serialize;

use crate::distance::{all_pairs_distances, DistanceMatrix, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn ceil_sqrt(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as usize;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LowerRule {
    /// Smallest k whose k balls of radii k-1, ..., 0 can reach n vertices.
    BallCounting,
    /// ceil(sqrt(diameter + 1)) — valid for interval graphs.
    IntervalDiameter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UpperRule {
    /// Radius-style bound: one source reaches everything in diameter steps.
    DiameterPlusOne,
    /// 2 ceil(sqrt(n)) - 1, valid for every connected graph.
    TwiceSqrtMinusOne,
    /// ceil(sqrt(diameter + 1)) + 1 — valid for interval graphs.
    IntervalDiameterPlusOne,
    /// Igniting an unburned vertex every step always finishes by step n.
    VertexCount,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
    pub lower_rule: LowerRule,
    pub upper_rule: UpperRule,
}

/// Largest ball of each radius anywhere in the graph: out[r] = max over v
/// of |N^r[v]|, for r = 0..=n-1. Built from sorted distance rows so large
/// graphs stay cheap.
pub(crate) fn max_ball_sizes(dm: &DistanceMatrix) -> Vec<usize> {
    let n = dm.n();
    let mut out = vec![0usize; n.max(1)];
    for v in 0..n {
        let mut row: Vec<u32> = dm.row(v).iter().copied().filter(|&d| d != UNREACHABLE).collect();
        row.sort_unstable();
        // row is sorted; count how many entries are <= r for each r.
        let mut idx = 0usize;
        for (r, slot) in out.iter_mut().enumerate() {
            while idx < row.len() && row[idx] <= r as u32 {
                idx += 1;
            }
            *slot = (*slot).max(idx);
            if idx == row.len() {
                // Every later radius sees the whole component.
                for later in out.iter_mut().skip(r + 1) {
                    *later = (*later).max(idx);
                }
                break;
            }
        }
    }
    out
}

/// Smallest k >= 1 such that sum_{i=1..k} maxball(k-i) >= n. Any valid
/// k-step sequence covers the graph with balls of exactly those radii.
pub(crate) fn ball_counting_lower(max_ball: &[usize], n: usize) -> usize {
    for k in 1..=n.max(1) {
        let total: usize = (1..=k).map(|i| max_ball[(k - i).min(max_ball.len() - 1)]).sum();
        if total >= n {
            return k;
        }
    }
    n
}

/// Certified sandwich around the burning number. `interval` asserts the
/// caller has verified an interval representation, unlocking the
/// diameter-based square-root rules.
pub fn bounds(g: &Graph, interval: bool) -> Result<Bounds> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let dm = all_pairs_distances(g);
    let max_ball = max_ball_sizes(&dm);
    let connected = g.is_connected();
    let diam = if connected { dm.row(0).iter().copied().max().unwrap_or(0) as usize } else { 0 };

    let mut lower = (LowerRule::BallCounting, ball_counting_lower(&max_ball, n));
    if interval && connected {
        let cand = ceil_sqrt(diam + 1);
        if cand > lower.1 {
            lower = (LowerRule::IntervalDiameter, cand);
        }
    }

    let mut upper = (UpperRule::VertexCount, n);
    if connected {
        for (rule, value) in [
            (UpperRule::DiameterPlusOne, diam + 1),
            (UpperRule::TwiceSqrtMinusOne, 2 * ceil_sqrt(n) - 1),
        ] {
            if value < upper.1 {
                upper = (rule, value);
            }
        }
        if interval {
            let cand = ceil_sqrt(diam + 1) + 1;
            if cand < upper.1 {
                upper = (UpperRule::IntervalDiameterPlusOne, cand);
            }
        }
    }

    debug_assert!(lower.1 <= upper.1, "bound rules crossed on n={n}");
    Ok(Bounds { lower: lower.1, upper: upper.1, lower_rule: lower.0, upper_rule: upper.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn ceil_sqrt_table() {
        let want = [(0, 0), (1, 1), (2, 2), (4, 2), (5, 3), (9, 3), (10, 4), (16, 4), (17, 5)];
        for (n, r) in want {
            assert_eq!(ceil_sqrt(n), r, "n={n}");
        }
    }

    #[test]
    fn path_bounds_bracket_the_square_root() {
        for n in [1usize, 4, 9, 10, 25, 40] {
            let g = generate::path(n).unwrap();
            let b = bounds(&g, true).unwrap();
            let k = ceil_sqrt(n);
            assert!(b.lower <= k && k <= b.upper, "n={n} got {b:?}");
        }
        // P_9: diameter 8, ceil(sqrt(9)) = 3 on both sides. The two
        // lower rules tie on every path, and ties keep ball counting.
        let b = bounds(&generate::path(9).unwrap(), true).unwrap();
        assert_eq!((b.lower, b.upper), (3, 4));
        assert_eq!(b.lower_rule, LowerRule::BallCounting);
        assert_eq!(b.upper_rule, UpperRule::IntervalDiameterPlusOne);
    }

    #[test]
    fn each_upper_rule_wins_somewhere() {
        // Long interval path: the diameter-root window is tightest.
        let b = bounds(&generate::path(50).unwrap(), true).unwrap();
        assert_eq!((b.lower, b.upper), (8, 9));
        assert_eq!(b.upper_rule, UpperRule::IntervalDiameterPlusOne);

        // Dense graph: diameter + 1 collapses to 2.
        let b = bounds(&generate::complete(7).unwrap(), false).unwrap();
        assert_eq!(b.upper, 2);
        assert_eq!(b.upper_rule, UpperRule::DiameterPlusOne);

        // Long cycle: 2*ceil(sqrt(25)) - 1 = 9 beats diameter + 1 = 13.
        let b = bounds(&generate::cycle(25).unwrap(), false).unwrap();
        assert_eq!(b.upper, 9);
        assert_eq!(b.upper_rule, UpperRule::TwiceSqrtMinusOne);
    }

    #[test]
    fn ball_counting_sees_star_structure() {
        // Star: one radius-1 ball swallows everything, so lower is 2 (a
        // radius-0 ball plus a radius-1 ball reach 1 + n vertices).
        let g = generate::star(20).unwrap();
        let b = bounds(&g, false).unwrap();
        assert_eq!(b.lower, 2);
        assert_eq!(b.upper, 2); // diameter + 1
        assert_eq!(b.upper_rule, UpperRule::DiameterPlusOne);
    }

    #[test]
    fn disconnected_graphs_fall_back_to_vertex_count() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let b = bounds(&g, false).unwrap();
        assert_eq!(b.upper, 4);
        assert_eq!(b.upper_rule, UpperRule::VertexCount);
        assert!(b.lower >= 2); // one ball never covers two components
        assert!(bounds(&Graph::build(0, &[]).unwrap(), false).is_err());
    }

    #[test]
    fn max_ball_sizes_on_cycle() {
        let g = generate::cycle(8).unwrap();
        let dm = all_pairs_distances(&g);
        let mb = max_ball_sizes(&dm);
        assert_eq!(&mb[..5], &[1, 3, 5, 7, 8]);
    }
}
