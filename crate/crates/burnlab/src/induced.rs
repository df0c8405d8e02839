//! Longest induced path by exhaustive extension. Intended for the small
//! graphs this crate reasons about exactly; the cap keeps callers honest.

use crate::graph::Graph;

/// Number of vertices on a longest induced path, truncated at `cap`:
/// once some induced path reaches `cap` vertices the search stops and
/// `cap` is returned. A single vertex counts as a path of length 1.
pub fn longest_induced_path(g: &Graph, cap: usize) -> usize {
    if g.n() == 0 || cap == 0 {
        return 0;
    }
    let mut best = 1;
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(cap);
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        extend(g, cap, &mut path, &mut on_path, &mut best);
        on_path[start] = false;
        path.pop();
        if best >= cap {
            return cap;
        }
    }
    best
}

fn extend(g: &Graph, cap: usize, path: &mut Vec<usize>, on_path: &mut [bool], best: &mut usize) {
    *best = (*best).max(path.len());
    if *best >= cap {
        return;
    }
    let tail = *path.last().unwrap();
    for &w in g.neighbors(tail) {
        if on_path[w] {
            continue;
        }
        // Induced: w may touch the path only at its tail.
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend(g, cap, path, on_path, best);
        on_path[w] = false;
        path.pop();
        if *best >= cap {
            return;
        }
    }
}
