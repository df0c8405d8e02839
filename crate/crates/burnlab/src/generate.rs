//! Named graph families plus seeded random generators. Every random
//! generator takes an explicit 64-bit seed so corpora are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::IntervalModel;

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("path needs n >= 1".into()));
    }
    Graph::build(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams("cycle needs n >= 3".into()));
    }
    Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges)
}

/// K_{1,leaves}: center 0, leaves 1..=leaves.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::build(leaves + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>())
}

/// One center of degree r with r legs of r-1 vertices each:
/// 1 + r(r-1) vertices in total.
pub fn spider(r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::BadParams("spider needs r >= 2".into()));
    }
    let mut edges = Vec::new();
    for leg in 0..r {
        let base = 1 + leg * (r - 1);
        edges.push((0, base));
        for i in 0..r - 2 {
            edges.push((base + i, base + i + 1));
        }
    }
    Graph::build(1 + r * (r - 1), &edges)
}

/// Complete bipartite K_{k,k} with one pendant leaf on every vertex.
/// Sides occupy 0..k and k..2k; the pendant of v is 2k+v.
pub fn pendant_biclique(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParams("pendant biclique needs k >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in k..2 * k {
            edges.push((u, v));
        }
    }
    for v in 0..2 * k {
        edges.push((v, 2 * k + v));
    }
    Graph::build(4 * k, &edges)
}

/// Spine 0..spine-1 with leaf_counts[p] pendant leaves on spine vertex p;
/// leaves get ids after the spine, grouped by spine position.
pub fn caterpillar(spine: usize, leaf_counts: &[usize]) -> Result<Graph> {
    if spine == 0 || leaf_counts.len() != spine {
        return Err(Error::BadParams("caterpillar needs one leaf count per spine vertex".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..spine - 1).map(|p| (p, p + 1)).collect();
    let mut next = spine;
    for (p, &cnt) in leaf_counts.iter().enumerate() {
        for _ in 0..cnt {
            edges.push((p, next));
            next += 1;
        }
    }
    Graph::build(next, &edges)
}

/// Interval representation matching `caterpillar` ids: wide spine windows
/// sharing endpoints, leaves as interior points of their spine window.
/// Not proper in general (points sit strictly inside spine intervals).
pub fn caterpillar_interval_model(spine: usize, leaf_counts: &[usize]) -> IntervalModel {
    let width = 2 * (leaf_counts.iter().copied().max().unwrap_or(0) as i64 + 1);
    let mut intervals: Vec<(i64, i64)> =
        (0..spine as i64).map(|p| (width * p, width * (p + 1))).collect();
    for (p, &cnt) in leaf_counts.iter().enumerate() {
        for j in 0..cnt as i64 {
            let x = width * p as i64 + 2 * j + 1;
            intervals.push((x, x));
        }
    }
    IntervalModel { intervals }
}

/// Path of `spine` vertices plus one degree-2 "tooth" over each listed
/// consecutive pair (p, p+1); teeth get ids spine, spine+1, ... in pair
/// order. Returns the graph together with a proper interval model:
/// spine p -> [4p, 4p+4], tooth over (p, p+1) -> [4p+3, 4p+5].
pub fn comb(spine: usize, tooth_pairs: &[usize]) -> Result<(Graph, IntervalModel)> {
    if spine == 0 {
        return Err(Error::BadParams("comb needs a nonempty spine".into()));
    }
    if tooth_pairs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadParams("tooth pairs must be strictly increasing".into()));
    }
    if let Some(&p) = tooth_pairs.last() {
        if p + 1 >= spine {
            return Err(Error::BadParams(format!("tooth pair ({p}, {}) leaves the spine", p + 1)));
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..spine - 1).map(|p| (p, p + 1)).collect();
    let mut intervals: Vec<(i64, i64)> =
        (0..spine as i64).map(|p| (4 * p, 4 * p + 4)).collect();
    for (idx, &p) in tooth_pairs.iter().enumerate() {
        let tooth = spine + idx;
        edges.push((p, tooth));
        edges.push((p + 1, tooth));
        intervals.push((4 * p as i64 + 3, 4 * p as i64 + 5));
    }
    Ok((Graph::build(spine + tooth_pairs.len(), &edges)?, IntervalModel { intervals }))
}

/// Uniform random labeled tree (decoded from a random sequence).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("tree needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 1 {
        return Graph::build(1, &[]);
    }
    if n == 2 {
        return Graph::build(2, &[(0, 1)]);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut last = leaves.into_iter();
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    edges.push((u, v));
    Graph::build(n, &edges)
}

/// Random connected graph: a random spanning tree plus Bernoulli extra
/// edges, with the density itself drawn from the seed.
pub fn random_connected(n: usize, seed: u64) -> Result<Graph> {
    let tree = random_tree(n, seed)?;
    if n < 3 {
        return Ok(tree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let p: f64 = rng.random_range(0.0..0.55);
    let mut edges = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// Random caterpillar on n vertices, with its interval representation.
pub fn random_caterpillar(n: usize, seed: u64) -> Result<(Graph, IntervalModel)> {
    if n == 0 {
        return Err(Error::BadParams("caterpillar needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spine = rng.random_range(1..=n);
    let mut leaf_counts = vec![0usize; spine];
    for _ in 0..n - spine {
        let p = rng.random_range(0..spine);
        leaf_counts[p] += 1;
    }
    Ok((caterpillar(spine, &leaf_counts)?, caterpillar_interval_model(spine, &leaf_counts)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::verify_interval_model;

    #[test]
    fn named_families() {
        assert_eq!(path(9).unwrap().edge_count(), 8);
        assert_eq!(cycle(7).unwrap().degree(0), 2);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(star(5).unwrap().degree(0), 5);
        assert!(matches!(spider(1), Err(Error::BadParams(_))));

        let s3 = spider(3).unwrap();
        assert_eq!((s3.n(), s3.degree(0)), (7, 3));
        assert!(s3.is_tree());

        let g = pendant_biclique(4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (16, 24));
        assert_eq!(g.degree(0), 5); // 4 cross edges + 1 pendant
        assert_eq!(g.degree(8), 1);
    }

    #[test]
    fn random_generators_are_seeded_and_connected() {
        for seed in 0..20 {
            let t = random_tree(10, seed).unwrap();
            assert!(t.is_tree(), "seed {seed}");
            let g = random_connected(9, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.edges(), random_connected(9, seed).unwrap().edges());
        }
    }

    #[test]
    fn caterpillar_and_comb_models_verify() {
        let counts = [2, 0, 1, 3];
        let g = caterpillar(4, &counts).unwrap();
        assert_eq!(g.n(), 10);
        assert!(g.is_tree());
        let m = caterpillar_interval_model(4, &counts);
        assert!(verify_interval_model(&g, &m, false).unwrap());

        let (g, m) = comb(6, &[0, 3, 4]).unwrap();
        assert_eq!(g.n(), 9);
        assert!(verify_interval_model(&g, &m, true).unwrap());

        for seed in 0..10 {
            let (g, m) = random_caterpillar(12, seed).unwrap();
            assert!(g.is_tree());
            assert!(verify_interval_model(&g, &m, false).unwrap());
        }
    }
}
