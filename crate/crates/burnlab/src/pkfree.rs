//! Burning sequences for graphs with no long induced path, built by
//! recursing through minimum connected dominating sets. For a connected
//! graph with no induced path on k vertices the result uses at most
//! ceil((k+1)/2) steps.
//!
//! Shape of the recursion: a dominating set D pulls the problem down two
//! path-lengths (its induced subgraph has no induced path on k-2
//! vertices, or is exactly one), and a sequence for G[D] lifts back to G
//! with one extra step, because every vertex sits next to D.

use crate::burn::{simulate, validate, BurningSequence};
use crate::cds::{classify_induced, minimum_connected_dominating_set, InducedKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induced::longest_induced_path;
use crate::iso::{is_complete, path_order};
use crate::pathcycle::{path_cycle_sequence, PathOrCycle};

/// Stretches a sequence that burns the dominating set into one that
/// burns all of G: same sources, horizon + 1, plus (when something is
/// still unburned after `inner`'s horizon) the lexicographically
/// smallest such vertex appended as one extra source.
///
/// `inner`'s sources must lie in `dominating` and burn G[`dominating`]
/// within their horizon.
pub fn lift_by_domination(
    g: &Graph,
    dominating: &[usize],
    inner: &BurningSequence,
) -> Result<BurningSequence> {
    let (gd, old_of_new) = g.induced_subgraph(dominating)?;
    let mut new_of_old = vec![None; g.n()];
    for (new, &old) in old_of_new.iter().enumerate() {
        new_of_old[old] = Some(new);
    }
    let translated: Option<Vec<usize>> =
        inner.sources().iter().map(|&s| new_of_old.get(s).copied().flatten()).collect();
    let translated = translated
        .ok_or_else(|| Error::InvalidSequence("inner source outside the dominating set".into()))?;
    if !validate(&gd, &BurningSequence::new(translated, inner.horizon())?)? {
        return Err(Error::InvalidSequence(
            "inner sequence does not burn the dominating set".into(),
        ));
    }

    let trace = simulate(g, inner)?;
    let unburned = trace.ignition_time.iter().position(|t| t.is_none());
    let mut sources = inner.sources().to_vec();
    if let Some(x) = unburned {
        sources.push(x);
    }
    let lifted = BurningSequence::new(sources, inner.horizon() + 1)?;
    if !validate(g, &lifted)? {
        return Err(Error::Internal("lifted sequence failed validation".into()));
    }
    Ok(lifted)
}

/// A valid burning sequence with horizon at most ceil((k+1)/2) for a
/// connected graph with no induced path on k vertices.
pub fn pkfree_sequence(g: &Graph, k: usize) -> Result<BurningSequence> {
    if k < 2 {
        return Err(Error::BadParams("path-freeness threshold must be at least 2".into()));
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let found = longest_induced_path(g, k);
    if found >= k {
        return Err(Error::NotPathFree { k, found });
    }
    if g.n() == 1 {
        return BurningSequence::new(vec![0], 1);
    }
    // k = 2 cannot reach here: an edge is an induced 2-vertex path.
    if k == 3 {
        // No induced 3-vertex path and connected means complete.
        debug_assert!(is_complete(g));
        return BurningSequence::new(vec![0, 1], 2);
    }

    let cds = minimum_connected_dominating_set(g)?;
    let (gd, old_of_new) = g.induced_subgraph(&cds.vertices)?;
    let inner_local = match classify_induced(&gd, k - 2)? {
        InducedKind::IsPath { len } => {
            let order = path_order(&gd).expect("classified as a path");
            let on_line = path_cycle_sequence(len, PathOrCycle::Path)?;
            let sources = on_line.sources().iter().map(|&i| order[i]).collect();
            BurningSequence::new(sources, on_line.horizon())?
        }
        InducedKind::PathFree { k: inner_k } => pkfree_sequence(&gd, inner_k)?,
    };
    let sources = inner_local.sources().iter().map(|&s| old_of_new[s]).collect();
    let inner = BurningSequence::new(sources, inner_local.horizon())?;
    lift_by_domination(g, &cds.vertices, &inner)
}

/// ceil((k+1)/2), the horizon guarantee of `pkfree_sequence`.
pub fn pkfree_horizon_bound(k: usize) -> usize {
    (k + 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::solver::{burning_number_exact, Budget};

    fn checked(g: &Graph, k: usize) -> BurningSequence {
        let seq = pkfree_sequence(g, k).unwrap();
        assert!(validate(g, &seq).unwrap());
        assert!(
            seq.horizon() <= pkfree_horizon_bound(k),
            "horizon {} over bound for k={k}",
            seq.horizon()
        );
        seq
    }

    #[test]
    fn complete_graphs_are_three_path_free() {
        let g = generate::complete(7).unwrap();
        let seq = checked(&g, 3);
        assert_eq!((seq.sources(), seq.horizon()), (&[0usize, 1][..], 2));
    }

    #[test]
    fn rejects_graphs_with_the_path() {
        let g = generate::path(6).unwrap();
        assert!(matches!(pkfree_sequence(&g, 4), Err(Error::NotPathFree { k: 4, found: 4 })));
        // But P_6 contains no induced P_7.
        checked(&g, 7);
    }

    #[test]
    fn biclique_with_pendants_recursion_trace() {
        // Longest induced path here has 5 vertices, so the graph is
        // 6-path-free; the dominating core is the biclique, whose own
        // dominator is one cross edge, and the lift chain ends at
        // horizon 4 = ceil(7/2) with the fringe vertex appended.
        let g = generate::pendant_biclique(4).unwrap();
        let seq = checked(&g, 6);
        assert_eq!(seq.horizon(), 4);
        // Cross edge {0, 4} dominates the core, the second side vertex
        // is appended there, and the last unreached pendant (of vertex
        // 2) is appended at the top level.
        assert_eq!(seq.sources(), &[0, 1, 10]);
        // Matches the exact burning number, so the bound is tight here.
        let exact = burning_number_exact(&g, Budget::UNLIMITED).unwrap();
        assert_eq!(exact.outcome.exact(), Some(4));
    }

    #[test]
    fn star_via_recursion() {
        let g = generate::star(8).unwrap();
        let seq = checked(&g, 4); // star has no induced P_4
        assert!(seq.horizon() <= 3);
    }

    #[test]
    fn lift_rejects_foreign_or_non_burning_inner() {
        let g = generate::star(4).unwrap();
        // Source 3 is not in the dominating set {0}.
        let bad = BurningSequence::new(vec![3], 1).unwrap();
        assert!(lift_by_domination(&g, &[0], &bad).is_err());
        // {0, 1} induces an edge; one source at horizon 1 cannot burn it.
        let weak = BurningSequence::new(vec![1], 1).unwrap();
        assert!(lift_by_domination(&g, &[0, 1], &weak).is_err());
    }

    #[test]
    fn lift_appends_only_when_needed() {
        // Inner already burns all of G within its own horizon: nothing
        // appended, the horizon just grows.
        let p2 = generate::path(2).unwrap();
        let inner = BurningSequence::new(vec![0, 1], 2).unwrap();
        let lifted = lift_by_domination(&p2, &[0, 1], &inner).unwrap();
        assert_eq!((lifted.sources(), lifted.horizon()), (&[0usize, 1][..], 3));

        // Star: after one step only the center burns, so the smallest
        // leaf is appended.
        let g = generate::star(3).unwrap();
        let inner = BurningSequence::new(vec![0], 1).unwrap();
        let lifted = lift_by_domination(&g, &[0], &inner).unwrap();
        assert_eq!((lifted.sources(), lifted.horizon()), (&[0usize, 1][..], 2));

        // Path: inner burns {0..3} in two steps, the far end is appended.
        let p5 = generate::path(5).unwrap();
        let inner = BurningSequence::new(vec![1, 3], 2).unwrap();
        let lifted = lift_by_domination(&p5, &[1, 2, 3], &inner).unwrap();
        assert_eq!((lifted.sources(), lifted.horizon()), (&[1usize, 3, 4][..], 3));
    }
}
