//! Burning on line graphs and total graphs: exact variant numbers, the
//! four sequence transports between a graph and its derived graphs, and
//! the relation checks tying everything together.
//!
//! Transports plan one derived source per input source and then run a
//! repair pass: planned picks already burning before their turn are
//! dropped (their ball is swallowed by an earlier source's larger ball,
//! so coverage survives), and one extra chooser-picked vertex may be
//! appended if a step remains with something still unburned.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::join;
use serde::Serialize;

use crate::burn::{validate, BurningSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{burning_number_exact, Budget, Solved};
use crate::transform::{line_graph, spike_graph, total_graph, Origin, VertexMap};

/// Tie-breaking policy wherever a transport has several legal picks.
pub enum Chooser {
    LowestId,
    Seeded(ChaCha8Rng),
}

impl Chooser {
    pub fn lowest() -> Self {
        Chooser::LowestId
    }

    pub fn seeded(seed: u64) -> Self {
        Chooser::Seeded(ChaCha8Rng::seed_from_u64(seed))
    }

    /// options must be nonempty and ascending.
    fn pick(&mut self, options: &[usize]) -> usize {
        match self {
            Chooser::LowestId => options[0],
            Chooser::Seeded(rng) => options[rng.random_range(0..options.len())],
        }
    }
}

/// Replays `planned` on g, one pick per step: a pick already burning
/// before its step is dropped, a pick first burned by its own step's
/// spread is kept (still legal), and after the plan runs out a single
/// unburned vertex may be ignited. The result must validate at
/// `horizon`; the coverage argument for each transport guarantees it.
fn repair_into_sequence(
    g: &Graph,
    planned: &[usize],
    horizon: usize,
    chooser: &mut Chooser,
) -> Result<BurningSequence> {
    let n = g.n();
    let mut burning = vec![false; n];
    let mut kept = Vec::new();
    let mut appended = false;
    let mut next = 0usize;
    for _step in 1..=horizon {
        let before_spread = burning.clone();
        for u in 0..n {
            if before_spread[u] {
                for &w in g.neighbors(u) {
                    burning[w] = true;
                }
            }
        }
        while next < planned.len() && before_spread[planned[next]] {
            next += 1; // drop: already burning before this step began
        }
        if next < planned.len() {
            kept.push(planned[next]);
            burning[planned[next]] = true;
            next += 1;
        } else if !appended {
            let open: Vec<usize> = (0..n).filter(|&v| !burning[v]).collect();
            if !open.is_empty() {
                let x = chooser.pick(&open);
                kept.push(x);
                burning[x] = true;
                appended = true;
            }
        }
    }
    let seq = BurningSequence::new(kept, horizon)?;
    if !validate(g, &seq)? {
        return Err(Error::Internal("repaired transport sequence failed validation".into()));
    }
    Ok(seq)
}

fn incident_derived(map: &VertexMap, derived_n: usize, v: usize) -> Vec<usize> {
    (0..derived_n)
        .filter(|&i| matches!(map.origin(i), Origin::Edge(u, w) if u == v || w == v))
        .collect()
}

/// Burns L(G) in one extra step: each source becomes one of its incident
/// edges (isolated sources are skipped). Ids follow `line_graph(g)`.
pub fn line_seq_from_vertex_seq(
    g: &Graph,
    seq: &BurningSequence,
    chooser: &mut Chooser,
) -> Result<BurningSequence> {
    if !validate(g, seq)? {
        return Err(Error::InvalidSequence("input does not burn the graph".into()));
    }
    let (lg, map) = line_graph(g)?;
    let mut planned = Vec::new();
    for &b in seq.sources() {
        let inc = incident_derived(&map, lg.n(), b);
        if !inc.is_empty() {
            planned.push(chooser.pick(&inc));
        }
    }
    repair_into_sequence(&lg, &planned, seq.horizon() + 1, chooser)
}

/// Burns G in one extra step given a burning of L(G): each edge-source
/// becomes one of its endpoints. G must have no isolated vertices (they
/// are invisible in the line graph).
pub fn vertex_seq_from_line_seq(
    g: &Graph,
    line_seq: &BurningSequence,
    chooser: &mut Chooser,
) -> Result<BurningSequence> {
    let (lg, map) = line_graph(g)?;
    if !validate(&lg, line_seq)? {
        return Err(Error::InvalidSequence("input does not burn the line graph".into()));
    }
    let mut planned = Vec::new();
    for &a in line_seq.sources() {
        match map.origin(a) {
            Origin::Edge(u, w) => planned.push(chooser.pick(&[u, w])),
            _ => return Err(Error::Internal("line graph vertex without edge origin".into())),
        }
    }
    repair_into_sequence(g, &planned, line_seq.horizon() + 1, chooser)
}

/// Burns T(G) in one extra step: sources keep their ids (vertices of G
/// are vertices of T(G) with the same distances).
pub fn total_seq_from_vertex_seq(
    g: &Graph,
    seq: &BurningSequence,
    chooser: &mut Chooser,
) -> Result<BurningSequence> {
    if !validate(g, seq)? {
        return Err(Error::InvalidSequence("input does not burn the graph".into()));
    }
    let (tg, _) = total_graph(g)?;
    let planned: Vec<usize> = seq.sources().to_vec();
    repair_into_sequence(&tg, &planned, seq.horizon() + 1, chooser)
}

/// Burns G at the *same* horizon given a burning of T(G): vertex-origin
/// sources keep their id, edge-origin sources step to an endpoint. The
/// endpoint loses at most one step of reach, which the endpoint's
/// adjacency wins back, hence no horizon penalty.
pub fn vertex_seq_from_total_seq(
    g: &Graph,
    total_seq: &BurningSequence,
    chooser: &mut Chooser,
) -> Result<BurningSequence> {
    let (tg, map) = total_graph(g)?;
    if !validate(&tg, total_seq)? {
        return Err(Error::InvalidSequence("input does not burn the total graph".into()));
    }
    let mut planned = Vec::new();
    for &a in total_seq.sources() {
        match map.origin(a) {
            Origin::Vertex(v) => planned.push(v),
            Origin::Edge(u, w) => planned.push(chooser.pick(&[u, w])),
            Origin::SpikeOf(_) => {
                return Err(Error::Internal("unexpected spike origin in total graph".into()))
            }
        }
    }
    repair_into_sequence(g, &planned, total_seq.horizon(), chooser)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantKind {
    Edge,
    Total,
}

pub struct VariantResult {
    pub kind: VariantKind,
    pub derived: Graph,
    pub map: VertexMap,
    pub solved: Solved,
}

/// Burning number of L(G).
pub fn edge_burning_number(g: &Graph, budget: Budget) -> Result<VariantResult> {
    let (lg, map) = line_graph(g)?;
    let solved = burning_number_exact(&lg, budget)?;
    Ok(VariantResult { kind: VariantKind::Edge, derived: lg, map, solved })
}

/// Burning number of T(G).
pub fn total_burning_number(g: &Graph, budget: Budget) -> Result<VariantResult> {
    let (tg, map) = total_graph(g)?;
    let solved = burning_number_exact(&tg, budget)?;
    Ok(VariantResult { kind: VariantKind::Total, derived: tg, map, solved })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationStatus {
    Holds,
    Violated,
    Unverified,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    /// Solver brackets [lower, upper]; equal entries mean proven exact.
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
    pub status: RelationStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn any_violated(&self) -> bool {
        self.checks.iter().any(|c| c.status == RelationStatus::Violated)
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.status == RelationStatus::Holds)
    }
}

fn le_status(lhs: (usize, usize), rhs: (usize, usize)) -> RelationStatus {
    if lhs.1 <= rhs.0 {
        RelationStatus::Holds
    } else if lhs.0 > rhs.1 {
        RelationStatus::Violated
    } else {
        RelationStatus::Unverified
    }
}

fn eq_status(lhs: (usize, usize), rhs: (usize, usize)) -> RelationStatus {
    if lhs == rhs && lhs.0 == lhs.1 {
        RelationStatus::Holds
    } else if lhs.1 < rhs.0 || lhs.0 > rhs.1 {
        RelationStatus::Violated
    } else {
        RelationStatus::Unverified
    }
}

/// Solves G, L(G), T(G) and T(spike(G)) concurrently, then scores the
/// known relations between the four numbers. Exhausted solves leave the
/// affected relations unverified rather than failed.
pub fn verify_relations(g: &Graph, budget: Budget) -> Result<RelationReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let has_edge = g.edge_count() > 0;
    let ((base, line), (total, spiked_total)) = join(
        || {
            join(
                || burning_number_exact(g, budget),
                || if has_edge { edge_burning_number(g, budget).map(Some) } else { Ok(None) },
            )
        },
        || {
            join(
                || total_burning_number(g, budget),
                || {
                    let (sp, _) = spike_graph(g)?;
                    total_burning_number(&sp, budget)
                },
            )
        },
    );
    let b = base?.outcome.bracket();
    let bl = line?.map(|r| r.solved.outcome.bracket());
    let bt = total?.solved.outcome.bracket();
    let bst = spiked_total?.solved.outcome.bracket();

    let shift = |x: (usize, usize), by: isize| {
        ((x.0 as isize + by).max(0) as usize, (x.1 as isize + by).max(0) as usize)
    };

    let mut checks = Vec::new();
    if let Some(bl) = bl {
        checks.push(RelationCheck {
            relation: "b_line >= b - 1".into(),
            lhs: bl,
            rhs: shift(b, -1),
            status: le_status(shift(b, -1), bl),
        });
        checks.push(RelationCheck {
            relation: "b_line <= b + 1".into(),
            lhs: bl,
            rhs: shift(b, 1),
            status: le_status(bl, shift(b, 1)),
        });
        if g.is_tree() {
            checks.push(RelationCheck {
                relation: "b_line <= b (tree)".into(),
                lhs: bl,
                rhs: b,
                status: le_status(bl, b),
            });
        }
    }
    checks.push(RelationCheck {
        relation: "b_total >= b".into(),
        lhs: bt,
        rhs: b,
        status: le_status(b, bt),
    });
    checks.push(RelationCheck {
        relation: "b_total <= b + 1".into(),
        lhs: bt,
        rhs: shift(b, 1),
        status: le_status(bt, shift(b, 1)),
    });
    checks.push(RelationCheck {
        relation: "b_total(spiked) == b + 1".into(),
        lhs: bst,
        rhs: shift(b, 1),
        status: eq_status(bst, shift(b, 1)),
    });
    Ok(RelationReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn exact(g: &Graph) -> usize {
        burning_number_exact(g, Budget::UNLIMITED).unwrap().outcome.exact().unwrap()
    }

    #[test]
    fn line_graph_of_large_cliques_needs_three() {
        for n in [5, 6] {
            let r = edge_burning_number(&generate::complete(n).unwrap(), Budget::UNLIMITED).unwrap();
            assert_eq!(r.solved.outcome.exact(), Some(3), "K_{n}");
        }
        // Small cliques stay at two.
        let r = edge_burning_number(&generate::complete(4).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!(r.solved.outcome.exact(), Some(2));
    }

    #[test]
    fn path_line_graph_drops_one_step() {
        // L(P_5) = P_4: burning number 2 against 3 for P_5 itself.
        let g = generate::path(5).unwrap();
        let r = edge_burning_number(&g, Budget::UNLIMITED).unwrap();
        assert_eq!(r.solved.outcome.exact(), Some(2));
        assert_eq!(exact(&g), 3);
    }

    #[test]
    fn total_graph_of_square_needs_three() {
        // All eight T(C_4) vertices have degree 4, so two balls of radii
        // 1 and 0 reach at most 6 < 8 vertices; three steps suffice.
        let g = generate::cycle(4).unwrap();
        let r = total_burning_number(&g, Budget::UNLIMITED).unwrap();
        assert_eq!(r.solved.outcome.exact(), Some(3));
        assert_eq!(exact(&g), 2);
    }

    #[test]
    fn transports_validate_on_the_nine_path() {
        let g = generate::path(9).unwrap();
        let w = BurningSequence::new(vec![2, 6, 8], 3).unwrap();
        let (lg, _) = line_graph(&g).unwrap();
        let (tg, _) = total_graph(&g).unwrap();

        for mut chooser in [Chooser::lowest(), Chooser::seeded(11)] {
            let ls = line_seq_from_vertex_seq(&g, &w, &mut chooser).unwrap();
            assert_eq!(ls.horizon(), 4);
            assert!(validate(&lg, &ls).unwrap());

            let ts = total_seq_from_vertex_seq(&g, &w, &mut chooser).unwrap();
            assert_eq!(ts.horizon(), 4);
            assert!(validate(&tg, &ts).unwrap());
        }
    }

    #[test]
    fn transport_back_from_line_appends_when_useful() {
        // L(P_9) = P_8 burns as (2, 6) @ 3; lifting to P_9 at horizon 4
        // leaves v8 unreached by the plan, so the repair pass ignites it.
        let g = generate::path(9).unwrap();
        let a = BurningSequence::new(vec![2, 6], 3).unwrap();
        let got = vertex_seq_from_line_seq(&g, &a, &mut Chooser::lowest()).unwrap();
        assert_eq!((got.sources(), got.horizon()), (&[2usize, 6, 8][..], 4));
    }

    #[test]
    fn transport_back_from_total_drops_swallowed_picks() {
        // T(P_5) burns as (2, e12, e34) @ 3. Endpoints map to 2, 1, 3;
        // by step 3 vertex 3 already burned, so the plan drops it and
        // the result is (2, 1) @ 3 — same horizon, still valid.
        let g = generate::path(5).unwrap();
        let (tg, map) = total_graph(&g).unwrap();
        let e12 = map.derived_of_edge(1, 2).unwrap();
        let e34 = map.derived_of_edge(3, 4).unwrap();
        let a = BurningSequence::new(vec![2, e12, e34], 3).unwrap();
        assert!(validate(&tg, &a).unwrap());
        let got = vertex_seq_from_total_seq(&g, &a, &mut Chooser::lowest()).unwrap();
        assert_eq!((got.sources(), got.horizon()), (&[2usize, 1][..], 3));
    }

    #[test]
    fn duplicate_planned_edges_collapse() {
        // Both sources of P_2 plan the same single edge of L(P_2) = K_1.
        let g = generate::path(2).unwrap();
        let w = BurningSequence::new(vec![0, 1], 2).unwrap();
        let got = line_seq_from_vertex_seq(&g, &w, &mut Chooser::lowest()).unwrap();
        assert_eq!((got.sources(), got.horizon()), (&[0usize][..], 3));
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let g = generate::path(4).unwrap();
        let not_burning = BurningSequence::new(vec![0], 1).unwrap();
        assert!(matches!(
            line_seq_from_vertex_seq(&g, &not_burning, &mut Chooser::lowest()),
            Err(Error::InvalidSequence(_))
        ));
        let edgeless = Graph::build(3, &[]).unwrap();
        let s = BurningSequence::new(vec![0, 1, 2], 3).unwrap();
        assert!(matches!(
            line_seq_from_vertex_seq(&edgeless, &s, &mut Chooser::lowest()),
            Err(Error::EdgelessGraph)
        ));
    }

    #[test]
    fn seeded_chooser_is_reproducible() {
        let g = generate::random_connected(9, 5).unwrap();
        let w = burning_number_exact(&g, Budget::UNLIMITED)
            .unwrap()
            .outcome
            .witness()
            .unwrap()
            .clone();
        let one = line_seq_from_vertex_seq(&g, &w, &mut Chooser::seeded(42)).unwrap();
        let two = line_seq_from_vertex_seq(&g, &w, &mut Chooser::seeded(42)).unwrap();
        assert_eq!(one, two);
    }

    #[test]
    fn relations_hold_on_small_graphs() {
        for g in [
            generate::cycle(4).unwrap(),
            generate::path(6).unwrap(),
            generate::star(4).unwrap(),
            generate::complete(5).unwrap(),
        ] {
            let report = verify_relations(&g, Budget::UNLIMITED).unwrap();
            assert!(report.all_hold(), "{report:?}");
        }
        // K_1 has no line graph: only the total-graph relations appear.
        let report = verify_relations(&generate::path(1).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!(report.checks.len(), 3);
        assert!(report.all_hold());
    }

    #[test]
    fn exhausted_budget_reports_unverified_not_violated() {
        let g = generate::path(20).unwrap();
        let report = verify_relations(&g, Budget::expansions(1)).unwrap();
        assert!(!report.any_violated());
        assert!(report.checks.iter().any(|c| c.status == RelationStatus::Unverified));
    }
}
