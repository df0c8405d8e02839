//! Reduction machinery: from a distinct-3-partition instance to a comb
//! graph whose burning number hits its lower bound exactly when the
//! instance is solvable.
//!
//! The construction lines up, on one long spine, an "element" segment of
//! 2B-3 vertices per triple slot, interleaved with buffer segments
//! Q_1..Q_{m+1} of shrinking odd sizes 4m+3-2l, plus filler segments
//! realizing the odd numbers not used by elements. Every consecutive
//! pair inside a buffer segment carries one tooth. A solution refines
//! each element segment into the three odd pieces 2a-1 of its triple, at
//! which point the spine is tiled by the first 2m+1 odd lengths and the
//! piece centers burn everything in 2m+1 steps.

use serde::Serialize;

use crate::burn::BurningSequence;
use crate::error::{Error, InstanceViolation, Result};
use crate::generate::comb;
use crate::graph::Graph;
use crate::interval::{verify_interval_model, IntervalModel};
use crate::iso::isomorphic_by_map;
use crate::transform::{line_graph, Origin};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    /// Distinct, ascending, positive.
    elements: Vec<u64>,
    /// Every triple must sum to this.
    target: u64,
}

impl ThreePartitionInstance {
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() || !elements.len().is_multiple_of(3) {
            return Err(InstanceViolation::NotTripleSized(elements.len()).into());
        }
        if elements.contains(&0) {
            return Err(InstanceViolation::NonPositive(0).into());
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(InstanceViolation::Duplicate(w[0]).into());
        }
        let groups = (elements.len() / 3) as u64;
        let total: u64 = elements.iter().sum();
        if !total.is_multiple_of(groups) {
            return Err(InstanceViolation::SumNotDivisible { total, n: groups }.into());
        }
        let target = total / groups;
        for &a in &elements {
            if 4 * a <= target {
                return Err(InstanceViolation::TooSmall { a, b: target }.into());
            }
            if 2 * a >= target {
                return Err(InstanceViolation::TooLarge { a, b: target }.into());
            }
        }
        let m = *elements.last().unwrap();
        // Unreachable for distinct positives, kept as a guard.
        if m < 3 * groups {
            return Err(InstanceViolation::NotEnoughHeadroom { m, three_n: 3 * groups }.into());
        }
        Ok(ThreePartitionInstance { elements, target })
    }

    /// One integer per line; blank lines and # comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut elements = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            elements.push(line.parse::<u64>().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("bad integer {line:?}"),
            })?);
        }
        Self::new(elements)
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn groups(&self) -> usize {
        self.elements.len() / 3
    }

    pub fn max_element(&self) -> u64 {
        *self.elements.last().unwrap()
    }
}

/// First solution found by backtracking on the smallest remaining
/// element; triples come out ascending and ordered by smallest member.
pub fn solve_distinct_3partition(inst: &ThreePartitionInstance) -> Option<Vec<[u64; 3]>> {
    fn go(pool: &[u64], target: u64, out: &mut Vec<[u64; 3]>) -> bool {
        if pool.is_empty() {
            return true;
        }
        let a = pool[0];
        for j in 1..pool.len() {
            let b = pool[j];
            if a + b >= target {
                break; // pool ascending: b only grows
            }
            for k in j + 1..pool.len() {
                let c = pool[k];
                if a + b + c > target {
                    break;
                }
                if a + b + c == target {
                    let mut rest: Vec<u64> = pool.to_vec();
                    rest.remove(k);
                    rest.remove(j);
                    rest.remove(0);
                    out.push([a, b, c]);
                    if go(&rest, target, out) {
                        return true;
                    }
                    out.pop();
                }
            }
        }
        false
    }
    let mut out = Vec::new();
    go(&inst.elements, inst.target, &mut out).then_some(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    /// Element segment for triple slot i (1-based), 2B-3 vertices.
    Triple(usize),
    /// Filler segment j realizing the j-th unused odd length.
    Filler(usize),
    /// Buffer segment Q_l with a tooth on every consecutive pair.
    Buffer(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GadgetMetadata {
    pub m: usize,
    pub groups: usize,
    pub target: u64,
    /// 2a-1 for each element, ascending.
    pub x_odd: Vec<u64>,
    /// Element segment length 2B-3.
    pub b_prime: usize,
    /// Odd lengths among 1..2m-1 not claimed by elements, ascending.
    pub filler: Vec<u64>,
    pub layout: Vec<Segment>,
    /// Center spine vertex of Q_l at index l-1.
    pub q_centers: Vec<usize>,
    /// Tooth vertex id range [start, end) of Q_l at index l-1.
    pub tooth_ranges: Vec<(usize, usize)>,
    pub spine_len: usize,
    pub interval_model: IntervalModel,
}

fn q_len(m: usize, l: usize) -> usize {
    2 * (2 * m + 1 - l) + 1
}

pub fn build_gadget(inst: &ThreePartitionInstance) -> Result<(Graph, GadgetMetadata)> {
    let m = inst.max_element() as usize;
    let n = inst.groups();
    let b_prime = (2 * inst.target() - 3) as usize;
    let x_odd: Vec<u64> = inst.elements().iter().map(|&a| 2 * a - 1).collect();
    let filler: Vec<u64> =
        (1..=m as u64).map(|i| 2 * i - 1).filter(|o| !x_odd.contains(o)).collect();
    let fills = filler.len();
    debug_assert_eq!(fills, m - 3 * n);

    let mut layout = Vec::new();
    let mut pos = 0usize;
    let mut push = |layout: &mut Vec<Segment>, kind: SegmentKind, len: usize| {
        layout.push(Segment { kind, start: pos, len });
        pos += len;
    };
    for i in 1..=n {
        push(&mut layout, SegmentKind::Triple(i), b_prime);
        push(&mut layout, SegmentKind::Buffer(i), q_len(m, i));
    }
    for j in 1..=fills {
        push(&mut layout, SegmentKind::Filler(j), filler[j - 1] as usize);
        push(&mut layout, SegmentKind::Buffer(n + j), q_len(m, n + j));
    }
    for l in n + fills + 1..=m + 1 {
        push(&mut layout, SegmentKind::Buffer(l), q_len(m, l));
    }
    let spine_len = pos;
    if spine_len != (2 * m + 1) * (2 * m + 1) {
        return Err(Error::Internal(format!(
            "segment lengths sum to {spine_len}, expected {}",
            (2 * m + 1) * (2 * m + 1)
        )));
    }

    let mut tooth_pairs = Vec::new();
    let mut q_centers = vec![0usize; m + 1];
    let mut tooth_ranges = vec![(0usize, 0usize); m + 1];
    for seg in &layout {
        if let SegmentKind::Buffer(l) = seg.kind {
            q_centers[l - 1] = seg.start + (seg.len - 1) / 2;
            let first_tooth = spine_len + tooth_pairs.len();
            tooth_pairs.extend(seg.start..seg.start + seg.len - 1);
            tooth_ranges[l - 1] = (first_tooth, spine_len + tooth_pairs.len());
        }
    }

    let (mut graph, interval_model) = comb(spine_len, &tooth_pairs)?;

    let mut labels = vec![String::new(); graph.n()];
    for seg in &layout {
        let prefix = match seg.kind {
            SegmentKind::Triple(i) => format!("S{i}"),
            SegmentKind::Filler(j) => format!("F{j}"),
            SegmentKind::Buffer(l) => format!("Q{l}"),
        };
        for off in 0..seg.len {
            labels[seg.start + off] = format!("{prefix}[{off}]");
        }
    }
    for (l_idx, &(lo, hi)) in tooth_ranges.iter().enumerate() {
        for (t, label) in labels[lo..hi].iter_mut().enumerate() {
            *label = format!("Q{}^{}", l_idx + 1, t + 1);
        }
    }
    graph.set_labels(labels)?;

    let meta = GadgetMetadata {
        m,
        groups: n,
        target: inst.target(),
        x_odd,
        b_prime,
        filler,
        layout,
        q_centers,
        tooth_ranges,
        spine_len,
        interval_model,
    };
    Ok((graph, meta))
}

/// Turns a solution of the instance into a burning sequence: refine each
/// element segment into its triple's odd pieces (ascending inside the
/// segment), order all spine pieces by decreasing length, and ignite
/// each piece's center. Horizon 2m+1. Triple i of `partition` feeds the
/// i-th element segment.
pub fn certificate_sequence(
    inst: &ThreePartitionInstance,
    partition: &[[u64; 3]],
    meta: &GadgetMetadata,
) -> Result<BurningSequence> {
    let mut flat: Vec<u64> = partition.iter().flatten().copied().collect();
    flat.sort_unstable();
    if flat != inst.elements() {
        return Err(Error::BadParams("partition does not use exactly the instance elements".into()));
    }
    if partition.iter().any(|t| t.iter().sum::<u64>() != inst.target()) {
        return Err(Error::BadParams("partition triple misses the target sum".into()));
    }
    if meta.b_prime != (2 * inst.target() - 3) as usize {
        return Err(Error::BadParams("metadata belongs to a different instance".into()));
    }

    let mut pieces: Vec<(usize, usize)> = Vec::new(); // (len, start)
    for seg in &meta.layout {
        match seg.kind {
            SegmentKind::Triple(i) => {
                let mut triple = partition[i - 1];
                triple.sort_unstable();
                let mut off = 0usize;
                for a in triple {
                    let len = (2 * a - 1) as usize;
                    pieces.push((len, seg.start + off));
                    off += len;
                }
            }
            SegmentKind::Filler(_) | SegmentKind::Buffer(_) => {
                pieces.push((seg.len, seg.start));
            }
        }
    }
    let mut lens: Vec<usize> = pieces.iter().map(|p| p.0).collect();
    lens.sort_unstable();
    let want: Vec<usize> = (1..=2 * meta.m + 1).map(|i| 2 * i - 1).collect();
    if lens != want {
        return Err(Error::Internal("refined pieces are not the first odd lengths".into()));
    }

    pieces.sort_by_key(|&(len, start)| (std::cmp::Reverse(len), start));
    let sources: Vec<usize> = pieces.iter().map(|&(len, start)| start + (len - 1) / 2).collect();
    BurningSequence::new(sources, 2 * meta.m + 1)
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub checks: Vec<StructureCheck>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Re-derives every structural promise of `build_gadget` from the graph
/// itself: sizes, spine path with no chords, tooth shape, segment
/// tiling, proper interval model, claw-freeness, and center reach.
pub fn verify_gadget_structure(g: &Graph, meta: &GadgetMetadata) -> StructureReport {
    let mut checks = Vec::new();
    let mut check = |name: &str, pass: bool, detail: String| {
        checks.push(StructureCheck { name: name.into(), pass, detail });
    };
    let m = meta.m;
    let s = meta.spine_len;

    let want_n = (2 * m + 1) * (2 * m + 1) + 3 * m * (m + 1);
    check(
        "vertex_count",
        g.n() == want_n && s == (2 * m + 1) * (2 * m + 1),
        format!("n={} expected {want_n}, spine={s}", g.n()),
    );

    let spine_ok = (0..s.saturating_sub(1)).all(|p| g.has_edge(p, p + 1));
    let chord = g
        .edges()
        .iter()
        .find(|&&(u, v)| u < s && v < s && v != u + 1);
    check(
        "spine_is_chordless_path",
        spine_ok && chord.is_none(),
        format!("consecutive edges {spine_ok}, chord {chord:?}"),
    );

    let mut teeth_ok = true;
    let mut detail = String::from("ok");
    for (l_idx, &(lo, hi)) in meta.tooth_ranges.iter().enumerate() {
        let seg = meta
            .layout
            .iter()
            .find(|sg| sg.kind == SegmentKind::Buffer(l_idx + 1))
            .expect("buffer segment present");
        if hi - lo != seg.len - 1 {
            teeth_ok = false;
            detail = format!("Q{} has {} teeth, expected {}", l_idx + 1, hi - lo, seg.len - 1);
            break;
        }
        for (t, tooth) in (lo..hi).enumerate() {
            let p = seg.start + t;
            if g.neighbors(tooth) != [p, p + 1] {
                teeth_ok = false;
                detail = format!("tooth {tooth} attaches to {:?}", g.neighbors(tooth));
                break;
            }
        }
    }
    check("teeth_cover_buffer_pairs", teeth_ok, detail);

    let mut tiled = true;
    let mut pos = 0usize;
    for seg in &meta.layout {
        let len_ok = match seg.kind {
            SegmentKind::Triple(_) => seg.len == meta.b_prime,
            SegmentKind::Filler(j) => seg.len == meta.filler[j - 1] as usize,
            SegmentKind::Buffer(l) => seg.len == q_len(m, l),
        };
        if seg.start != pos || !len_ok {
            tiled = false;
            break;
        }
        pos += seg.len;
    }
    check("segments_tile_spine", tiled && pos == s, format!("tiled to {pos} of {s}"));

    let proper = verify_interval_model(g, &meta.interval_model, true);
    check("interval_model_proper", matches!(proper, Ok(true)), format!("{proper:?}"));

    let mut claw = None;
    'outer: for v in 0..g.n() {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[j])
                        && !g.has_edge(nb[i], nb[k])
                        && !g.has_edge(nb[j], nb[k])
                    {
                        claw = Some((v, nb[i], nb[j], nb[k]));
                        break 'outer;
                    }
                }
            }
        }
    }
    check("claw_free", claw.is_none(), format!("{claw:?}"));

    let mut reach_ok = true;
    let mut detail = String::from("ok");
    for (l_idx, &(lo, hi)) in meta.tooth_ranges.iter().enumerate() {
        let l = l_idx + 1;
        let c = meta.q_centers[l_idx];
        let radius = 2 * m + 1 - l;
        let seg = meta
            .layout
            .iter()
            .find(|sg| sg.kind == SegmentKind::Buffer(l))
            .expect("buffer segment present");
        let center_ok = c == seg.start + (seg.len - 1) / 2;
        let teeth_in_reach = (lo..hi).enumerate().all(|(t, _)| {
            let p = seg.start + t;
            let d = 1 + (c.abs_diff(p)).min(c.abs_diff(p + 1));
            d <= radius
        });
        if !center_ok || !teeth_in_reach {
            reach_ok = false;
            detail = format!("Q{l} center {c} radius {radius}");
            break;
        }
    }
    check("buffer_centers_reach_their_teeth", reach_ok, detail);

    StructureReport { checks }
}

/// The gadget is a line graph of a caterpillar: spine vertex p is the
/// tree edge (w_p, w_{p+1}) and the tooth over (p, p+1) is a leaf edge
/// hung at w_{p+1}. Returns the caterpillar and, per line-graph vertex,
/// the gadget vertex it must map to; the map is verified here before
/// being returned.
pub fn caterpillar_preimage(g: &Graph, meta: &GadgetMetadata) -> Result<(Graph, Vec<usize>)> {
    let s = meta.spine_len;
    if s >= g.n() {
        return Err(Error::BadParams("metadata does not match the graph".into()));
    }
    let teeth = g.n() - s;
    let listed: usize = meta.tooth_ranges.iter().map(|&(lo, hi)| hi.saturating_sub(lo)).sum();
    if listed != teeth || meta.tooth_ranges.iter().any(|&(lo, hi)| lo > hi || lo < s || hi > g.n())
    {
        return Err(Error::BadParams("metadata does not match the graph".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..s).map(|p| (p, p + 1)).collect();
    let mut tooth_of_leaf = Vec::with_capacity(teeth);
    for &(lo, hi) in &meta.tooth_ranges {
        for tooth in lo..hi {
            let p = *g
                .neighbors(tooth)
                .first()
                .ok_or_else(|| Error::BadParams("tooth vertex has no attachment".into()))?;
            let leaf = s + 1 + tooth_of_leaf.len();
            edges.push((p + 1, leaf));
            tooth_of_leaf.push(tooth);
        }
    }
    let tree = Graph::build(s + 1 + teeth, &edges)?;
    if (0..tree.n()).any(|v| tree.degree(v) > 3) {
        return Err(Error::Internal("caterpillar degree exceeds 3".into()));
    }

    let (lg, lmap) = line_graph(&tree)?;
    if lg.n() != g.n() {
        return Err(Error::Internal("line graph size mismatch".into()));
    }
    let mut map = vec![0usize; lg.n()];
    for i in 0..lg.n() {
        map[i] = match lmap.origin(i) {
            Origin::Edge(u, v) if v <= s => u, // spine edge (p, p+1) -> spine p
            Origin::Edge(_, v) => tooth_of_leaf[v - (s + 1)],
            _ => return Err(Error::Internal("line graph vertex without edge origin".into())),
        };
    }
    if !isomorphic_by_map(&lg, g, &map) {
        return Err(Error::Internal("caterpillar line graph does not match the gadget".into()));
    }
    Ok((tree, map))
}
