//! Derived graphs (line, total, spike) with explicit origin maps, so
//! downstream code can translate burning sequences between a graph and
//! its derivations without re-deriving vertex roles.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// What a derived-graph vertex corresponds to in the source graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    Vertex(usize),
    /// Canonical edge (u, v) with u < v.
    Edge(usize, usize),
    /// Pendant vertex hung off the given source vertex.
    SpikeOf(usize),
}

/// forward[d] is the origin of derived vertex d; the indexing itself is
/// the bijection onto 0..derived_n.
#[derive(Debug, Clone)]
pub struct VertexMap {
    pub forward: Vec<Origin>,
}

impl VertexMap {
    pub fn origin(&self, derived: usize) -> Origin {
        self.forward[derived]
    }

    /// Derived id carrying edge (u, v), if any.
    pub fn derived_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = Origin::Edge(u.min(v), u.max(v));
        self.forward.iter().position(|&o| o == key)
    }

    pub fn derived_of_vertex(&self, v: usize) -> Option<usize> {
        self.forward.iter().position(|&o| o == Origin::Vertex(v))
    }
}

/// One vertex per edge of `g`; adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<(Graph, VertexMap)> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let forward: Vec<Origin> = g.edges().iter().map(|&(u, v)| Origin::Edge(u, v)).collect();
    // edge ids incident to each source vertex; every such group is a clique
    let mut incident = vec![Vec::new(); g.n()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(id);
        incident[v].push(id);
    }
    let mut edges = Vec::new();
    for group in &incident {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                edges.push((group[i], group[j]));
            }
        }
    }
    // two simple-graph edges share at most one endpoint, so no duplicates
    // arise across groups
    let lg = Graph::build(g.edge_count(), &edges)?;
    Ok((lg, VertexMap { forward }))
}

/// Vertices V + E; adjacency = original edges, edge-edge incidence at a
/// shared endpoint, and vertex-edge incidence.
pub fn total_graph(g: &Graph) -> Result<(Graph, VertexMap)> {
    let n = g.n();
    let mut forward: Vec<Origin> = (0..n).map(Origin::Vertex).collect();
    forward.extend(g.edges().iter().map(|&(u, v)| Origin::Edge(u, v)));

    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut incident = vec![Vec::new(); n];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(n + id);
        incident[v].push(n + id);
        edges.push((u, n + id));
        edges.push((v, n + id));
    }
    for group in &incident {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                edges.push((group[i], group[j]));
            }
        }
    }
    let tg = Graph::build(n + g.edge_count(), &edges)?;
    Ok((tg, VertexMap { forward }))
}

/// `g` plus one pendant neighbor for every vertex; pendant of v gets id n+v.
pub fn spike_graph(g: &Graph) -> Result<(Graph, VertexMap)> {
    let n = g.n();
    let mut forward: Vec<Origin> = (0..n).map(Origin::Vertex).collect();
    forward.extend((0..n).map(Origin::SpikeOf));
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, n + v)));
    let sg = Graph::build(2 * n, &edges)?;
    Ok((sg, VertexMap { forward }))
}
