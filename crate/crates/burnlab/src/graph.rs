//! Undirected simple graphs on dense vertex ids 0..n-1, plus the text
//! formats the CLI speaks (edge list in, edge list / DOT out).

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    // canonical: each edge stored once as (u, v) with u < v, sorted
    edges: Vec<(usize, usize)>,
    // sorted neighbor lists, derived from `edges`
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Normalizes the edge set: rejects self-loops and out-of-range
    /// endpoints, deduplicates, and orders edges canonically.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: canon, adj, labels: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return Err(Error::BadParams(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Induced subgraph on `verts` (deduplicated, sorted). Returns the
    /// subgraph and the map from new ids to the original ids.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut keep: Vec<usize> = verts.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if back[u] != usize::MAX && back[v] != usize::MAX {
                edges.push((back[u], back[v]));
            }
        }
        Ok((Graph::build(keep.len(), &edges)?, keep))
    }

    /// Parses "n m" on the first line, then m lines "u v".
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines
            .next()
            .ok_or(Error::Parse { line: 1, msg: "empty input, expected \"n m\" header".into() })?;
        let mut parts = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize| -> Result<usize> {
            tok.ok_or(Error::Parse { line, msg: "expected two integers".into() })?
                .parse()
                .map_err(|_| Error::Parse { line, msg: format!("bad integer in {header:?}") })
        };
        let n = parse_num(parts.next(), line_no)?;
        let m = parse_num(parts.next(), line_no)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = lines.next().ok_or(Error::Parse {
                line: line_no,
                msg: format!("expected {m} edge lines, found {}", edges.len()),
            })?;
            let mut parts = line.split_whitespace();
            let u = parse_num(parts.next(), line_no)?;
            let v = parse_num(parts.next(), line_no)?;
            edges.push((u, v));
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse { line: line_no, msg: "trailing content after edge list".into() });
        }
        Graph::build(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            match self.label(v) {
                Some(l) => {
                    let _ = writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\""));
                }
                None if self.degree(v) == 0 => {
                    let _ = writeln!(out, "  {v};");
                }
                None => {}
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
