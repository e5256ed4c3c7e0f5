//! Simple undirected graphs on the labels `0..n`.
//!
//! Deleting a vertex only marks it inactive. Labels are never renumbered, so a
//! vertex set of a subgraph is also a valid vertex set of every supergraph it
//! was cut from.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    active: VertexSet,
}

/// Structured graph document: `{"n": 4, "edges": [[0, 1], [1, 2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Edgeless graph on `0..n`, all vertices active.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(invalid(format!(
                "{n} vertices requested, at most {MAX_VERTICES} are supported"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            active: VertexSet::prefix(n),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(invalid(format!(
                "edge {u}-{v} references a vertex outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Parses an edge list: one `u v` pair per line, `#` comments and blank
    /// lines ignored. The vertex count is the largest label plus one.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut n = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(parse_err(format!(
                    "expected two vertex labels, found {}",
                    fields.len()
                )));
            }
            let mut ends = [0usize; 2];
            for (slot, field) in ends.iter_mut().zip(&fields) {
                *slot = field
                    .parse()
                    .map_err(|_| parse_err(format!("{field:?} is not a vertex label")))?;
                if *slot >= MAX_VERTICES {
                    return Err(parse_err(format!(
                        "label {slot} exceeds the maximum {}",
                        MAX_VERTICES - 1
                    )));
                }
            }
            if ends[0] == ends[1] {
                return Err(parse_err(format!("self-loop at vertex {}", ends[0])));
            }
            n = n.max(ends[0] + 1).max(ends[1] + 1);
            edges.push((ends[0], ends[1]));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Graph::from_document(&doc)
    }

    /// Accepts either input format; documents starting with `{` are read as JSON.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Graph::parse_json(text)
        } else {
            Graph::parse_edge_list(text)
        }
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(doc.n, &edges)
    }

    /// Only active vertices and the edges between them are emitted.
    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            n: self.n,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Size of the label space, including inactive labels.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn active(&self) -> VertexSet {
        self.active
    }

    pub fn active_count(&self) -> usize {
        self.active.len()
    }

    pub fn is_active(&self, v: usize) -> bool {
        self.active.contains(v)
    }

    /// Open neighborhood of `v` among the active vertices.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        if self.is_active(v) {
            self.adj[v].intersection(self.active)
        } else {
            VertexSet::EMPTY
        }
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.is_active(u) && self.neighbors(u).contains(v)
    }

    /// Active edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.active.iter().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.active.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Copy of the graph with every vertex of `removed` deactivated.
    pub fn without(&self, removed: VertexSet) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj.clone(),
            active: self.active.difference(removed),
        }
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        self.without(VertexSet::singleton(v))
    }

    /// Active vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        if !self.is_active(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected with at least one active vertex.
    pub fn is_connected(&self) -> bool {
        match self.active.first() {
            Some(v) => self.component_of(v) == self.active,
            None => false,
        }
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.active_count()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.edge_count() == self.active_count()
    }

    /// Connected and 2-regular on at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.active_count() >= 3
            && self.is_connected()
            && self.active.iter().all(|v| self.degree(v) == 2)
    }

    /// Vertices left after repeatedly stripping vertices of degree at most one.
    /// For a unicyclic graph this is exactly its cycle.
    pub fn two_core(&self) -> VertexSet {
        let mut g = self.clone();
        loop {
            let peel: VertexSet = g.active.iter().filter(|&v| g.degree(v) <= 1).collect();
            if peel.is_empty() {
                return g.active;
            }
            g.active = g.active.difference(peel);
        }
    }

    /// Active vertices of a cycle graph in cyclic order, starting at the smallest
    /// label and continuing towards its smaller-labeled neighbor.
    pub fn cycle_order(&self) -> Result<Vec<usize>> {
        if !self.is_cycle() {
            return Err(invalid("graph is not a cycle"));
        }
        let start = self.active.first().expect("cycle is nonempty");
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = self.neighbors(start).first().expect("degree two");
        while cur != start {
            order.push(cur);
            let next = self
                .neighbors(cur)
                .without(prev)
                .first()
                .expect("degree two");
            prev = cur;
            cur = next;
        }
        Ok(order)
    }
}
