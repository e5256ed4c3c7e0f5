//! Dominating sets and the dominating graph `D(H)`.
//!
//! The nodes of `D(H)` are the dominating sets of `H`; two nodes are adjacent
//! when they differ in exactly one vertex.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on the number of dominating sets materialized at once.
pub const DEFAULT_NODE_BUDGET: usize = 1 << 22;

/// True iff every active vertex outside `s` has a neighbor in `s`.
///
/// Fails if `s` names an inactive vertex.
pub fn is_dominating(g: &Graph, s: VertexSet) -> Result<bool> {
    if !s.is_subset(g.active()) {
        return Err(invalid(format!(
            "set {s} contains vertices outside the active set {}",
            g.active()
        )));
    }
    Ok(dominates(g, s))
}

/// [`is_dominating`] without the membership check.
pub(crate) fn dominates(g: &Graph, s: VertexSet) -> bool {
    g.active()
        .difference(s)
        .iter()
        .all(|v| !g.neighbors(v).is_disjoint(s))
}

pub fn enumerate_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_dominating_sets_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// All dominating sets of `g` in ascending bit-vector order.
///
/// Vertices are decided from the highest label down, excluded before included,
/// which emits sets in ascending order. A vertex is checked as soon as every
/// member of its closed neighborhood has been decided.
pub fn enumerate_dominating_sets_with_budget(g: &Graph, budget: usize) -> Result<Vec<VertexSet>> {
    let order: Vec<usize> = g.active().iter().rev().collect();
    // due[k]: vertices whose closed neighborhoods are fully decided once order[k] is.
    let mut due = vec![VertexSet::EMPTY; order.len()];
    for v in g.active() {
        let lowest = g.closed_neighborhood(v).first().expect("contains v");
        let k = order.iter().position(|&w| w == lowest).expect("active");
        due[k].insert(v);
    }
    let mut search = Enumeration {
        g,
        order: &order,
        due: &due,
        budget,
        out: Vec::new(),
    };
    search.descend(0, VertexSet::EMPTY)?;
    Ok(search.out)
}

struct Enumeration<'a> {
    g: &'a Graph,
    order: &'a [usize],
    due: &'a [VertexSet],
    budget: usize,
    out: Vec<VertexSet>,
}

impl Enumeration<'_> {
    fn descend(&mut self, k: usize, chosen: VertexSet) -> Result<()> {
        if k == self.order.len() {
            if self.out.len() >= self.budget {
                return Err(Error::ResourceLimit(format!(
                    "more than {} dominating sets",
                    self.budget
                )));
            }
            self.out.push(chosen);
            return Ok(());
        }
        let v = self.order[k];
        for next in [chosen, chosen.with(v)] {
            let ok = self.due[k]
                .iter()
                .all(|d| next.contains(d) || !self.g.neighbors(d).is_disjoint(next));
            if ok {
                self.descend(k + 1, next)?;
            }
        }
        Ok(())
    }
}

/// Explicit dominating graph: the sorted list of dominating sets of `host`.
/// Adjacency is Hamming distance one and is answered by lookup.
#[derive(Clone, Debug)]
pub struct DomGraph {
    host: Graph,
    nodes: Vec<VertexSet>,
}

pub fn build_dominating_graph(g: &Graph) -> Result<DomGraph> {
    DomGraph::with_budget(g, DEFAULT_NODE_BUDGET)
}

#[derive(Clone, Debug, Serialize)]
pub struct DomGraphDocument {
    pub n: usize,
    pub nodes: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl DomGraph {
    pub fn with_budget(g: &Graph, budget: usize) -> Result<Self> {
        Ok(DomGraph {
            host: g.clone(),
            nodes: enumerate_dominating_sets_with_budget(g, budget)?,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.nodes.binary_search(&s).ok()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.index_of(s).is_some()
    }

    pub fn is_adjacent(&self, a: VertexSet, b: VertexSet) -> bool {
        a.symmetric_difference(b).len() == 1 && self.contains(a) && self.contains(b)
    }

    /// Indices of the neighbors of node `i`, ascending.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let s = self.nodes[i];
        let mut out: Vec<usize> = self
            .host
            .active()
            .iter()
            .filter_map(|v| self.index_of(s.toggle(v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Edges `(i, j)` with `i < j` over node indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &s) in self.nodes.iter().enumerate() {
            for v in self.host.active().difference(s) {
                if let Some(j) = self.index_of(s.with(v)) {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Sizes of the (even-cardinality, odd-cardinality) node classes.
    pub fn parity_classes(&self) -> (usize, usize) {
        let odd = self.nodes.iter().filter(|s| s.len() % 2 == 1).count();
        (self.nodes.len() - odd, odd)
    }

    fn label(&self, s: VertexSet) -> String {
        s.to_binary_string(self.host.n())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph D {\n");
        for &s in &self.nodes {
            let _ = writeln!(out, "  \"{}\";", self.label(s));
        }
        for (i, j) in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.label(self.nodes[i]),
                self.label(self.nodes[j])
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_document(&self) -> DomGraphDocument {
        DomGraphDocument {
            n: self.host.n(),
            nodes: self.nodes.iter().map(|&s| self.label(s)).collect(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}
