//! Ground truth for the constructive pipelines: path verification by direct
//! definition checks, exhaustive Hamilton path search, and parity counts.

use std::collections::HashSet;

use serde::Serialize;

use crate::domination::{enumerate_dominating_sets_with_budget, DomGraph, DEFAULT_NODE_BUDGET};
use crate::error::Result;
use crate::graph::Graph;
use crate::path::HamPath;
use crate::vertex_set::VertexSet;

/// Default cap on node expansions for [`brute_force_hamilton_path`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Largest active vertex count for which sets are counted by scanning every subset.
const NAIVE_COUNT_LIMIT: usize = 22;

fn dominates_by_definition(g: &Graph, s: VertexSet) -> bool {
    if !s.is_subset(g.active()) {
        return false;
    }
    g.active()
        .iter()
        .filter(|&y| !s.contains(y))
        .all(|y| s.iter().any(|z| g.has_edge(y, z)))
}

/// Number of dominating sets of `g`, by scanning all subsets of the active
/// vertices when that is affordable.
pub fn count_dominating_sets(g: &Graph) -> Result<usize> {
    let active: Vec<usize> = g.active().iter().collect();
    if active.len() > NAIVE_COUNT_LIMIT {
        return Ok(enumerate_dominating_sets_with_budget(g, DEFAULT_NODE_BUDGET)?.len());
    }
    let mut count = 0;
    for mask in 0u32..(1 << active.len()) {
        let s: VertexSet = active
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &v)| v)
            .collect();
        if dominates_by_definition(g, s) {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub steps: usize,
    /// Number of dominating sets of the graph, if it could be counted.
    pub expected_steps: Option<usize>,
    pub all_dominating: bool,
    pub all_distinct: bool,
    pub single_changes: bool,
    pub complete: bool,
    /// Index of the first step that is not a dominating set.
    pub first_non_dominating: Option<usize>,
    /// Index of the first step equal to an earlier one.
    pub first_repeat: Option<usize>,
    /// Index `i` of the first pair `(i, i+1)` not differing in exactly one vertex.
    pub first_bad_change: Option<usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.all_dominating && self.all_distinct && self.single_changes && self.complete
    }

    /// Smallest index at which some check fails.
    pub fn first_failure(&self) -> Option<usize> {
        [
            self.first_non_dominating,
            self.first_repeat,
            self.first_bad_change,
        ]
        .into_iter()
        .flatten()
        .min()
    }
}

pub fn verify_hamilton_path(g: &Graph, p: &HamPath) -> VerificationReport {
    let first_non_dominating = p.iter().position(|s| !dominates_by_definition(g, s));
    let mut seen = HashSet::with_capacity(p.len());
    let first_repeat = p.iter().position(|s| !seen.insert(s));
    let first_bad_change = p
        .steps()
        .windows(2)
        .position(|w| (w[0].bits() ^ w[1].bits()).count_ones() != 1);
    let expected_steps = count_dominating_sets(g).ok();
    VerificationReport {
        steps: p.len(),
        expected_steps,
        all_dominating: first_non_dominating.is_none(),
        all_distinct: first_repeat.is_none(),
        single_changes: first_bad_change.is_none(),
        complete: expected_steps == Some(p.len()),
        first_non_dominating,
        first_repeat,
        first_bad_change,
    }
}

/// Order in which the search tries the unvisited neighbors of the current node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborOrder {
    /// Ascending bit-vector value.
    Ascending,
    /// Fewest unvisited neighbors first, ties by ascending bit-vector value.
    FewestFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of node expansions.
    pub budget: u64,
    /// Parity, dead-end and connectivity pruning. Turning it off gives a plain
    /// backtracking search, used to cross-check the pruning rules.
    pub pruning: bool,
    pub order: NeighborOrder,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_SEARCH_BUDGET,
            pruning: true,
            order: NeighborOrder::FewestFree,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget,
            ..Self::default()
        }
    }

    /// Unpruned search in ascending order.
    pub fn plain(budget: u64) -> Self {
        SearchOptions {
            budget,
            pruning: false,
            order: NeighborOrder::Ascending,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { path: HamPath, explored: u64 },
    NotExists { explored: u64 },
    BudgetExceeded { explored: u64 },
}

impl SearchOutcome {
    pub fn explored(&self) -> u64 {
        match *self {
            SearchOutcome::Found { explored, .. }
            | SearchOutcome::NotExists { explored }
            | SearchOutcome::BudgetExceeded { explored } => explored,
        }
    }
}

/// Depth-first search for a Hamilton path of `dg`. Start nodes are tried in
/// ascending bit-vector order and neighbors in the order given by `opts`.
///
/// `D(H)` is bipartite by set-size parity, so with pruning on the search stops
/// at once if the classes differ by more than one and otherwise starts only in
/// the larger class. During the search a branch is cut when some unvisited
/// node has no remaining way in, when two unvisited nodes could only be the
/// final endpoint, or when the unvisited nodes are not all reachable from the
/// current one.
pub fn brute_force_hamilton_path(dg: &DomGraph, opts: SearchOptions) -> SearchOutcome {
    let n = dg.node_count();
    if n == 0 {
        return SearchOutcome::NotExists { explored: 0 };
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|i| dg.neighbors(i)).collect();
    let odd: Vec<bool> = dg.nodes().iter().map(|s| s.len() % 2 == 1).collect();

    let mut starts: Vec<usize> = (0..n).collect();
    if opts.pruning {
        let odd_count = odd.iter().filter(|&&b| b).count();
        let even_count = n - odd_count;
        if odd_count.abs_diff(even_count) > 1 {
            return SearchOutcome::NotExists { explored: 0 };
        }
        if odd_count != even_count {
            let larger_is_odd = odd_count > even_count;
            starts.retain(|&i| odd[i] == larger_is_odd);
        }
    }

    let mut search = Search {
        adj: &adj,
        visited: vec![false; n],
        free_degree: adj.iter().map(Vec::len).collect(),
        path: Vec::with_capacity(n),
        explored: 0,
        opts,
        scratch: Vec::with_capacity(n),
        mark: vec![false; n],
    };
    for s in starts {
        match search.run_from(s) {
            Step::Found => {
                let path = search.path.iter().map(|&i| dg.nodes()[i]).collect();
                return SearchOutcome::Found {
                    path,
                    explored: search.explored,
                };
            }
            Step::OutOfBudget => {
                return SearchOutcome::BudgetExceeded {
                    explored: search.explored,
                }
            }
            Step::Exhausted => {}
        }
    }
    SearchOutcome::NotExists {
        explored: search.explored,
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Frame {
    candidates: Vec<usize>,
    next: usize,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    visited: Vec<bool>,
    /// Unvisited neighbors of each node.
    free_degree: Vec<usize>,
    path: Vec<usize>,
    explored: u64,
    opts: SearchOptions,
    scratch: Vec<usize>,
    mark: Vec<bool>,
}

impl Search<'_> {
    fn visit(&mut self, i: usize) {
        self.visited[i] = true;
        self.path.push(i);
        for &j in &self.adj[i] {
            self.free_degree[j] -= 1;
        }
    }

    fn unvisit(&mut self) {
        let i = self.path.pop().expect("nonempty path");
        self.visited[i] = false;
        for &j in &self.adj[i] {
            self.free_degree[j] += 1;
        }
    }

    fn frame(&self, cur: usize) -> Frame {
        let mut candidates: Vec<usize> = self.adj[cur]
            .iter()
            .copied()
            .filter(|&j| !self.visited[j])
            .collect();
        if self.opts.order == NeighborOrder::FewestFree {
            candidates.sort_by_key(|&j| (self.free_degree[j], j));
        }
        Frame {
            candidates,
            next: 0,
        }
    }

    /// Whether the unvisited nodes can still be threaded into a path hanging
    /// off the current endpoint.
    fn feasible(&mut self) -> bool {
        let remaining = self.visited.len() - self.path.len();
        if remaining <= 1 {
            return true;
        }
        let cur = *self.path.last().expect("nonempty path");
        let mut endpoints = 0;
        for y in (0..self.visited.len()).filter(|&y| !self.visited[y]) {
            let links = self.free_degree[y] + usize::from(self.adj[cur].contains(&y));
            match links {
                0 => return false,
                1 => {
                    endpoints += 1;
                    if endpoints > 1 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        // Every unvisited node must be reachable from `cur` through unvisited nodes.
        self.scratch.clear();
        self.mark.iter_mut().for_each(|m| *m = false);
        let mut reached = 0;
        for &j in &self.adj[cur] {
            if !self.visited[j] && !self.mark[j] {
                self.mark[j] = true;
                self.scratch.push(j);
            }
        }
        while let Some(a) = self.scratch.pop() {
            reached += 1;
            for &b in &self.adj[a] {
                if !self.visited[b] && !self.mark[b] {
                    self.mark[b] = true;
                    self.scratch.push(b);
                }
            }
        }
        reached == remaining
    }

    fn run_from(&mut self, start: usize) -> Step {
        let n = self.visited.len();
        if self.explored >= self.opts.budget {
            return Step::OutOfBudget;
        }
        self.explored += 1;
        self.visit(start);
        let mut frames = vec![self.frame(start)];
        loop {
            if self.path.len() == n {
                return Step::Found;
            }
            let frame = frames.last_mut().expect("frame per path node");
            match frame.candidates.get(frame.next).copied() {
                Some(j) => {
                    frame.next += 1;
                    if self.explored >= self.opts.budget {
                        while !self.path.is_empty() {
                            self.unvisit();
                        }
                        return Step::OutOfBudget;
                    }
                    self.explored += 1;
                    self.visit(j);
                    if self.opts.pruning && !self.feasible() {
                        self.unvisit();
                    } else {
                        frames.push(self.frame(j));
                    }
                }
                None => {
                    self.unvisit();
                    frames.pop();
                    if self.path.is_empty() {
                        return Step::Exhausted;
                    }
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub count: usize,
    pub odd: bool,
    /// Dominating sets of even cardinality.
    pub even_class: usize,
    /// Dominating sets of odd cardinality.
    pub odd_class: usize,
}

impl ParityReport {
    /// Unequal classes rule out a Hamilton cycle in the bipartite graph `D(H)`.
    pub fn classes_unequal(&self) -> bool {
        self.even_class != self.odd_class
    }
}

pub fn parity_check(g: &Graph) -> Result<ParityReport> {
    Ok(parity_of(&DomGraph::with_budget(g, DEFAULT_NODE_BUDGET)?))
}

pub fn parity_of(dg: &DomGraph) -> ParityReport {
    let (even_class, odd_class) = dg.parity_classes();
    let count = dg.node_count();
    ParityReport {
        count,
        odd: count % 2 == 1,
        even_class,
        odd_class,
    }
}
