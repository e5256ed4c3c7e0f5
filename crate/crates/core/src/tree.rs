//! Hamilton paths in dominating graphs of trees: reduce to one or two
//! vertices, start from the trivial path there, then lift back out.

use crate::domination::DEFAULT_NODE_BUDGET;
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::lifting::lift;
use crate::path::HamPath;
use crate::reduction::{reduce_tree_to_base, ReductionTrace};
use crate::vertex_set::VertexSet;

/// `[{a}]` for a single vertex, `[{a}, {a,b}, {b}]` for an edge `a < b`.
pub fn base_path(g: &Graph) -> Result<HamPath> {
    let active: Vec<usize> = g.active().iter().collect();
    match active[..] {
        [a] => Ok(HamPath::new(vec![VertexSet::singleton(a)])),
        [a, b] if g.has_edge(a, b) => Ok(HamPath::new(vec![
            VertexSet::singleton(a),
            VertexSet::from_iter([a, b]),
            VertexSet::singleton(b),
        ])),
        _ => Err(invalid(
            "base graph must be a single vertex or a single edge",
        )),
    }
}

/// Lifts `seed`, a Hamilton path of `D(trace.base())`, through every step of
/// `trace` from last to first.
pub fn lift_trace(trace: &ReductionTrace, seed: HamPath, budget: usize) -> Result<HamPath> {
    let mut path = seed;
    for (i, step) in trace.steps().iter().enumerate().rev() {
        path = lift(&path, trace.graph_before(i), step.reduction, budget)?;
    }
    Ok(path)
}

pub fn hamilton_path_tree(t: &Graph) -> Result<HamPath> {
    hamilton_path_tree_with_budget(t, DEFAULT_NODE_BUDGET)
}

pub fn hamilton_path_tree_with_budget(t: &Graph, budget: usize) -> Result<HamPath> {
    let trace = reduce_tree_to_base(t)?;
    let seed = base_path(trace.base())?;
    lift_trace(&trace, seed, budget)
}
