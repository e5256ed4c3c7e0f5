//! Routes a graph to the construction that covers it.

use std::fmt;
use std::str::FromStr;

use crate::cycle::{hamilton_path_on_cycle, CycleOutcome};
use crate::domination::{DomGraph, DEFAULT_NODE_BUDGET};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::oracle::{brute_force_hamilton_path, SearchOptions, SearchOutcome};
use crate::path::HamPath;
use crate::reduction::reduce_unicyclic;
use crate::tree::{hamilton_path_tree_with_budget, lift_trace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Auto,
    Tree,
    Cycle,
    Unicyclic,
    Oracle,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "tree" => Ok(Method::Tree),
            "cycle" => Ok(Method::Cycle),
            "unicyclic" => Ok(Method::Unicyclic),
            "oracle" => Ok(Method::Oracle),
            other => Err(invalid(format!("unknown method {other:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Tree => "tree",
            Method::Cycle => "cycle",
            Method::Unicyclic => "unicyclic",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Cap on dominating sets held in memory.
    pub nodes: usize,
    /// Cap on node expansions in the exhaustive search.
    pub search: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: DEFAULT_NODE_BUDGET,
            search: crate::oracle::DEFAULT_SEARCH_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// A Hamilton path and the method that produced it.
    Path { path: HamPath, method: Method },
    /// No Hamilton path exists: by the cycle theorem or by exhaustive search.
    NonExistent { method: Method },
    /// The search budget ran out first.
    Unknown { explored: u64 },
}

impl Outcome {
    pub fn path(&self) -> Option<&HamPath> {
        match self {
            Outcome::Path { path, .. } => Some(path),
            _ => None,
        }
    }
}

pub fn hamilton_path_auto(g: &Graph, budget: Budget) -> Result<Outcome> {
    hamilton_path_with(g, Method::Auto, budget)
}

/// Runs `method` on `g`. `Auto` picks trees, cycles, unicyclic graphs that
/// reduce onto a cycle of length `≢ 0 (mod 4)`, and otherwise the bounded
/// exhaustive search.
pub fn hamilton_path_with(g: &Graph, method: Method, budget: Budget) -> Result<Outcome> {
    match method {
        Method::Tree => tree(g, budget),
        Method::Cycle => cycle(g),
        Method::Unicyclic => unicyclic(g, budget)?.ok_or_else(|| {
            invalid("cycle length is divisible by 4, so the cycle has no path to lift")
        }),
        Method::Oracle => Ok(oracle(g, budget)),
        Method::Auto => {
            if g.is_tree() {
                tree(g, budget)
            } else if g.is_cycle() {
                cycle(g)
            } else if g.is_unicyclic() {
                match unicyclic(g, budget) {
                    Ok(Some(outcome)) => Ok(outcome),
                    Ok(None) | Err(Error::NotReducible { .. }) => Ok(oracle(g, budget)),
                    Err(e) => Err(e),
                }
            } else {
                Ok(oracle(g, budget))
            }
        }
    }
}

fn tree(g: &Graph, budget: Budget) -> Result<Outcome> {
    Ok(Outcome::Path {
        path: hamilton_path_tree_with_budget(g, budget.nodes)?,
        method: Method::Tree,
    })
}

fn cycle(g: &Graph) -> Result<Outcome> {
    Ok(match hamilton_path_on_cycle(g)? {
        CycleOutcome::Path(path) => Outcome::Path {
            path,
            method: Method::Cycle,
        },
        CycleOutcome::NonExistent => Outcome::NonExistent {
            method: Method::Cycle,
        },
    })
}

/// `None` when the graph reduces to a cycle whose length is divisible by 4.
fn unicyclic(g: &Graph, budget: Budget) -> Result<Option<Outcome>> {
    let trace = reduce_unicyclic(g)?;
    let seed = match hamilton_path_on_cycle(trace.base())? {
        CycleOutcome::Path(p) => p,
        CycleOutcome::NonExistent => return Ok(None),
    };
    Ok(Some(Outcome::Path {
        path: lift_trace(&trace, seed, budget.nodes)?,
        method: Method::Unicyclic,
    }))
}

fn oracle(g: &Graph, budget: Budget) -> Outcome {
    let dg = match DomGraph::with_budget(g, budget.nodes) {
        Ok(dg) => dg,
        Err(_) => return Outcome::Unknown { explored: 0 },
    };
    match brute_force_hamilton_path(&dg, SearchOptions::with_budget(budget.search)) {
        SearchOutcome::Found { path, .. } => Outcome::Path {
            path,
            method: Method::Oracle,
        },
        SearchOutcome::NotExists { .. } => Outcome::NonExistent {
            method: Method::Oracle,
        },
        SearchOutcome::BudgetExceeded { explored } => Outcome::Unknown { explored },
    }
}
