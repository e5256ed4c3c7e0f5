//! Operations I and II and the reducers built on them.
//!
//! Operation I deletes one of two leaves hanging off the same vertex.
//! Operation II deletes a pendant path `u - v - w` down to `u`, where `w` is a
//! leaf and `v` has degree two.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum Reduction {
    /// `N(u) = N(v) = {x}`; `v` is deleted.
    OpI { u: usize, v: usize, x: usize },
    /// `N(v) = {u, w}` and `N(w) = {v}`; `v` and `w` are deleted.
    OpII { u: usize, v: usize, w: usize },
}

impl Reduction {
    /// The vertices this reduction removes.
    pub fn deleted(&self) -> VertexSet {
        match *self {
            Reduction::OpI { v, .. } => VertexSet::singleton(v),
            Reduction::OpII { v, w, .. } => VertexSet::from_iter([v, w]),
        }
    }

    pub fn validate(&self, h: &Graph) -> Result<()> {
        let (a, b, c) = match *self {
            Reduction::OpI { u, v, x } => (u, v, x),
            Reduction::OpII { u, v, w } => (u, v, w),
        };
        if a == b || b == c || a == c {
            return Err(invalid(format!("{self:?}: vertices must be distinct")));
        }
        if let Some(bad) = [a, b, c].into_iter().find(|&z| !h.is_active(z)) {
            return Err(invalid(format!("{self:?}: vertex {bad} is not active")));
        }
        let ok = match *self {
            Reduction::OpI { u, v, x } => {
                let only_x = VertexSet::singleton(x);
                h.neighbors(u) == only_x && h.neighbors(v) == only_x
            }
            Reduction::OpII { u, v, w } => {
                h.neighbors(v) == VertexSet::from_iter([u, w])
                    && h.neighbors(w) == VertexSet::singleton(v)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!(
                "{self:?} does not match the graph's neighborhoods"
            )))
        }
    }

    /// Validates and applies either operation.
    pub fn apply(&self, h: &Graph) -> Result<Graph> {
        self.validate(h)?;
        Ok(h.without(self.deleted()))
    }
}

/// `H - v` for an Operation I triple.
pub fn apply_op1(h: &Graph, r: Reduction) -> Result<Graph> {
    match r {
        Reduction::OpI { .. } => r.apply(h),
        Reduction::OpII { .. } => Err(invalid("expected an Operation I triple")),
    }
}

/// `H - w - v` for an Operation II triple.
pub fn apply_op2(h: &Graph, r: Reduction) -> Result<Graph> {
    match r {
        Reduction::OpII { .. } => r.apply(h),
        Reduction::OpI { .. } => Err(invalid("expected an Operation II triple")),
    }
}

enum Detection {
    Found(Reduction),
    /// The deepest leaf hangs alone off this root; nothing below a root can be
    /// removed there.
    Blocked(usize),
    /// No non-root vertices remain.
    Exhausted,
}

/// Takes a deepest leaf `l` (smallest label on ties) of the forest hanging off
/// `roots`, with parent `p`. All children of `p` are leaves, so either `p` has a
/// second leaf child (Operation I) or `p` has degree two (Operation II), unless
/// `p` is itself a root.
fn detect(g: &Graph, roots: VertexSet) -> Detection {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut frontier: Vec<usize> = roots.iter().collect();
    for &r in &frontier {
        depth[r] = 0;
    }
    let mut seen = roots;
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &a in &frontier {
            for b in g.neighbors(a).difference(seen) {
                seen.insert(b);
                depth[b] = level;
                parent[b] = a;
                next.push(b);
            }
        }
        frontier = next;
    }

    let leaf = g
        .active()
        .difference(roots)
        .iter()
        .filter(|&v| g.degree(v) == 1)
        .max_by(|&a, &b| depth[a].cmp(&depth[b]).then(b.cmp(&a)));
    let Some(leaf) = leaf else {
        return Detection::Exhausted;
    };
    let p = parent[leaf];
    let sibling = g
        .neighbors(p)
        .difference(roots)
        .without(leaf)
        .iter()
        .find(|&s| g.degree(s) == 1 && parent[s] == p);
    if let Some(sibling) = sibling {
        let (u, v) = (leaf.min(sibling), leaf.max(sibling));
        return Detection::Found(Reduction::OpI { u, v, x: p });
    }
    if !roots.contains(p) && g.degree(p) == 2 {
        return Detection::Found(Reduction::OpII {
            u: parent[p],
            v: p,
            w: leaf,
        });
    }
    Detection::Blocked(p)
}

/// Picks a reduction applicable to a tree on at least three vertices.
///
/// The tree is rooted at its smallest-labeled non-leaf vertex. For Operation I
/// the two smallest sibling leaves are used and the larger one is deleted.
pub fn find_reduction(t: &Graph) -> Result<Reduction> {
    if !t.is_tree() {
        return Err(invalid("graph is not a tree"));
    }
    if t.active_count() < 3 {
        return Err(Error::Underflow {
            active: t.active_count(),
        });
    }
    let root = t
        .active()
        .iter()
        .find(|&v| t.degree(v) >= 2)
        .expect("a tree on three or more vertices has an internal vertex");
    match detect(t, VertexSet::singleton(root)) {
        Detection::Found(r) => Ok(r),
        Detection::Blocked(_) | Detection::Exhausted => Err(Error::ConstructionFailed(
            "no Operation I or II triple found in a tree".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub reduction: Reduction,
    /// Graph after applying `reduction`.
    pub graph: Graph,
}

/// A sequence of reductions from `start` down to a base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    start: Graph,
    steps: Vec<TraceStep>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceDocument {
    pub n: usize,
    pub start: Vec<usize>,
    pub steps: Vec<TraceStepDocument>,
    pub base: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStepDocument {
    #[serde(flatten)]
    pub reduction: Reduction,
    pub remaining: Vec<usize>,
}

impl ReductionTrace {
    pub fn start(&self) -> &Graph {
        &self.start
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn base(&self) -> &Graph {
        self.steps.last().map_or(&self.start, |s| &s.graph)
    }

    /// Graph the `i`-th reduction was applied to.
    pub fn graph_before(&self, i: usize) -> &Graph {
        if i == 0 {
            &self.start
        } else {
            &self.steps[i - 1].graph
        }
    }

    fn push(&mut self, reduction: Reduction) -> Result<()> {
        let graph = reduction.apply(self.base())?;
        self.steps.push(TraceStep { reduction, graph });
        Ok(())
    }

    pub fn to_document(&self) -> TraceDocument {
        TraceDocument {
            n: self.start.n(),
            start: self.start.active().iter().collect(),
            steps: self
                .steps
                .iter()
                .map(|s| TraceStepDocument {
                    reduction: s.reduction,
                    remaining: s.graph.active().iter().collect(),
                })
                .collect(),
            base: self.base().active().iter().collect(),
        }
    }
}

/// Reduces a tree to one or two vertices.
pub fn reduce_tree_to_base(t: &Graph) -> Result<ReductionTrace> {
    if !t.is_tree() {
        return Err(invalid("graph is not a tree"));
    }
    let mut trace = ReductionTrace {
        start: t.clone(),
        steps: Vec::new(),
    };
    while trace.base().active_count() >= 3 {
        let r = find_reduction(trace.base())?;
        trace.push(r)?;
    }
    Ok(trace)
}

/// Strips the pendant trees of a unicyclic graph onto its cycle, never deleting
/// a cycle vertex. Fails with [`Error::NotReducible`] naming the cycle vertex
/// whose pendant tree gets stuck under this deterministic rule.
pub fn reduce_unicyclic(g: &Graph) -> Result<ReductionTrace> {
    if !g.is_unicyclic() {
        return Err(invalid("graph is not unicyclic"));
    }
    let cycle = g.two_core();
    let mut trace = ReductionTrace {
        start: g.clone(),
        steps: Vec::new(),
    };
    loop {
        match detect(trace.base(), cycle) {
            Detection::Exhausted => return Ok(trace),
            Detection::Blocked(attachment) => return Err(Error::NotReducible { attachment }),
            Detection::Found(r) => {
                debug_assert!(r.deleted().is_disjoint(cycle));
                trace.push(r)?;
            }
        }
    }
}
