//! Lifting a Hamilton path of `D(H')` back to `D(H)` when `H'` was obtained
//! from `H` by Operation I or Operation II.

use std::collections::HashSet;

use crate::domination::{dominates, enumerate_dominating_sets_with_budget, DEFAULT_NODE_BUDGET};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::path::HamPath;
use crate::reduction::Reduction;
use crate::vertex_set::VertexSet;

/// Where a dominating set `F` of `H'` sits relative to the Operation I triple.
/// Every such `F` contains `x` or `u`, since `u` must be dominated in `H'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpIClass {
    /// `x ∈ F`, `u ∉ F`.
    XOnly,
    /// `x, u ∈ F`.
    Both,
    /// `u ∈ F`, `x ∉ F`.
    UOnly,
}

#[derive(Clone, Debug)]
pub struct LiftContextOpI {
    h: Graph,
    hprime: Graph,
    u: usize,
    v: usize,
    x: usize,
    budget: usize,
}

impl LiftContextOpI {
    /// `h` is the graph before deletion and `r` an Operation I triple valid in it.
    pub fn new(h: &Graph, r: Reduction) -> Result<Self> {
        let Reduction::OpI { u, v, x } = r else {
            return Err(invalid("expected an Operation I triple"));
        };
        r.validate(h)?;
        Ok(LiftContextOpI {
            h: h.clone(),
            hprime: h.without_vertex(v),
            u,
            v,
            x,
            budget: DEFAULT_NODE_BUDGET,
        })
    }

    #[must_use]
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn host(&self) -> &Graph {
        &self.h
    }

    pub fn reduced(&self) -> &Graph {
        &self.hprime
    }

    pub fn classify(&self, f: VertexSet) -> Result<OpIClass> {
        match (f.contains(self.x), f.contains(self.u)) {
            (true, false) => Ok(OpIClass::XOnly),
            (true, true) => Ok(OpIClass::Both),
            (false, true) => Ok(OpIClass::UOnly),
            (false, false) => Err(invalid(format!(
                "{f} contains neither {} nor {} and cannot dominate H'",
                self.x, self.u
            ))),
        }
    }
}

/// Checks that `p` lists every dominating set of `g` once with single-vertex
/// changes between neighbors.
fn require_hamilton_path(g: &Graph, p: &HamPath, budget: usize) -> Result<()> {
    let mut seen = HashSet::with_capacity(p.len());
    for (i, s) in p.iter().enumerate() {
        if !s.is_subset(g.active()) || !dominates(g, s) {
            return Err(invalid(format!("step {i} ({s}) is not a dominating set")));
        }
        if !seen.insert(s) {
            return Err(invalid(format!("step {i} ({s}) repeats an earlier step")));
        }
    }
    if let Some(i) = p.first_non_gray_step() {
        return Err(invalid(format!(
            "steps {i} and {} differ in more than one vertex",
            i + 1
        )));
    }
    let total = enumerate_dominating_sets_with_budget(g, budget)?.len();
    if total != p.len() {
        return Err(invalid(format!(
            "path has {} steps but the graph has {total} dominating sets",
            p.len()
        )));
    }
    Ok(())
}

fn check_output_budget(len: usize, budget: usize) -> Result<()> {
    if len > budget {
        Err(Error::ResourceLimit(format!(
            "lifted path has {len} steps, budget is {budget}"
        )))
    } else {
        Ok(())
    }
}

/// Lifts across Operation I.
///
/// Every `F_i ∪ {v}` is kept in order. Each maximal run of steps with `x ∈ F`,
/// `u ∉ F` is expanded pairwise into `F_t^v, F_t, F_t^u, F_{t+1}^u, F_{t+1},
/// F_{t+1}^v`; an odd run finishes with `F_j^v, F_j, F_j^u`, which is followed
/// by `F_{j+1}^v = F_j^{uv}` unless the run ends the path.
pub fn lift_op1(p: &HamPath, ctx: &LiftContextOpI) -> Result<HamPath> {
    require_hamilton_path(&ctx.hprime, p, ctx.budget)?;
    let f = p.steps();
    let n = f.len();
    let (u, v) = (ctx.u, ctx.v);
    let in_x: Vec<bool> = f
        .iter()
        .map(|&s| ctx.classify(s).map(|c| c == OpIClass::XOnly))
        .collect::<Result<_>>()?;
    let extra = in_x.iter().filter(|&&b| b).count();
    check_output_budget(n + 2 * extra, ctx.budget)?;

    let mut out = Vec::with_capacity(n + 2 * extra);
    let mut k = 0;
    while k < n {
        if !in_x[k] {
            out.push(f[k].with(v));
            k += 1;
            continue;
        }
        let start = k;
        let mut end = k;
        while end + 1 < n && in_x[end + 1] {
            end += 1;
        }
        let mut t = start;
        while t < end {
            out.extend([
                f[t].with(v),
                f[t],
                f[t].with(u),
                f[t + 1].with(u),
                f[t + 1],
                f[t + 1].with(v),
            ]);
            t += 2;
        }
        if t == end {
            if end + 1 < n && f[end + 1] != f[end].with(u) {
                return Err(Error::ConstructionFailed(format!(
                    "step after an X-run ending at {end} is {} rather than {}",
                    f[end + 1],
                    f[end].with(u)
                )));
            }
            out.extend([f[end].with(v), f[end], f[end].with(u)]);
        }
        k = end + 1;
    }
    Ok(HamPath::new(out))
}

#[derive(Clone, Debug)]
pub struct LiftContextOpII {
    h: Graph,
    hprime: Graph,
    u: usize,
    v: usize,
    w: usize,
    j: Vec<VertexSet>,
    budget: usize,
}

impl LiftContextOpII {
    pub fn new(h: &Graph, r: Reduction) -> Result<Self> {
        Self::with_budget(h, r, DEFAULT_NODE_BUDGET)
    }

    pub fn with_budget(h: &Graph, r: Reduction, budget: usize) -> Result<Self> {
        let Reduction::OpII { u, v, w } = r else {
            return Err(invalid("expected an Operation II triple"));
        };
        r.validate(h)?;
        let hprime = h.without(r.deleted());
        let j = compute_j_with_budget(&hprime, u, budget)?;
        Ok(LiftContextOpII {
            h: h.clone(),
            hprime,
            u,
            v,
            w,
            j,
            budget,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.h
    }

    pub fn reduced(&self) -> &Graph {
        &self.hprime
    }

    /// Dominating sets of `H' - u` that avoid `N_{H'}[u]`.
    pub fn j(&self) -> &[VertexSet] {
        &self.j
    }
}

pub fn compute_j(hprime: &Graph, u: usize) -> Result<Vec<VertexSet>> {
    compute_j_with_budget(hprime, u, DEFAULT_NODE_BUDGET)
}

/// All `S` dominating `H' - u` with `S ∩ N_{H'}[u] = ∅`, ascending. These are
/// exactly the dominating sets of `H' - u` that do not dominate `H'`.
pub fn compute_j_with_budget(hprime: &Graph, u: usize, budget: usize) -> Result<Vec<VertexSet>> {
    if !hprime.is_active(u) {
        return Err(invalid(format!("vertex {u} is not active")));
    }
    let closed = hprime.closed_neighborhood(u);
    Ok(
        enumerate_dominating_sets_with_budget(&hprime.without_vertex(u), budget)?
            .into_iter()
            .filter(|s| s.is_disjoint(closed))
            .collect(),
    )
}

/// Lifts across Operation II.
///
/// Each `F_i` becomes `F_i^v, F_i^{vw}, F_i^w` for odd `i` (1-based) and
/// `F_i^w, F_i^{vw}, F_i^v` for even `i`. When `F_t = S ∪ {u}` for some `S ∈ J`,
/// the detour `S^v, S^{vw}` is spliced into the edge between `F_t^v` and
/// `F_t^{vw}`, in whichever direction that edge is traversed.
pub fn lift_op2(p: &HamPath, ctx: &LiftContextOpII) -> Result<HamPath> {
    require_hamilton_path(&ctx.hprime, p, ctx.budget)?;
    let (u, v, w) = (ctx.u, ctx.v, ctx.w);
    let out_len = 3 * p.len() + 2 * ctx.j.len();
    check_output_budget(out_len, ctx.budget)?;

    let mut out = Vec::with_capacity(out_len);
    let mut spliced = 0;
    for (k, f) in p.iter().enumerate() {
        let fv = f.with(v);
        let fw = f.with(w);
        let fvw = fv.with(w);
        let detour = f
            .contains(u)
            .then(|| f.without(u))
            .filter(|s| ctx.j.binary_search(s).is_ok())
            .map(|s| (s.with(v), s.with(v).with(w)));
        if detour.is_some() {
            spliced += 1;
        }
        // k is 0-based, so even k is an odd position.
        if k % 2 == 0 {
            out.push(fv);
            if let Some((sv, svw)) = detour {
                out.extend([sv, svw]);
            }
            out.extend([fvw, fw]);
        } else {
            out.extend([fw, fvw]);
            if let Some((sv, svw)) = detour {
                out.extend([svw, sv]);
            }
            out.push(fv);
        }
    }
    if spliced != ctx.j.len() {
        return Err(Error::ConstructionFailed(format!(
            "{} sets of J were spliced, expected {}",
            spliced,
            ctx.j.len()
        )));
    }
    Ok(HamPath::new(out))
}

/// Lifts `p` across whichever operation `r` is; `h` is the graph before `r`.
pub fn lift(p: &HamPath, h: &Graph, r: Reduction, budget: usize) -> Result<HamPath> {
    match r {
        Reduction::OpI { .. } => lift_op1(p, &LiftContextOpI::new(h, r)?.with_budget(budget)),
        Reduction::OpII { .. } => lift_op2(p, &LiftContextOpII::with_budget(h, r, budget)?),
    }
}
