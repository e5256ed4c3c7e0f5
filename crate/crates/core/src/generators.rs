//! Standard graph families and Prüfer-sequence tree construction.

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path fits in the label space")
}

/// Cycle on `0..n` with edges `i ~ i+1 (mod n)`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle fits in the label space")
}

/// Star `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star fits in the label space")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph fits in the label space")
}

/// Cycle `C_m` on labels `0..m` with a pendant path `c - a - b` hung off each
/// listed cycle vertex `c`. New vertices are labeled `m, m+1, ...` in order.
pub fn cycle_with_pendant_paths(m: usize, attach_at: &[usize]) -> Result<Graph> {
    if m < 3 {
        return Err(invalid("a cycle needs at least three vertices"));
    }
    let mut edges: Vec<_> = (0..m).map(|v| (v, (v + 1) % m)).collect();
    let mut next = m;
    for &c in attach_at {
        if c >= m {
            return Err(invalid(format!("attachment {c} is not a cycle vertex")));
        }
        edges.push((c, next));
        edges.push((next, next + 1));
        next += 2;
    }
    Graph::from_edges(next, &edges)
}

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into a labeled tree
/// on `n` vertices.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&s| s >= n) {
        return Err(invalid(format!("Prüfer entry {bad} out of range 0..{n}")));
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges)
}

/// Every labeled tree on `n` vertices, one per Prüfer sequence (`n^(n-2)` in
/// total). For `n <= 2` the single tree is yielded.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1);
    let len = n.saturating_sub(2);
    let total = if n <= 2 { 1 } else { n.pow(len as u32) };
    (0..total).map(move |mut code| {
        if n <= 2 {
            return path(n);
        }
        let mut seq = vec![0; len];
        for slot in seq.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        tree_from_prufer(&seq).expect("entries are in range")
    })
}
