use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An ordered listing of vertex sets, claimed to be a Hamilton path of some
/// dominating graph. Paths read from files may violate the claim; use
/// [`crate::oracle::verify_hamilton_path`] to check it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HamPath {
    steps: Vec<VertexSet>,
}

impl HamPath {
    pub fn new(steps: Vec<VertexSet>) -> Self {
        HamPath { steps }
    }

    pub fn steps(&self) -> &[VertexSet] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<VertexSet> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> Option<VertexSet> {
        self.steps.first().copied()
    }

    pub fn last(&self) -> Option<VertexSet> {
        self.steps.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.steps.iter().copied()
    }

    /// Index `i` of the first pair `(steps[i], steps[i+1])` that does not differ
    /// in exactly one vertex.
    pub fn first_non_gray_step(&self) -> Option<usize> {
        self.steps
            .windows(2)
            .position(|w| w[0].symmetric_difference(w[1]).len() != 1)
    }

    /// Newline-terminated binary strings `x_0 ... x_{width-1}`, one per step.
    pub fn to_binary_lines(&self, width: usize) -> String {
        let mut out = String::with_capacity(self.steps.len() * (width + 1));
        for s in &self.steps {
            out.push_str(&s.to_binary_string(width));
            out.push('\n');
        }
        out
    }

    /// Newline-terminated `{a,b,...}` lists, one per step.
    pub fn to_set_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let _ = writeln!(out, "{s}");
        }
        out
    }

    /// Reads either output format back. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let set = if let Some(inner) = line.strip_prefix('{') {
                let inner = inner
                    .strip_suffix('}')
                    .ok_or_else(|| err("unterminated vertex set".into()))?;
                let mut s = VertexSet::EMPTY;
                for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| err(format!("{tok:?} is not a vertex label")))?;
                    if v >= MAX_VERTICES {
                        return Err(err(format!("label {v} out of range")));
                    }
                    s.insert(v);
                }
                s
            } else {
                VertexSet::from_binary_string(line).map_err(|e| err(e.to_string()))?
            };
            steps.push(set);
        }
        Ok(HamPath { steps })
    }
}

impl From<Vec<VertexSet>> for HamPath {
    fn from(steps: Vec<VertexSet>) -> Self {
        HamPath::new(steps)
    }
}

impl FromIterator<VertexSet> for HamPath {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        HamPath::new(iter.into_iter().collect())
    }
}
