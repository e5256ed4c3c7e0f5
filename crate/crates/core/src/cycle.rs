//! Dominating sets of cycles as binary strings.
//!
//! A set `X ⊆ {0..n-1}` is written `x_0 x_1 ... x_{n-1}` with `x_i = 1` iff
//! `i ∈ X`. It dominates `C_n` iff no circular window `x_{i-1} x_i x_{i+1}` is
//! `000`, i.e. iff its complement has no three circularly consecutive ones.
//!
//! Listing all `2^n` strings in binary reflected Gray code order and dropping
//! the non-dominating ones yields a Hamilton path of `D(C_n)` when
//! `n ≢ 0 (mod 4)`. The single-bit property is checked on every construction.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::path::HamPath;
use crate::vertex_set::VertexSet;

pub const MAX_CYCLE_WIDTH: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryString {
    width: usize,
    set: VertexSet,
}

impl BinaryString {
    pub fn new(width: usize, set: VertexSet) -> Self {
        debug_assert!(set.is_subset(VertexSet::prefix(width)));
        BinaryString { width, set }
    }

    /// The string whose leftmost character is the most significant bit of `code`.
    fn from_code(width: usize, code: u32) -> Self {
        let set = if width == 0 {
            VertexSet::EMPTY
        } else {
            VertexSet::from_bits(code.reverse_bits() >> (32 - width))
        };
        BinaryString { width, set }
    }

    pub fn width(self) -> usize {
        self.width
    }

    pub fn set(self) -> VertexSet {
        self.set
    }

    pub fn bit(self, i: usize) -> bool {
        self.set.contains(i)
    }

    /// True iff no circular window of three consecutive positions is all zero.
    pub fn is_cycle_dominating(self) -> bool {
        let n = self.width;
        (0..n).all(|i| self.bit((i + n - 1) % n) || self.bit(i) || self.bit((i + 1) % n))
    }

    /// Bitwise complement, same width.
    #[must_use]
    pub fn complement(self) -> Self {
        BinaryString {
            width: self.width,
            set: VertexSet::prefix(self.width).difference(self.set),
        }
    }

    /// True iff the string has no `run` circularly consecutive ones.
    pub fn avoids_circular_ones(self, run: usize) -> bool {
        let n = self.width;
        if run > n {
            return true;
        }
        (0..n).all(|i| (0..run).any(|k| !self.bit((i + k) % n)))
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.set.to_binary_string(self.width))
    }
}

impl fmt::Debug for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryString({self})")
    }
}

/// Streams the `2^width` strings of the binary reflected Gray code, starting
/// from all zeros. Position `k` holds `k ^ (k >> 1)`.
#[derive(Clone, Debug)]
pub struct Brgc {
    width: usize,
    next: u64,
    end: u64,
}

impl Iterator for Brgc {
    type Item = BinaryString;

    fn next(&mut self) -> Option<BinaryString> {
        if self.next == self.end {
            return None;
        }
        let k = self.next as u32;
        self.next += 1;
        Some(BinaryString::from_code(self.width, k ^ (k >> 1)))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Brgc {}

pub fn brgc(width: usize) -> Result<Brgc> {
    if !(1..=MAX_CYCLE_WIDTH).contains(&width) {
        return Err(invalid(format!(
            "code width {width} outside 1..={MAX_CYCLE_WIDTH}"
        )));
    }
    Ok(Brgc {
        width,
        next: 0,
        end: 1 << width,
    })
}

/// Keeps the strings that encode dominating sets of the cycle, in order.
pub fn filter_circular<I>(seq: I) -> impl Iterator<Item = BinaryString>
where
    I: IntoIterator<Item = BinaryString>,
{
    seq.into_iter().filter(|s| s.is_cycle_dominating())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleOutcome {
    Path(HamPath),
    /// `D(C_n)` has no Hamilton path (`n ≡ 0 mod 4`).
    NonExistent,
}

/// Hamilton path of `D(C_n)` on labels `0..n`, or [`CycleOutcome::NonExistent`]
/// when `n ≡ 0 (mod 4)`.
pub fn hamilton_path_cycle(n: usize) -> Result<CycleOutcome> {
    if n < 3 {
        return Err(invalid(format!("cycle length {n} is below 3")));
    }
    if n.is_multiple_of(4) {
        return Ok(CycleOutcome::NonExistent);
    }
    let path: HamPath = filter_circular(brgc(n)?).map(BinaryString::set).collect();
    if let Some(i) = path.first_non_gray_step() {
        return Err(Error::ConstructionFailed(format!(
            "filtered Gray code for n={n} changes more than one bit between positions {i} and {}",
            i + 1
        )));
    }
    Ok(CycleOutcome::Path(path))
}

/// Like [`hamilton_path_cycle`] for a cycle graph with arbitrary labels. String
/// position `i` is the `i`-th vertex of [`Graph::cycle_order`].
pub fn hamilton_path_on_cycle(g: &Graph) -> Result<CycleOutcome> {
    let order = g.cycle_order()?;
    Ok(match hamilton_path_cycle(order.len())? {
        CycleOutcome::NonExistent => CycleOutcome::NonExistent,
        CycleOutcome::Path(p) => CycleOutcome::Path(
            p.iter()
                .map(|s| s.iter().map(|i| order[i]).collect())
                .collect(),
        ),
    })
}
