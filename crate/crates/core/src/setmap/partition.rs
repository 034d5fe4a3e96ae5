//! Set partitions of a subset, enumerated as restricted growth strings.

use alloc::vec;
use alloc::vec::Vec;

use super::Mask;
use crate::error::check_cap;
use crate::Result;

/// Partition enumeration is refused above this many elements
/// (Bell(15) is already 1.38 billion).
pub const MAX_PARTITION_ELEMENTS: usize = 14;

/// A partition of a subset into disjoint nonempty blocks.
///
/// Blocks are ordered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Mask>,
}

impl SetPartition {
    /// Returns `None` if a block is empty or two blocks overlap.
    pub fn new(mut blocks: Vec<Mask>) -> Option<Self> {
        let mut seen = 0;
        for &b in &blocks {
            if b == 0 || b & seen != 0 {
                return None;
            }
            seen |= b;
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Some(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    /// Number of blocks, `ℓ(σ)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of covered elements, `‖σ‖`.
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union(&self) -> Mask {
        self.blocks.iter().fold(0, |acc, b| acc | b)
    }
}

/// Restricted-growth-string state over the elements of a subset, taken in
/// increasing index order. `rgs[i]` is the block of the `i`-th element and
/// never exceeds one more than every earlier entry.
pub(crate) struct Rgs {
    elems: Vec<Mask>,
    rgs: Vec<u8>,
    // prefix maxima: peak[i] = max(rgs[0..=i])
    peak: Vec<u8>,
}

impl Rgs {
    pub(crate) fn new(s: Mask) -> Result<Self> {
        let m = s.count_ones() as usize;
        check_cap("partition element count", MAX_PARTITION_ELEMENTS, m)?;
        let elems = (0..32).map(|i| 1 << i).filter(|b| s & b != 0).collect();
        Ok(Rgs { elems, rgs: vec![0; m], peak: vec![0; m] })
    }

    pub(crate) fn block_count(&self) -> usize {
        self.peak.last().map_or(0, |&p| p as usize + 1)
    }

    pub(crate) fn write_blocks(&self, out: &mut Vec<Mask>) {
        out.clear();
        out.resize(self.block_count(), 0);
        for (e, &b) in self.elems.iter().zip(&self.rgs) {
            out[b as usize] |= e;
        }
    }

    /// Steps to the next string; `false` once the all-singletons partition
    /// has been passed.
    pub(crate) fn advance(&mut self) -> bool {
        let m = self.rgs.len();
        let Some(i) = (1..m).rev().find(|&i| self.rgs[i] <= self.peak[i - 1]) else {
            return false;
        };
        self.rgs[i] += 1;
        self.peak[i] = self.peak[i - 1].max(self.rgs[i]);
        for j in i + 1..m {
            self.rgs[j] = 0;
            self.peak[j] = self.peak[i];
        }
        true
    }
}

/// Calls `f` with the blocks of every partition of `s`, reusing one buffer.
pub(crate) fn for_each_partition(s: Mask, mut f: impl FnMut(&[Mask])) -> Result<()> {
    let mut rgs = Rgs::new(s)?;
    let mut buf = Vec::new();
    loop {
        rgs.write_blocks(&mut buf);
        f(&buf);
        if !rgs.advance() {
            return Ok(());
        }
    }
}

/// Iterator over all partitions of a subset. See [`partitions_of`].
pub struct Partitions {
    rgs: Rgs,
    done: bool,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let mut blocks = Vec::new();
        self.rgs.write_blocks(&mut blocks);
        self.done = !self.rgs.advance();
        Some(SetPartition { blocks })
    }
}

/// Every set partition of `s` exactly once, starting from the one-block
/// partition and ending with all singletons. The empty set has exactly one
/// partition, the empty one.
pub fn partitions_of(s: Mask) -> Result<Partitions> {
    Ok(Partitions { rgs: Rgs::new(s)?, done: false })
}
