//! The Abel polynomial set map on the subsets of a set partition.
//!
//! Fix blocks `B_0, …, B_{ℓ-1}` with positive sizes. For a set `π` of blocks
//! write `‖π‖` for the number of elements they cover. Then
//!
//! ```text
//! f_π(x) = x (x + ‖π‖)^{ℓ(π) - 1},    f_∅ = 1
//! ```
//!
//! is of binomial type over the ground set of blocks, and its `x^k`
//! coefficient counts tail forests with `k` components.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::check_cap;
use crate::setmap::{block_length_sums, GroundSet, Mask, SetMap};
use crate::{arith, Caps, Error, Poly, Rational, Result};

/// Block sizes of a set partition. Elements are addressed as
/// `(block, offset)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    sizes: Vec<usize>,
}

impl BlockPartition {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        GroundSet::new(sizes.len())?;
        if let Some(index) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::EmptyBlock { index });
        }
        Ok(BlockPartition { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// `‖π‖` for a set of blocks `pi`.
    pub fn weight(&self, pi: Mask) -> usize {
        self.sizes.iter().enumerate().filter(|&(i, _)| pi & (1 << i) != 0).map(|(_, &s)| s).sum()
    }

    /// The blocks themselves, as a ground set.
    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.sizes.len()).expect("checked at construction")
    }
}

/// A tail `(T, v)`: an origin block and a target element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tail {
    pub origin: usize,
    /// `(block, offset)` with `offset` below the block's size.
    pub target: (usize, usize),
}

/// True when the tails have distinct origins, valid targets, and the block
/// digraph (each tail read as an edge from its origin block to its target's
/// block) has no cycle. A tail into its own block is a cycle.
pub fn is_tail_forest(b: &BlockPartition, tails: &[Tail]) -> bool {
    let n = b.len();
    let mut parent = vec![usize::MAX; n];
    for t in tails {
        let (block, offset) = t.target;
        if t.origin >= n || block >= n || offset >= b.sizes[block] || parent[t.origin] != usize::MAX {
            return false;
        }
        parent[t.origin] = block;
    }
    // every block has at most one out-edge, so a cycle shows up as a walk
    // longer than n
    (0..n).all(|start| {
        let mut v = start;
        for _ in 0..=n {
            if parent[v] == usize::MAX {
                return true;
            }
            v = parent[v];
        }
        false
    })
}

fn abel_poly(weight: usize, blocks: usize) -> Poly {
    if blocks == 0 {
        return Poly::one();
    }
    &Poly::x() * &Poly::shifted_x(arith::int(weight as i64)).pow(blocks - 1)
}

/// `π ↦ x(x+‖π‖)^{ℓ(π)-1}` over every set of blocks.
pub fn abel_setmap(b: &BlockPartition, caps: &Caps) -> Result<SetMap<Poly>> {
    check_cap("block count", caps.abel_blocks, b.len())?;
    Ok(SetMap::from_fn(b.ground(), |pi| abel_poly(b.weight(pi), pi.count_ones() as usize)))
}

/// `S ↦ x(x+α_S)^{|S|-1}` for an additive `α`, with value 1 at `∅`.
pub fn abel_general_setmap(alpha: &SetMap<Rational>) -> Result<SetMap<Poly>> {
    let ground = alpha.ground();
    for s in ground.subsets() {
        let mut sum = Rational::from_integer(0.into());
        let mut rest = s;
        while rest != 0 {
            sum += alpha.get(rest & rest.wrapping_neg());
            rest &= rest - 1;
        }
        if sum != *alpha.get(s) {
            return Err(Error::NotAdditive { mask: s });
        }
    }
    Ok(SetMap::from_fn(ground, |s| {
        let k = s.count_ones() as usize;
        if k == 0 {
            Poly::one()
        } else {
            &Poly::x() * &Poly::shifted_x(alpha.get(s).clone()).pow(k - 1)
        }
    }))
}

/// `c_k = Σ_{γ ⊢ π, ℓ(γ) = k} Π_{ρ ∈ γ} ‖ρ‖^{ℓ(ρ)-1}` for `k = 0..=ℓ(π)`.
fn forest_sums(b: &BlockPartition, pi: Mask, caps: &Caps) -> Result<Vec<Rational>> {
    b.ground().check(pi)?;
    check_cap("block count", caps.abel_identity_blocks, pi.count_ones() as usize)?;
    let h = SetMap::from_fn(b.ground(), |rho| {
        if rho == 0 {
            Rational::from_integer(0.into())
        } else {
            arith::pow(&arith::int(b.weight(rho) as i64), rho.count_ones() as usize - 1)
        }
    });
    block_length_sums(&h, pi)
}

/// Checks `f_π(x) = Σ_{γ ⊢ π} x^{ℓ(γ)} Π_{ρ ∈ γ} ‖ρ‖^{ℓ(ρ)-1}`.
pub fn verify_sm3(b: &BlockPartition, pi: Mask, caps: &Caps) -> Result<bool> {
    let sums = forest_sums(b, pi, caps)?;
    Ok(Poly::from_coeffs(sums) == abel_poly(b.weight(pi), pi.count_ones() as usize))
}

/// Checks `C(n-1,k-1) ‖π‖^{n-k} = Σ_{γ ⊢ π, ℓ(γ) = k} Π_{ρ ∈ γ} ‖ρ‖^{ℓ(ρ)-1}`
/// with `n = ℓ(π)`, `1 ≤ k ≤ n`.
pub fn verify_pfc(b: &BlockPartition, pi: Mask, k: usize, caps: &Caps) -> Result<bool> {
    let n = pi.count_ones() as usize;
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let sums = forest_sums(b, pi, caps)?;
    let lhs = arith::binomial(n - 1, k - 1) * arith::pow(&arith::int(b.weight(pi) as i64), n - k);
    Ok(lhs == sums[k])
}

/// Tail forests on all blocks with exactly `k` components, by enumerating
/// every choice of `n - k` origin blocks and a target element for each.
pub fn count_tail_forests(b: &BlockPartition, k: usize, caps: &Caps) -> Result<u64> {
    let n = b.len();
    check_cap("block count", caps.tail_blocks, n)?;
    check_cap("element count", caps.tail_weight, b.weight(b.ground().full_mask()))?;
    if k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let targets: Vec<(usize, usize)> =
        (0..n).flat_map(|blk| (0..b.sizes[blk]).map(move |off| (blk, off))).collect();
    let edges = n - k;
    let mut count = 0;
    let mut tails = Vec::with_capacity(edges);
    for origins in b.ground().subsets().filter(|o| o.count_ones() as usize == edges) {
        let origins: Vec<usize> = (0..n).filter(|&i| origins & (1 << i) != 0).collect();
        // odometer over target choices
        let mut choice = vec![0usize; edges];
        loop {
            tails.clear();
            tails
                .extend(origins.iter().zip(&choice).map(|(&origin, &c)| Tail { origin, target: targets[c] }));
            if is_tail_forest(b, &tails) {
                count += 1;
            }
            let Some(i) = choice.iter().rposition(|&c| c + 1 < targets.len()) else { break };
            choice[i] += 1;
            choice[i + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }
    Ok(count)
}
