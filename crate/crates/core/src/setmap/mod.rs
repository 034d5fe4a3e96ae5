//! The commutative ring of set maps on a finite ground set.
//!
//! A [`SetMap`] is a dense table indexed by subset mask. Addition is
//! pointwise; multiplication is the convolution over ordered disjoint
//! decompositions `T ⊎ U = S`, with unit `δ_{S=∅}`. Restricted to maps that
//! only depend on `|S|` this is exactly the product of exponential power
//! series, and [`compose`] is exactly series composition.
//!
//! Multiplication walks the sub-masks of every subset, `O(3^n)` value
//! products in total. A ranked zeta/Möbius transform would bring this down to
//! `O(2^n n^2)`; at `n ≤ 20` with polynomial values the direct loop has been
//! fast enough that the extra machinery is not worth carrying yet.

mod compose;
pub(crate) mod partition;

use core::fmt;
use core::ops::Index;

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

pub use compose::{block_length_sums, compose, compose_at, decompose, recover_sequence, setmap_inverse};
pub use partition::{partitions_of, Partitions, SetPartition, MAX_PARTITION_ELEMENTS};

use crate::{arith, Error, Poly, Rational, Result};

/// A subset of the ground set, bit `i` standing for element `i`.
pub type Mask = u32;

/// Values a set map can hold: a commutative ring with a rational scaling.
pub trait RingValue: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
}

impl RingValue for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

impl RingValue for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
}

impl GroundSet {
    pub const MAX_SIZE: usize = 20;

    pub fn new(size: usize) -> Result<Self> {
        if size > Self::MAX_SIZE {
            return Err(Error::GroundTooLarge { size });
        }
        Ok(GroundSet { size })
    }

    pub fn size(self) -> usize {
        self.size
    }

    pub fn full_mask(self) -> Mask {
        ((1u64 << self.size) - 1) as Mask
    }

    /// Number of subsets, i.e. the table length of a set map.
    pub fn subset_count(self) -> usize {
        1 << self.size
    }

    pub fn contains(self, mask: Mask) -> bool {
        mask & !self.full_mask() == 0
    }

    pub fn check(self, mask: Mask) -> Result<()> {
        if self.contains(mask) {
            Ok(())
        } else {
            Err(Error::MaskOutOfRange { mask, size: self.size })
        }
    }

    /// All subsets in increasing mask order; every proper subset of `S`
    /// comes before `S`.
    pub fn subsets(self) -> impl Iterator<Item = Mask> {
        0..=self.full_mask()
    }
}

/// Iterates every sub-mask of `mask`, including `0` and `mask` itself, in
/// decreasing numeric order.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(mask);
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetMap<V> {
    ground: GroundSet,
    table: Vec<V>,
}

impl<V: RingValue> SetMap<V> {
    pub fn new(ground: GroundSet, table: Vec<V>) -> Result<Self> {
        if table.len() != ground.subset_count() {
            return Err(Error::LengthMismatch { left: table.len(), right: ground.subset_count() });
        }
        Ok(SetMap { ground, table })
    }

    pub fn from_fn(ground: GroundSet, f: impl FnMut(Mask) -> V) -> Self {
        SetMap { ground, table: ground.subsets().map(f).collect() }
    }

    pub fn zero(ground: GroundSet) -> Self {
        SetMap { ground, table: vec![V::zero(); ground.subset_count()] }
    }

    /// The ring unit `δ_{S=∅}`.
    pub fn unit(ground: GroundSet) -> Self {
        let mut m = Self::zero(ground);
        m.table[0] = V::one();
        m
    }

    /// The set map `S ↦ a_{|S|}`.
    pub fn from_sequence(ground: GroundSet, seq: &Sequence<V>) -> Result<Self> {
        seq.require(ground.size() + 1)?;
        Ok(Self::from_fn(ground, |s| seq.terms[s.count_ones() as usize].clone()))
    }

    /// The sequence `n ↦ h_S` for `|S| = n`, if `h` only depends on `|S|`.
    pub fn to_sequence(&self) -> Option<Sequence<V>> {
        let n = self.ground.size();
        let terms: Vec<V> = (0..=n).map(|k| self.table[((1u64 << k) - 1) as usize].clone()).collect();
        self.ground
            .subsets()
            .all(|s| self.table[s as usize] == terms[s.count_ones() as usize])
            .then(|| Sequence::new(terms))
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn table(&self) -> &[V] {
        &self.table
    }

    pub fn get(&self, mask: Mask) -> &V {
        &self.table[mask as usize]
    }

    pub fn set(&mut self, mask: Mask, value: V) {
        self.table[mask as usize] = value;
    }

    pub fn map<W: RingValue>(&self, f: impl FnMut(&V) -> W) -> SetMap<W> {
        SetMap { ground: self.ground, table: self.table.iter().map(f).collect() }
    }

    pub fn try_map<W: RingValue>(&self, f: impl FnMut(&V) -> Result<W>) -> Result<SetMap<W>> {
        Ok(SetMap { ground: self.ground, table: self.table.iter().map(f).collect::<Result<_>>()? })
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch { left: self.ground.size(), right: other.ground.size() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(SetMap {
            ground: self.ground,
            table: self.table.iter().zip(&other.table).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    /// `(g·h)_S = Σ_{T ⊎ U = S} g_T h_U`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Ok(Self::from_fn(self.ground, |s| self.mul_at(other, s)))
    }

    pub(crate) fn mul_at(&self, other: &Self, s: Mask) -> V {
        let mut acc = V::zero();
        for t in submasks(s) {
            let g = &self.table[t as usize];
            if g.is_zero() {
                continue;
            }
            let h = &other.table[(s ^ t) as usize];
            if !h.is_zero() {
                acc = acc.plus(&g.times(h));
            }
        }
        acc
    }

    /// `self^k` under the set-map product; `k = 0` gives the unit.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::unit(self.ground);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ground");
        }
        acc
    }
}

impl<V> Index<Mask> for SetMap<V> {
    type Output = V;
    fn index(&self, mask: Mask) -> &V {
        &self.table[mask as usize]
    }
}

/// A finite prefix `a_0, a_1, …` of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence<V> {
    pub terms: Vec<V>,
}

impl<V: RingValue> Sequence<V> {
    pub fn new(terms: Vec<V>) -> Self {
        Sequence { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn require(&self, needed: usize) -> Result<()> {
        if self.terms.len() < needed {
            return Err(Error::SequenceTooShort { needed, len: self.terms.len() });
        }
        Ok(())
    }

    /// Binomial convolution `(a·b)_n = Σ_k C(n,k) a_k b_{n-k}`, the sequence
    /// counterpart of the set-map product. The result is as long as the
    /// shorter input.
    pub fn binomial_mul(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        let terms = (0..len)
            .map(|n| {
                (0..=n).fold(V::zero(), |acc, k| {
                    acc.plus(&self.terms[k].times(&other.terms[n - k]).scaled(&arith::binomial(n, k)))
                })
            })
            .collect();
        Sequence { terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn g1() -> GroundSet {
        GroundSet::new(1).unwrap()
    }

    #[test]
    fn ground_cap() {
        assert!(GroundSet::new(20).is_ok());
        assert_eq!(GroundSet::new(21), Err(Error::GroundTooLarge { size: 21 }));
        assert_eq!(GroundSet::new(20).unwrap().full_mask(), 0xF_FFFF);
        assert_eq!(GroundSet::new(0).unwrap().subset_count(), 1);
    }

    #[test]
    fn table_length_checked() {
        assert!(SetMap::new(g1(), vec![int(1)]).is_err());
        assert!(SetMap::new(g1(), vec![int(1), int(2)]).is_ok());
    }

    #[test]
    fn submasks_enumerates_all() {
        let mut v: Vec<_> = submasks(0b1010).collect();
        v.sort();
        assert_eq!(v, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn add_examples() {
        let g = SetMap::new(g1(), vec![int(1), int(2)]).unwrap();
        let h = SetMap::new(g1(), vec![int(0), int(5)]).unwrap();
        assert_eq!(g.add(&h).unwrap().table(), &[int(1), int(7)]);
        assert_eq!(g.add(&SetMap::zero(g1())).unwrap(), g);

        let ground = GroundSet::new(3).unwrap();
        let ones = SetMap::from_fn(ground, |_| int(1));
        let twos = SetMap::from_fn(ground, |_| int(2));
        assert_eq!(ones.add(&twos).unwrap(), SetMap::from_fn(ground, |_| int(3)));
    }

    #[test]
    fn mul_examples() {
        let ground = GroundSet::new(3).unwrap();
        let h = SetMap::from_fn(ground, |s| int(s as i64 * 3 - 1));
        assert_eq!(h.mul(&SetMap::unit(ground)).unwrap(), h);

        let ones = SetMap::from_fn(ground, |_| int(1));
        let sq = ones.mul(&ones).unwrap();
        assert_eq!(sq[0b011], int(4));
        // constant-1 sequences multiply to 2^n
        for s in ground.subsets() {
            assert_eq!(sq[s], int(1 << s.count_ones()));
        }
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = SetMap::<Rational>::zero(g1());
        let b = SetMap::<Rational>::zero(GroundSet::new(2).unwrap());
        assert!(matches!(a.mul(&b), Err(Error::GroundMismatch { .. })));
        assert!(matches!(a.add(&b), Err(Error::GroundMismatch { .. })));
    }

    #[test]
    fn sequence_round_trip() {
        let ground = GroundSet::new(3).unwrap();
        let seq = Sequence::new(vec![int(4), int(3), int(2), int(1)]);
        let m = SetMap::from_sequence(ground, &seq).unwrap();
        assert_eq!(m.to_sequence(), Some(seq.clone()));
        let mut bent = m.clone();
        bent.set(0b100, int(9));
        assert_eq!(bent.to_sequence(), None);
        assert!(SetMap::from_sequence(GroundSet::new(4).unwrap(), &seq).is_err());
    }
}
