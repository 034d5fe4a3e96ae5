//! Composition of sequences with set maps and the lemmas built on it.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use super::partition::{for_each_partition, MAX_PARTITION_ELEMENTS};
use super::{submasks, Mask, RingValue, Sequence, SetMap};
use crate::error::check_cap;
use crate::{arith, Error, Rational, Result};

/// For each `k`, `Σ_{σ ⊢ S, ℓ(σ) = k} Π_{T ∈ σ} h_T`. The returned vector has
/// length `|S| + 1`; entry 0 is 1 for `S = ∅` and 0 otherwise.
///
/// Every composition-style sum in the crate goes through here.
pub fn block_length_sums<V: RingValue>(h: &SetMap<V>, s: Mask) -> Result<Vec<V>> {
    h.ground().check(s)?;
    let mut sums = vec![V::zero(); s.count_ones() as usize + 1];
    for_each_partition(s, |blocks| {
        let mut prod = V::one();
        for &b in blocks {
            let v = h.get(b);
            if v.is_zero() {
                return;
            }
            prod = prod.times(v);
        }
        let k = blocks.len();
        sums[k] = sums[k].plus(&prod);
    })?;
    Ok(sums)
}

fn weighted_sum<V: RingValue>(a: &[V], sums: &[V]) -> V {
    a.iter().zip(sums).fold(
        V::zero(),
        |acc, (ak, ck)| {
            if ck.is_zero() {
                acc
            } else {
                acc.plus(&ak.times(ck))
            }
        },
    )
}

/// `(a∘h)_S` for a single subset.
pub fn compose_at<V: RingValue>(a: &Sequence<V>, h: &SetMap<V>, s: Mask) -> Result<V> {
    if !RingValue::is_zero(h.get(0)) {
        return Err(Error::NonzeroAtEmpty);
    }
    a.require(s.count_ones() as usize + 1)?;
    Ok(weighted_sum(&a.terms, &block_length_sums(h, s)?))
}

/// Calls `visit(k, layer)` for `k = 1..=n`, where `layer[S]` is entry `k`
/// of [`block_length_sums`] for `S`. Each layer comes from the one before by
/// splitting off the block that holds the smallest element of `S`:
/// `L_k(S) = Σ_{T ⊆ S, min S ∈ T} h_T L_{k-1}(S ∖ T)`.
///
/// This is `O(n 3^n)` for the whole table, against the sum of Bell numbers
/// for enumerating the partitions of every subset.
fn for_each_layer<V: RingValue>(h: &SetMap<V>, mut visit: impl FnMut(usize, &[V])) -> Result<()> {
    let ground = h.ground();
    check_cap("partition element count", MAX_PARTITION_ELEMENTS, ground.size())?;
    let mut prev = SetMap::<V>::unit(ground).table;
    for k in 1..=ground.size() {
        let mut next = vec![V::zero(); prev.len()];
        for s in ground.subsets().skip(1) {
            if (s.count_ones() as usize) < k {
                continue;
            }
            let low = s & s.wrapping_neg();
            let rest = s ^ low;
            let mut acc = V::zero();
            for u in submasks(rest) {
                let ht = &h.table[(low | u) as usize];
                let p = &prev[(rest ^ u) as usize];
                if !ht.is_zero() && !p.is_zero() {
                    acc = acc.plus(&ht.times(p));
                }
            }
            next[s as usize] = acc;
        }
        visit(k, &next);
        prev = next;
    }
    Ok(())
}

/// `(a∘h)_S = Σ_{σ ⊢ S} a_{ℓ(σ)} Π_{T ∈ σ} h_T`, with `(a∘h)_∅ = a_0`.
///
/// Needs `h_∅ = 0` and terms `a_0..=a_n` for a ground set of size `n`.
pub fn compose<V: RingValue>(a: &Sequence<V>, h: &SetMap<V>) -> Result<SetMap<V>> {
    if !RingValue::is_zero(h.get(0)) {
        return Err(Error::NonzeroAtEmpty);
    }
    let ground = h.ground();
    a.require(ground.size() + 1)?;
    let mut out = SetMap::unit(ground);
    out.table[0] = a.terms[0].clone();
    for_each_layer(h, |k, layer| {
        for (o, c) in out.table.iter_mut().zip(layer) {
            if !c.is_zero() {
                *o = o.plus(&a.terms[k].times(c));
            }
        }
    })?;
    Ok(out)
}

/// Multiplicative inverse of a set map with `h_∅ = 1`:
/// `h⁻¹_S = Σ_{σ ⊢ S} (-1)^{ℓ(σ)} ℓ(σ)! Π_{W ∈ σ} h_W`.
pub fn setmap_inverse<V: RingValue>(h: &SetMap<V>) -> Result<SetMap<V>> {
    if *h.get(0) != V::one() {
        return Err(Error::NotUnitAtEmpty);
    }
    // blocks are never empty, so h_∅ plays no part in the sums
    let mut out = SetMap::<V>::unit(h.ground());
    for_each_layer(h, |k, layer| {
        let w = arith::sign(k) * arith::factorial(k);
        for (o, c) in out.table.iter_mut().zip(layer) {
            if !c.is_zero() {
                *o = o.plus(&c.scaled(&w));
            }
        }
    })?;
    Ok(out)
}

/// The unique `h` with `h_∅ = 0` and `a∘h = g`.
///
/// Solves `g_S = a_1 h_S + Σ_{ℓ(σ)>1} a_{ℓ(σ)} Π h_T` for `h_S`, visiting
/// subsets in increasing mask order so every proper subset is already known.
pub fn decompose(g: &SetMap<Rational>, a: &Sequence<Rational>) -> Result<SetMap<Rational>> {
    let ground = g.ground();
    a.require(ground.size() + 1)?;
    if Zero::is_zero(&a.terms[1]) {
        return Err(Error::ZeroLinearTerm);
    }
    if a.terms[0] != *g.get(0) {
        return Err(Error::ConstantTermMismatch);
    }
    let mut h = SetMap::zero(ground);
    for s in ground.subsets().skip(1) {
        // h_S is still zero, so the one-block term drops out of the sums
        let sums = block_length_sums(&h, s)?;
        let rest = weighted_sum(&a.terms[2..], &sums[2..]);
        h.set(s, (g.get(s) - rest) / &a.terms[1]);
    }
    Ok(h)
}

/// Recovers `a_0..=a_{max_n}` from `g = a∘h`, given `h_∅ = 0` and `h`
/// nonzero on singletons.
///
/// `a_n` is solved on the subset `{0, …, n-1}`, where only the all-singletons
/// partition carries it. The result is then checked against `g` on every
/// subset of size at most `max_n`.
pub fn recover_sequence(
    g: &SetMap<Rational>,
    h: &SetMap<Rational>,
    max_n: usize,
) -> Result<Sequence<Rational>> {
    let ground = h.ground();
    if g.ground() != ground {
        return Err(Error::GroundMismatch { left: g.ground().size(), right: ground.size() });
    }
    if ground.size() < max_n {
        return Err(Error::CapExceeded {
            what: "recovered sequence length",
            limit: ground.size(),
            got: max_n,
        });
    }
    if !Zero::is_zero(h.get(0)) {
        return Err(Error::NonzeroAtEmpty);
    }
    if let Some(element) = (0..ground.size()).find(|&v| Zero::is_zero(h.get(1 << v))) {
        return Err(Error::ZeroOnSingleton { element });
    }

    let mut terms = vec![g.get(0).clone()];
    for n in 1..=max_n {
        let s: Mask = (1 << n) - 1;
        let sums = block_length_sums(h, s)?;
        let lower = weighted_sum(&terms, &sums[..n]);
        terms.push((g.get(s) - lower) / &sums[n]);
    }
    let a = Sequence::new(terms);

    for s in ground.subsets().filter(|s| s.count_ones() as usize <= max_n) {
        let sums = block_length_sums(h, s)?;
        if weighted_sum(&a.terms, &sums) != *g.get(s) {
            return Err(Error::Inconsistent { mask: s });
        }
    }
    Ok(a)
}
