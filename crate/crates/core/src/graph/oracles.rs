//! Brute-force counts used as independent checks on the algebra. None of
//! these touch polynomials.

use alloc::vec;

use super::Graph;
use crate::error::check_cap;
use crate::setmap::partition::for_each_partition;
use crate::setmap::Mask;
use crate::{Caps, Error, Result};

/// Proper colorings with `x` colors, by backtracking over vertices in order.
pub fn count_proper_colorings(g: &Graph, x: u64, caps: &Caps) -> Result<u64> {
    let n = g.vertex_count();
    let leaves = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(x)).unwrap_or(u64::MAX);
    if leaves > caps.coloring_leaves {
        return Err(Error::CapExceeded {
            what: "coloring leaves x^n",
            limit: caps.coloring_leaves as usize,
            got: leaves.min(usize::MAX as u64) as usize,
        });
    }
    let mut colors = vec![0u64; n];
    Ok(color_from(g, x, 0, &mut colors))
}

fn color_from(g: &Graph, x: u64, v: usize, colors: &mut [u64]) -> u64 {
    if v == colors.len() {
        return 1;
    }
    let mut total = 0;
    for c in 0..x {
        let clash = (0..v).any(|w| g.has_edge(v, w) && colors[w] == c);
        if !clash {
            colors[v] = c;
            total += color_from(g, x, v + 1, colors);
        }
    }
    total
}

/// Calls `f(out, in)` with the out- and in-neighbor masks of every acyclic
/// orientation. Bit `i` of the orientation index directs edge `i` from its
/// smaller to its larger endpoint.
fn for_each_acyclic_orientation(g: &Graph, caps: &Caps, mut f: impl FnMut(&[Mask], &[Mask])) -> Result<()> {
    let edges = g.edges();
    check_cap("edge count", caps.edges, edges.len())?;
    let n = g.vertex_count();
    let mut out = vec![0 as Mask; n];
    let mut inn = vec![0 as Mask; n];
    for orient in 0u64..(1 << edges.len()) {
        out.iter_mut().for_each(|m| *m = 0);
        inn.iter_mut().for_each(|m| *m = 0);
        for (i, &(a, b)) in edges.iter().enumerate() {
            let (from, to) = if orient & (1 << i) != 0 { (a, b) } else { (b, a) };
            out[from] |= 1 << to;
            inn[to] |= 1 << from;
        }
        if is_acyclic(&out) {
            f(&out, &inn);
        }
    }
    Ok(())
}

/// Peels sinks until nothing is left (acyclic) or no sink remains (cycle).
fn is_acyclic(out: &[Mask]) -> bool {
    let mut alive: Mask = ((1u64 << out.len()) - 1) as Mask;
    while alive != 0 {
        let mut sinks = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if out[v] & alive == 0 {
                sinks |= 1 << v;
            }
            rest &= rest - 1;
        }
        if sinks == 0 {
            return false;
        }
        alive &= !sinks;
    }
    true
}

fn mask_of(adj: &[Mask], pred: impl Fn(Mask) -> bool) -> Mask {
    adj.iter().enumerate().filter(|(_, &m)| pred(m)).fold(0, |acc, (v, _)| acc | (1 << v))
}

pub fn count_acyclic_orientations(g: &Graph, caps: &Caps) -> Result<u64> {
    let mut count = 0;
    for_each_acyclic_orientation(g, caps, |_, _| count += 1)?;
    Ok(count)
}

/// Set partitions of the vertex set whose blocks are all independent.
pub fn count_stable_partitions(g: &Graph, caps: &Caps) -> Result<u64> {
    check_cap("vertex count", caps.stable_vertices, g.vertex_count())?;
    let mut count = 0;
    for_each_partition(g.full_mask(), |blocks| {
        if blocks.iter().all(|&b| g.is_independent(b)) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Acyclic orientations whose only sink is `v`. A sink is any vertex without
/// out-edges, so isolated vertices count as sinks too.
pub fn count_acyclic_unique_sink(g: &Graph, v: usize, caps: &Caps) -> Result<u64> {
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut count = 0;
    for_each_acyclic_orientation(g, caps, |out, _| {
        if mask_of(out, |m| m == 0) == 1 << v {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Acyclic orientations with unique source `u` and unique sink `v`, for
/// adjacent `u`, `v` in a graph with at least one edge and no isolated
/// vertices.
pub fn count_acyclic_sink_source(g: &Graph, u: usize, v: usize, caps: &Caps) -> Result<u64> {
    let n = g.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if let Some(vertex) = (0..n).find(|&w| g.neighbors(w) == 0) {
        return Err(Error::IsolatedVertex { vertex });
    }
    if !g.has_edge(u, v) {
        return Err(Error::NotAdjacent { u, v });
    }
    let mut count = 0;
    for_each_acyclic_orientation(g, caps, |out, inn| {
        if mask_of(out, |m| m == 0) == 1 << v && mask_of(inn, |m| m == 0) == 1 << u {
            count += 1;
        }
    })?;
    Ok(count)
}
