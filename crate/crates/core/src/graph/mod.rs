//! Simple graphs on at most 20 vertices, the chromatic polynomial set map,
//! and brute-force counting oracles.

mod chromatic;
mod oracles;

use alloc::vec;
use alloc::vec::Vec;

pub use chromatic::{chromatic_poly, chromatic_setmap, subgraph_expansion_chromatic};
pub use oracles::{
    count_acyclic_orientations, count_acyclic_sink_source, count_acyclic_unique_sink, count_proper_colorings,
    count_stable_partitions,
};

use crate::setmap::{GroundSet, Mask};
use crate::{Error, Result};

/// A simple undirected graph with vertices `0..n`, stored as adjacency masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Mask>,
}

impl Graph {
    pub const MAX_VERTICES: usize = GroundSet::MAX_SIZE;

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        GroundSet::new(n)?;
        let mut adj = vec![0; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("vertex count within limit")
    }

    pub fn complete(n: usize) -> Self {
        let full: Mask = ((1u64 << n) - 1) as Mask;
        GroundSet::new(n).expect("vertex count within limit");
        Graph { adj: (0..n).map(|v| full & !(1 << v)).collect() }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("vertex count within limit")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n > 2 {
            edges.push((0, n - 1));
        }
        Graph::new(n, &edges).expect("vertex count within limit")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.adj.len()).expect("checked at construction")
    }

    pub fn full_mask(&self) -> Mask {
        self.ground().full_mask()
    }

    pub fn neighbors(&self, v: usize) -> Mask {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && v < self.adj.len() && self.adj[u] & (1 << v) != 0
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, &m) in self.adj.iter().enumerate() {
            let mut rest = m & !((2u64 << u) - 1) as Mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out.push((u, v));
                rest &= rest - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// True when no edge has both ends in `s`.
    pub fn is_independent(&self, s: Mask) -> bool {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if self.adj[v] & s != 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }

    /// The induced subgraph `G|_S`, vertices renumbered in increasing order.
    pub fn restrict(&self, s: Mask) -> Graph {
        let keep: Vec<usize> = (0..self.adj.len()).filter(|&v| s & (1 << v) != 0).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[v] & (1 << w) != 0)
                    .fold(0, |m, (i, _)| m | (1 << i))
            })
            .collect();
        Graph { adj }
    }

    /// `G|_σ`: same vertex set, keeping only edges whose ends share a block.
    pub fn within_blocks(&self, blocks: &[Mask]) -> Graph {
        let mut adj = vec![0; self.adj.len()];
        for &b in blocks {
            let mut rest = b;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                adj[v] |= self.adj[v] & b;
                rest &= rest - 1;
            }
        }
        Graph { adj }
    }
}
