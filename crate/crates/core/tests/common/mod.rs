#![allow(dead_code)]

use proptest::collection::vec;
use proptest::prelude::*;
use setmap::arith::{int, ratio};
use setmap::{Graph, GroundSet, Poly, Rational, Sequence, SetMap};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=6, 1i64..=4, any::<bool>()).prop_map(|(p, q, neg)| ratio(if neg { -p } else { p }, q))
}

pub fn ground(n: usize) -> GroundSet {
    GroundSet::new(n).unwrap()
}

pub fn table(n: usize) -> impl Strategy<Value = SetMap<Rational>> {
    vec(rational(), 1 << n).prop_map(move |t| SetMap::new(ground(n), t).unwrap())
}

/// Random table with `h_∅` forced to `empty`.
pub fn table_with_empty(n: usize, empty: Rational) -> impl Strategy<Value = SetMap<Rational>> {
    table(n).prop_map(move |mut h| {
        h.set(0, empty.clone());
        h
    })
}

pub fn sequence(len: usize) -> impl Strategy<Value = Sequence<Rational>> {
    vec(rational(), len).prop_map(Sequence::new)
}

pub fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    vec(rational(), 0..=max_degree + 1).prop_map(Poly::from_coeffs)
}

/// A graph on `n` vertices from a bit per vertex pair.
pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits & (1 << i) != 0 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (0..(1u64 << pairs)).prop_map(move |bits| graph_from_bits(n, bits))
    })
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |bits| graph_from_bits(n, bits))
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(int).product()
}
