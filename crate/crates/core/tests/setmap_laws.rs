mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use setmap::arith::int;
use setmap::setmap::{compose, decompose, partitions_of, recover_sequence, setmap_inverse};
use setmap::{Rational, Sequence, SetMap};

fn bell(n: usize) -> u64 {
    // Bell triangle
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &r in &row {
            next.push(next.last().unwrap() + r);
        }
        row = next;
    }
    row[0]
}

/// Ordinary power series helpers for the exponential-series oracle. An
/// exponential series with coefficients `a_n` is stored as `a_n / n!`.
fn to_ordinary(a: &[Rational]) -> Vec<Rational> {
    a.iter().enumerate().map(|(n, c)| c / factorial(n)).collect()
}

fn from_ordinary(a: &[Rational]) -> Vec<Rational> {
    a.iter().enumerate().map(|(n, c)| c * factorial(n)).collect()
}

fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `gen_a(gen_b(t))` truncated to `len` terms; `b_0` must be zero.
fn series_compose(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    let mut power = vec![Rational::zero(); len];
    power[0] = Rational::one();
    for c in a.iter().take(len) {
        for (o, p) in out.iter_mut().zip(&power) {
            *o += c * p;
        }
        power = series_mul(&power, b, len);
    }
    out
}

fn size_constant(n: usize, seq: &[Rational]) -> SetMap<Rational> {
    SetMap::from_fn(ground(n), |s| seq[s.count_ones() as usize].clone())
}

fn ring_triple() -> impl Strategy<Value = (SetMap<Rational>, SetMap<Rational>, SetMap<Rational>)> {
    (0usize..=8).prop_flat_map(|n| (table(n), table(n), table(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms((f, g, h) in ring_triple()) {
        let unit = SetMap::unit(f.ground());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.mul(&unit).unwrap(), f.clone());
        prop_assert_eq!(f.add(&SetMap::zero(f.ground())).unwrap(), f);
    }

    #[test]
    fn inverse_is_two_sided(h in (0usize..=8).prop_flat_map(|n| table_with_empty(n, Rational::one()))) {
        let inv = setmap_inverse(&h).unwrap();
        let unit = SetMap::unit(h.ground());
        prop_assert_eq!(h.mul(&inv).unwrap(), unit.clone());
        prop_assert_eq!(inv.mul(&h).unwrap(), unit);
    }

    #[test]
    fn composition_turns_sequence_products_into_setmap_products(
        (a, b, h) in (0usize..=7).prop_flat_map(|n| (sequence(n + 1), sequence(n + 1), table_with_empty(n, int(0))))
    ) {
        let lhs = compose(&a.binomial_mul(&b), &h).unwrap();
        let rhs = compose(&a, &h).unwrap().mul(&compose(&b, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn size_constant_product_is_series_product(a in sequence(9), b in sequence(9), n in 0usize..=8) {
        let prod = size_constant(n, &a.terms).mul(&size_constant(n, &b.terms)).unwrap();
        let expect = from_ordinary(&series_mul(&to_ordinary(&a.terms), &to_ordinary(&b.terms), 9));
        prop_assert_eq!(prod, size_constant(n, &expect));
    }

    #[test]
    fn size_constant_composition_is_series_composition(a in sequence(9), b in sequence(9), n in 0usize..=8) {
        let mut b = b.terms;
        b[0] = int(0);
        let comp = compose(&a, &size_constant(n, &b)).unwrap();
        let expect = from_ordinary(&series_compose(&to_ordinary(&a.terms), &to_ordinary(&b), 9));
        prop_assert_eq!(comp.to_sequence().unwrap().terms, expect[..=n].to_vec());
    }

    #[test]
    fn decomposition_is_unique(
        (a, h) in (1usize..=6).prop_flat_map(|n| (
            (sequence(n + 1), nonzero_rational()).prop_map(|(mut a, a1)| { a.terms[1] = a1; a }),
            table_with_empty(n, int(0)),
        ))
    ) {
        let g = compose(&a, &h).unwrap();
        prop_assert_eq!(decompose(&g, &a).unwrap(), h.clone());

        let mut h = h;
        let n = h.ground().size();
        for v in 0..n {
            if h[1 << v].is_zero() {
                h.set(1 << v, int(1));
            }
        }
        let g = compose(&a, &h).unwrap();
        prop_assert_eq!(recover_sequence(&g, &h, n).unwrap(), a);
    }
}

#[test]
fn partitions_are_bell_many_and_cover() {
    for n in 0..=9u32 {
        let s = (1u32 << n) - 1;
        let all: Vec<_> = partitions_of(s).unwrap().collect();
        assert_eq!(all.len() as u64, bell(n as usize));
        assert!(all.iter().all(|p| p.union() == s));
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.blocks().cmp(b.blocks()));
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
    // non-contiguous subset
    assert_eq!(partitions_of(0b1010_0110).unwrap().count() as u64, bell(4));
}

#[test]
fn bell_numbers_from_composition() {
    let n = 8;
    let ones = Sequence::new(vec![int(1); n + 1]);
    let mut h = SetMap::from_fn(ground(n), |_| int(1));
    h.set(0, int(0));
    let g = compose(&ones, &h).unwrap();
    for k in 0..=n {
        assert_eq!(g[(1 << k) - 1], int(bell(k) as i64));
    }
}
