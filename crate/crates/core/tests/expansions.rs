mod common;

use common::*;
use proptest::collection::vec;
use proptest::prelude::*;
use setmap::arith::{int, ratio};
use setmap::expansions::{
    expand, setmap_power_identity, verify_cexp, verify_exp91, verify_exp92, verify_exp93, CexpMode,
};
use setmap::graph::chromatic_setmap;
use setmap::setmap::{block_length_sums, compose};
use setmap::{BinomialFamily, Caps, Functional, Poly, Rational, Sequence};

fn families() -> Vec<BinomialFamily> {
    vec![
        BinomialFamily::Monomial,
        BinomialFamily::falling(int(1)).unwrap(),
        BinomialFamily::falling(int(-1)).unwrap(),
        BinomialFamily::falling(int(2)).unwrap(),
        BinomialFamily::RisingFactorial,
        BinomialFamily::Abel(int(0)),
        BinomialFamily::Abel(int(1)),
        BinomialFamily::Abel(int(-1)),
        BinomialFamily::Log,
    ]
}

#[test]
fn every_family_reconstructs_every_restriction() {
    let caps = Caps::default();
    for n in 0..=4 {
        for g in all_graphs(n) {
            let chi = chromatic_setmap(&g);
            for fam in families() {
                for s in g.ground().subsets() {
                    let e = expand(&chi, s, &fam, &caps).unwrap();
                    assert_eq!(e.reconstruct(), chi[s], "{fam} {g:?} S={s}");
                }
            }
        }
    }
}

#[test]
fn verification_suites_pass_on_small_graphs() {
    let caps = Caps::default();
    for n in 0..=4 {
        for g in all_graphs(n) {
            let full = g.full_mask();
            assert!(verify_exp91(&g, full, &caps).unwrap(), "{g:?}");
            assert!(verify_exp92(&g, full, &caps).unwrap(), "{g:?}");
            assert!(verify_exp93(&g, full, &caps).unwrap(), "{g:?}");
            for a in [int(0), int(1), int(-1), ratio(1, 2)] {
                assert!(verify_cexp(&g, full, &a, CexpMode::Derivative, &caps).unwrap());
            }
            for a in [int(1), int(-1), int(3)] {
                assert!(verify_cexp(&g, full, &a, CexpMode::Evaluation, &caps).unwrap());
            }
            let chi = chromatic_setmap(&g);
            for x0 in 1..=3 {
                for y0 in 1..=3 {
                    assert!(setmap_power_identity(&chi, &int(x0), y0, &caps).unwrap());
                }
            }
        }
    }
}

fn family() -> impl Strategy<Value = BinomialFamily> {
    proptest::sample::select(families())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// θ(h) = a(x)∘h, then the delta functional entrywise, gives back h.
    #[test]
    fn theta_round_trip(fam in family(), h in (0usize..=6).prop_flat_map(|n| table_with_empty(n, int(0)))) {
        let n = h.ground().size();
        let a = Sequence::new(fam.polys(n));
        let lifted = h.map(|c| Poly::constant(c.clone()));
        let theta = compose(&a, &lifted).unwrap();
        let back = fam.delta(n.max(1)).apply_setmap(&theta).unwrap();
        prop_assert_eq!(back, h);
    }

    /// (LM) p = (L p)·(M p) for a binomial-type p.
    #[test]
    fn functionals_act_multiplicatively(
        g in graph(5),
        (l, m) in (vec(rational(), 6), vec(rational(), 6)),
    ) {
        let (l, m) = (Functional::new(l), Functional::new(m));
        let chi = chromatic_setmap(&g);
        let lhs = l.umbral_product(&m).unwrap().apply_setmap(&chi).unwrap();
        let rhs = l.apply_setmap(&chi).unwrap().mul(&m.apply_setmap(&chi).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// A^k p_S = k! Σ over k-block partitions of Π A p_T.
    #[test]
    fn delta_powers_sum_over_partitions(g in graph(5), fam in family()) {
        let chi = chromatic_setmap(&g);
        let delta = fam.delta(5);
        let coeffs = delta.apply_setmap(&chi).unwrap();
        for k in 0..=4 {
            let ak = delta.power(k).apply_setmap(&chi).unwrap();
            for s in g.ground().subsets() {
                let sums = block_length_sums(&coeffs, s).unwrap();
                let expect = sums.get(k).cloned().unwrap_or_else(|| int(0)) * factorial(k);
                prop_assert_eq!(&ak[s], &expect);
            }
        }
    }

    #[test]
    fn cexp_on_random_graphs(g in graph(6), a in rational()) {
        let caps = Caps::default();
        let full = g.full_mask();
        prop_assert!(verify_cexp(&g, full, &a, CexpMode::Derivative, &caps).unwrap());
        if a != Rational::from_integer(0.into()) {
            prop_assert!(verify_cexp(&g, full, &a, CexpMode::Evaluation, &caps).unwrap());
        }
    }
}
