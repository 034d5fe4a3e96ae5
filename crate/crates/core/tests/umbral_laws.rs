mod common;

use common::*;
use num_traits::Zero;
use proptest::collection::vec;
use proptest::prelude::*;
use setmap::arith::{binomial, int, ratio};
use setmap::{BinomialFamily, Functional, Poly, Rational};

fn families() -> Vec<BinomialFamily> {
    vec![
        BinomialFamily::Monomial,
        BinomialFamily::falling(int(1)).unwrap(),
        BinomialFamily::falling(int(-1)).unwrap(),
        BinomialFamily::falling(int(2)).unwrap(),
        BinomialFamily::falling(ratio(1, 2)).unwrap(),
        BinomialFamily::RisingFactorial,
        BinomialFamily::Abel(int(0)),
        BinomialFamily::Abel(int(1)),
        BinomialFamily::Abel(int(-1)),
        BinomialFamily::Abel(ratio(2, 3)),
        BinomialFamily::Log,
    ]
}

fn family() -> impl Strategy<Value = BinomialFamily> {
    proptest::sample::select(families())
}

#[test]
fn families_are_of_binomial_type() {
    for fam in families() {
        let a = fam.polys(7);
        for (n, an) in a.iter().enumerate() {
            assert_eq!(an.degree(), Some(n), "{fam} degree");
            // both sides have degree ≤ n in x and in y
            for x in 0..=n as i64 {
                for y in 0..=n as i64 {
                    let (x, y) = (int(x), int(y));
                    let lhs = an.eval(&(&x + &y));
                    let rhs: Rational =
                        (0..=n).map(|k| binomial(n, k) * a[k].eval(&x) * a[n - k].eval(&y)).sum();
                    assert_eq!(lhs, rhs, "{fam} n={n}");
                }
            }
        }
        assert_eq!(a[0], Poly::one());
    }
}

#[test]
fn delta_powers_pick_out_basis_elements() {
    for fam in families() {
        let delta = fam.delta(8);
        assert!(delta.is_delta(), "{fam}");
        for k in 0..=8 {
            let ak = delta.power(k);
            for n in 0..=8 {
                let expect = if n == k { factorial(k) } else { Rational::zero() };
                assert_eq!(ak.apply(&fam.poly(n)).unwrap(), expect, "{fam} k={k} n={n}");
            }
        }
    }
}

fn moments(len: usize) -> impl Strategy<Value = Functional> {
    vec(rational(), len).prop_map(Functional::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn umbral_product_commutes_and_associates(
        (l, m, r) in (1usize..=11).prop_flat_map(|d| (moments(d), moments(d), moments(d)))
    ) {
        prop_assert_eq!(l.umbral_product(&m).unwrap(), m.umbral_product(&l).unwrap());
        prop_assert_eq!(
            l.umbral_product(&m).unwrap().umbral_product(&r).unwrap(),
            l.umbral_product(&m.umbral_product(&r).unwrap()).unwrap()
        );
        let unit = Functional::evaluation(&int(0), l.degree_bound());
        prop_assert_eq!(l.umbral_product(&unit).unwrap(), l);
    }

    #[test]
    fn basis_round_trip(fam in family(), f in poly(8)) {
        let coeffs = fam.to_basis(&f);
        prop_assert_eq!(coeffs.len(), f.degree().map_or(0, |d| d + 1));
        prop_assert_eq!(fam.from_basis(&coeffs), f);
    }

    #[test]
    fn delta_powers_determine_the_polynomial(fam in family(), f in poly(8)) {
        let d = f.degree().unwrap_or(0);
        let delta = fam.delta(d.max(1));
        let values: Vec<Rational> = (0..=d).map(|k| delta.power(k).apply(&f).unwrap()).collect();
        prop_assert_eq!(fam.from_power_values(&values), f);
    }
}

#[test]
fn degree_overflow_is_an_error() {
    let delta = BinomialFamily::Monomial.delta(3);
    assert!(delta.apply(&Poly::monomial(3)).is_ok());
    assert!(delta.apply(&Poly::monomial(4)).is_err());
}
