//! Expansion of a nontrivial binomial-type polynomial set map in any
//! binomial-type family:
//!
//! ```text
//! p_S(x) = Σ_{σ ⊢ S} a_{ℓ(σ)}(x) Π_{T ∈ σ} A p_T(x)
//! ```
//!
//! where `A` is the delta functional associated to `a(x)`. The chromatic
//! verification suites below specialize this to particular families and
//! compare the coefficients `A χ_T` against independent computations:
//! derivatives and evaluations of `χ_T`, stable-partition counts, and
//! acyclic-orientation counts.

use alloc::vec::Vec;
use num_traits::One;

use crate::error::check_cap;
use crate::graph::{chromatic_setmap, count_acyclic_orientations, count_stable_partitions, Graph};
use crate::setmap::partition::for_each_partition;
use crate::setmap::{block_length_sums, submasks, Mask, SetMap};
use crate::{arith, BinomialFamily, Caps, Error, Poly, Rational, Result};

/// Checks `p_S(x+y) = Σ_{T ⊎ U = S} p_T(x) p_U(y)` for every subset `S`.
///
/// Both sides have degree at most `D` in each variable separately, `D` the
/// largest degree in the table, so agreement on the grid `{0..=D}²` proves
/// the identity.
pub fn check_binomial_type(p: &SetMap<Poly>, caps: &Caps) -> Result<bool> {
    let ground = p.ground();
    check_cap("ground size", caps.binomial_ground, ground.size())?;
    let d = p.table().iter().filter_map(Poly::degree).max().unwrap_or(0);
    let points: Vec<Rational> = (0..=2 * d as i64).map(arith::int).collect();
    // values[S][i] = p_S(i)
    let values: Vec<Vec<Rational>> =
        p.table().iter().map(|f| points.iter().map(|x| f.eval(x)).collect()).collect();
    for s in ground.subsets() {
        for i in 0..=d {
            for j in 0..=d {
                let lhs = &values[s as usize][i + j];
                let rhs: Rational =
                    submasks(s).map(|t| &values[t as usize][i] * &values[(s ^ t) as usize][j]).sum();
                if *lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The expansion of one entry `p_S` in a family.
#[derive(Clone, Debug, PartialEq)]
pub struct Expansion {
    pub source: Mask,
    pub family: BinomialFamily,
    /// `A p_T` for every nonempty `T ⊆ S`; zero elsewhere.
    pub coefficients: SetMap<Rational>,
    /// `c_k = Σ_{σ ⊢ S, ℓ(σ)=k} Π_{T ∈ σ} A p_T`, for `k = 0..=|S|`.
    by_length: Vec<Rational>,
}

impl Expansion {
    pub fn by_length(&self) -> &[Rational] {
        &self.by_length
    }

    /// `Σ_k c_k a_k(x)`.
    pub fn reconstruct(&self) -> Poly {
        self.family.from_basis(&self.by_length)
    }
}

/// Expands `p_S`. `p` must be nontrivial (`p_∅ = 1`).
pub fn expand(p: &SetMap<Poly>, s: Mask, family: &BinomialFamily, caps: &Caps) -> Result<Expansion> {
    let ground = p.ground();
    ground.check(s)?;
    check_cap("subset size", caps.expand_subset, s.count_ones() as usize)?;
    if *p.get(0) != Poly::one() {
        return Err(Error::NotUnitAtEmpty);
    }
    let degree = submasks(s).filter_map(|t| p.get(t).degree()).max().unwrap_or(0).max(1);
    let delta = family.delta(degree);
    let mut coefficients = SetMap::zero(ground);
    for t in submasks(s).filter(|&t| t != 0) {
        coefficients.set(t, delta.apply(p.get(t))?);
    }
    let by_length = block_length_sums(&coefficients, s)?;
    Ok(Expansion { source: s, family: family.clone(), coefficients, by_length })
}

/// Per-length aggregates `c_k` of an expansion.
pub fn expansion_by_length(e: &Expansion) -> Vec<Rational> {
    e.by_length.to_vec()
}

/// `Σ_k c_k a_k(x)` where `c_k` sums coefficient products over `k`-block
/// partitions of `s`. Builds the right-hand side of an expansion from
/// coefficients obtained some other way.
fn resum(coefficients: &SetMap<Rational>, s: Mask, family: &BinomialFamily) -> Result<Poly> {
    Ok(family.from_basis(&block_length_sums(coefficients, s)?))
}

/// Restriction to `s` plus its chromatic set map; the suites work on the
/// full vertex set of the restriction.
fn restricted_chromatic(g: &Graph, s: Mask, limit: usize) -> Result<(Graph, SetMap<Poly>)> {
    g.ground().check(s)?;
    check_cap("subset size", limit, s.count_ones() as usize)?;
    let h = g.restrict(s);
    let chi = chromatic_setmap(&h);
    Ok((h, chi))
}

/// Rising-factorial coefficients of `χ_S` against pair counts: for every `k`,
/// `(-1)^{|S|-k} c_k` must equal the number of pairs `(σ, α)` with `σ ⊢ S`,
/// `ℓ(σ) = k` and `α` an acyclic orientation of `G|_σ`.
pub fn verify_exp91(g: &Graph, s: Mask, caps: &Caps) -> Result<bool> {
    let (h, chi) = restricted_chromatic(g, s, caps.pair_count_subset)?;
    let full = h.full_mask();
    let n = h.vertex_count();
    let e = expand(&chi, full, &BinomialFamily::RisingFactorial, caps)?;
    if e.reconstruct() != chi[full] {
        return Ok(false);
    }

    let mut pairs = alloc::vec![0u64; n + 1];
    let mut failure = None;
    for_each_partition(full, |blocks| match count_acyclic_orientations(&h.within_blocks(blocks), caps) {
        Ok(c) => pairs[blocks.len()] += c,
        Err(err) => failure = Some(err),
    })?;
    if let Some(err) = failure {
        return Err(err);
    }
    Ok((0..=n).all(|k| arith::sign(n - k) * &e.by_length[k] == arith::int(pairs[k] as i64)))
}

/// Which side of the `a`-parametrized chromatic expansions to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CexpMode {
    /// Abel family `x(x - an)^{n-1}`, coefficients `χ'_T(a)`.
    Derivative,
    /// Falling factorials `(x/a)_n`, coefficients `χ_T(a)`; needs `a ≠ 0`.
    Evaluation,
}

/// Checks the `a`-parametrized expansion of `χ_S` both ways: the engine's
/// coefficients `A χ_T` must equal `χ'_T(a)` (derivative mode) or `χ_T(a)`
/// (evaluation mode), computed directly, and re-summing the directly
/// computed coefficients must give `χ_S` exactly.
///
/// `a = 0` in derivative mode is the monomial expansion with coefficients
/// `χ'_T(0)`; `a = 1` in evaluation mode is the stable-partition expansion;
/// `a = -1` in evaluation mode is the rising-factorial form.
pub fn verify_cexp(g: &Graph, s: Mask, a: &Rational, mode: CexpMode, caps: &Caps) -> Result<bool> {
    let family = match mode {
        CexpMode::Derivative => BinomialFamily::Abel(a.clone()),
        CexpMode::Evaluation => BinomialFamily::falling(a.clone())?,
    };
    let (_, chi) = restricted_chromatic(g, s, caps.verify_subset)?;
    let full = chi.ground().full_mask();
    let direct = chi.map(|p| match mode {
        CexpMode::Derivative => p.derivative().eval(a),
        CexpMode::Evaluation => p.eval(a),
    });

    let e = expand(&chi, full, &family, caps)?;
    let coefficients_agree = submasks(full).filter(|&t| t != 0).all(|t| e.coefficients[t] == direct[t]);
    Ok(coefficients_agree && e.reconstruct() == chi[full] && resum(&direct, full, &family)? == chi[full])
}

/// The Abel(1) expansion `χ_S = Σ_σ x(x-ℓ)^{ℓ-1} Π χ'_T(1)`.
pub fn verify_exp92(g: &Graph, s: Mask, caps: &Caps) -> Result<bool> {
    verify_cexp(g, s, &Rational::one(), CexpMode::Derivative, caps)
}

/// `χ_S = Σ_σ b_{ℓ(σ)}(x) Π s_T` with `s_T` the stable-partition count of
/// `G|_T`, plus the cross-check `B χ_T = s_T`.
pub fn verify_exp93(g: &Graph, s: Mask, caps: &Caps) -> Result<bool> {
    let (h, chi) = restricted_chromatic(g, s, caps.verify_subset)?;
    let full = h.full_mask();
    let mut stable = SetMap::zero(chi.ground());
    for t in submasks(full).filter(|&t| t != 0) {
        let count = count_stable_partitions(&h.restrict(t), caps)?;
        stable.set(t, arith::int(count as i64));
    }
    let e = expand(&chi, full, &BinomialFamily::Log, caps)?;
    let b_matches = submasks(full).filter(|&t| t != 0).all(|t| e.coefficients[t] == stable[t]);
    Ok(b_matches && resum(&stable, full, &BinomialFamily::Log)? == chi[full])
}

/// `Σ_S p_S(x0·y0) S = (Σ_S p_S(x0) S)^{y0}` in the set-map ring.
pub fn setmap_power_identity(p: &SetMap<Poly>, x0: &Rational, y0: usize, caps: &Caps) -> Result<bool> {
    check_cap("ground size", caps.binomial_ground, p.ground().size())?;
    if y0 < 1 {
        return Err(Error::ExponentTooSmall);
    }
    let at_x = p.map(|f| f.eval(x0));
    let xy = x0 * arith::int(y0 as i64);
    let at_xy = p.map(|f| f.eval(&xy));
    Ok(at_x.pow(y0) == at_xy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::setmap::GroundSet;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn binomial_check() {
        for g in [Graph::complete(3), Graph::path(4), Graph::cycle(5), Graph::empty(2)] {
            assert!(check_binomial_type(&chromatic_setmap(&g), &caps()).unwrap());
        }
        let ground = GroundSet::new(3).unwrap();
        assert!(check_binomial_type(&SetMap::zero(ground), &caps()).unwrap());

        let mut powers = SetMap::from_fn(ground, |s| Poly::monomial(s.count_ones() as usize));
        assert!(check_binomial_type(&powers, &caps()).unwrap());
        let bumped = powers[0b011].clone() + Poly::one();
        powers.set(0b011, bumped);
        assert!(!check_binomial_type(&powers, &caps()).unwrap());

        let big = SetMap::<Poly>::zero(GroundSet::new(8).unwrap());
        assert!(check_binomial_type(&big, &caps()).is_err());
    }

    #[test]
    fn expand_k2_monomial() {
        let chi = chromatic_setmap(&Graph::complete(2));
        let e = expand(&chi, 0b11, &BinomialFamily::Monomial, &caps()).unwrap();
        assert_eq!(e.coefficients[0b01], int(1));
        assert_eq!(e.coefficients[0b10], int(1));
        assert_eq!(e.coefficients[0b11], int(-1));
        assert_eq!(e.by_length(), &[0, -1, 1].map(int));
        assert_eq!(e.reconstruct(), Poly::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn expand_k2_other_families() {
        let chi = chromatic_setmap(&Graph::complete(2));
        let falling = BinomialFamily::FallingFactorial(int(1));
        let e = expand(&chi, 0b11, &falling, &caps()).unwrap();
        assert_eq!(e.coefficients[0b11], int(0));
        assert_eq!(e.coefficients[0b01], int(1));
        assert_eq!(expansion_by_length(&e), [0, 0, 1].map(int));
        assert_eq!(e.reconstruct(), chi[0b11]);

        let e = expand(&chi, 0b11, &BinomialFamily::RisingFactorial, &caps()).unwrap();
        assert_eq!(e.by_length(), &[0, -2, 1].map(int));
    }

    #[test]
    fn expand_empty_subset() {
        let chi = chromatic_setmap(&Graph::complete(3));
        let e = expand(&chi, 0, &BinomialFamily::Log, &caps()).unwrap();
        assert_eq!(e.by_length(), &[int(1)]);
        assert_eq!(e.reconstruct(), Poly::one());
    }

    #[test]
    fn top_coefficient_is_singleton_product() {
        let chi = chromatic_setmap(&Graph::cycle(4));
        for fam in [BinomialFamily::Abel(int(2)), BinomialFamily::FallingFactorial(int(3))] {
            let e = expand(&chi, 0b1111, &fam, &caps()).unwrap();
            let prod: Rational = (0..4).map(|v| e.coefficients[1 << v].clone()).product();
            assert_eq!(e.by_length()[4], prod);
        }
    }

    #[test]
    fn expand_rejects_trivial_map() {
        let zero = SetMap::<Poly>::zero(GroundSet::new(2).unwrap());
        assert_eq!(expand(&zero, 0b11, &BinomialFamily::Monomial, &caps()), Err(Error::NotUnitAtEmpty));
    }

    #[test]
    fn suites_on_small_graphs() {
        for g in [Graph::complete(2), Graph::complete(3), Graph::path(3), Graph::empty(3), Graph::cycle(4)] {
            let full = g.full_mask();
            assert!(verify_exp91(&g, full, &caps()).unwrap());
            assert!(verify_exp92(&g, full, &caps()).unwrap());
            assert!(verify_exp93(&g, full, &caps()).unwrap());
            assert!(verify_cexp(&g, full, &int(0), CexpMode::Derivative, &caps()).unwrap());
            assert!(verify_cexp(&g, full, &int(1), CexpMode::Evaluation, &caps()).unwrap());
            assert!(verify_cexp(&g, full, &int(-1), CexpMode::Evaluation, &caps()).unwrap());
        }
        assert!(verify_exp92(&Graph::complete(3), 0b001, &caps()).unwrap());
        assert!(verify_exp93(&Graph::complete(3), 0b010, &caps()).unwrap());
    }

    #[test]
    fn suite_errors() {
        let g = Graph::complete(3);
        assert_eq!(verify_cexp(&g, 0b111, &int(0), CexpMode::Evaluation, &caps()), Err(Error::ZeroScale));
        let big = Graph::empty(7);
        assert!(matches!(verify_exp91(&big, big.full_mask(), &caps()), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn power_identity() {
        let chi = chromatic_setmap(&Graph::complete(2));
        assert!(setmap_power_identity(&chi, &int(2), 2, &caps()).unwrap());
        let k3 = chromatic_setmap(&Graph::complete(3));
        assert!(setmap_power_identity(&k3, &int(1), 3, &caps()).unwrap());
        assert!(setmap_power_identity(&k3, &int(5), 1, &caps()).unwrap());
        assert_eq!(setmap_power_identity(&k3, &int(1), 0, &caps()), Err(Error::ExponentTooSmall));
        // a non-binomial map fails
        let ground = GroundSet::new(2).unwrap();
        let p = SetMap::from_fn(ground, |s| if s == 0 { Poly::one() } else { Poly::from_ints(&[0, 0, 1]) });
        assert!(!setmap_power_identity(&p, &int(1), 2, &caps()).unwrap());
    }
}
