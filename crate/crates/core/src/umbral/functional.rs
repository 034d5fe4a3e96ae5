use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::setmap::SetMap;
use crate::{arith, Error, Poly, Rational, Result};

/// A linear functional on polynomials of degree at most `D`, stored as its
/// values on `1, x, …, x^D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    moments: Vec<Rational>,
}

impl Functional {
    /// `moments[n]` is the value on `x^n`. Needs at least one moment.
    pub fn new(moments: Vec<Rational>) -> Self {
        assert!(!moments.is_empty(), "a functional needs at least the moment of 1");
        Functional { moments }
    }

    /// `q ↦ q(c)` up to degree `degree`.
    pub fn evaluation(c: &Rational, degree: usize) -> Self {
        Functional::new((0..=degree).map(|n| arith::pow(c, n)).collect())
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    pub fn degree_bound(&self) -> usize {
        self.moments.len() - 1
    }

    /// `A1 = 0` and `Ax ≠ 0`.
    pub fn is_delta(&self) -> bool {
        self.moments[0].is_zero() && self.moments.get(1).is_some_and(|m| !m.is_zero())
    }

    /// `Σ_k f_k · moment_k`. Polynomials above the degree bound are rejected.
    pub fn apply(&self, f: &Poly) -> Result<Rational> {
        if let Some(d) = f.degree() {
            if d > self.degree_bound() {
                return Err(Error::DegreeOverflow { degree: d, bound: self.degree_bound() });
            }
        }
        Ok(f.coeffs().iter().zip(&self.moments).map(|(c, m)| c * m).sum())
    }

    /// Applies the functional to every entry of a polynomial set map.
    pub fn apply_setmap(&self, p: &SetMap<Poly>) -> Result<SetMap<Rational>> {
        p.try_map(|f| self.apply(f))
    }

    /// `LM x^n = Σ_k C(n,k) L x^k M x^{n-k}`.
    pub fn umbral_product(&self, other: &Functional) -> Result<Functional> {
        if self.moments.len() != other.moments.len() {
            return Err(Error::LengthMismatch { left: self.moments.len(), right: other.moments.len() });
        }
        let moments = (0..self.moments.len())
            .map(|n| (0..=n).map(|k| arith::binomial(n, k) * &self.moments[k] * &other.moments[n - k]).sum())
            .collect();
        Ok(Functional { moments })
    }

    /// The `k`-fold umbral power; `A^0` is evaluation at 0.
    pub fn power(&self, k: usize) -> Functional {
        let mut unit = vec![Rational::zero(); self.moments.len()];
        unit[0] = Rational::one();
        let mut acc = Functional { moments: unit };
        for _ in 0..k {
            acc = acc.umbral_product(self).expect("equal lengths");
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn derivative_at_zero(d: usize) -> Functional {
        let mut m = vec![int(0); d + 1];
        m[1] = int(1);
        Functional::new(m)
    }

    #[test]
    fn apply_examples() {
        let f = Poly::from_ints(&[0, 3, 1]);
        assert_eq!(derivative_at_zero(3).apply(&f).unwrap(), int(3));
        let diff = Functional::new(vec![int(0), int(1), int(1), int(1)]);
        assert_eq!(diff.apply(&Poly::monomial(2)).unwrap(), int(1));
        assert_eq!(diff.apply(&Poly::zero()).unwrap(), int(0));
    }

    #[test]
    fn degree_overflow_is_an_error() {
        let f = Poly::monomial(4);
        assert_eq!(derivative_at_zero(3).apply(&f), Err(Error::DegreeOverflow { degree: 4, bound: 3 }));
    }

    #[test]
    fn product_examples() {
        let d = derivative_at_zero(4);
        let eps = Functional::evaluation(&int(0), 4);
        assert_eq!(d.umbral_product(&eps).unwrap(), d);
        let dd = d.umbral_product(&d).unwrap();
        assert_eq!(dd.apply(&Poly::monomial(2)).unwrap(), int(2));
        assert_eq!(d.power(2), dd);
        assert_eq!(d.power(0).apply(&Poly::from_ints(&[5, 0, 1])).unwrap(), int(5));
        assert!(d.umbral_product(&derivative_at_zero(3)).is_err());
    }

    #[test]
    fn delta_detection() {
        assert!(derivative_at_zero(2).is_delta());
        assert!(!Functional::evaluation(&int(1), 2).is_delta());
        assert!(!Functional::new(vec![int(0)]).is_delta());
    }
}
