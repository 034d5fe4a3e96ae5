use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use super::Functional;
use crate::{arith, Error, Poly, Rational, Result};

/// Polynomial sequences of binomial type used as expansion bases, each with
/// its associated delta functional.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BinomialFamily {
    /// `x^n`, delta functional `q ↦ q'(0)`.
    Monomial,
    /// `(x/a)_n` with `a ≠ 0`, delta functional `q ↦ q(a) - q(0)`.
    FallingFactorial(Rational),
    /// `x^{(n)} = x(x+1)…(x+n-1)`, delta functional `q ↦ q(0) - q(-1)`.
    RisingFactorial,
    /// `x(x - an)^{n-1}`, delta functional `q ↦ q'(a)`.
    Abel(Rational),
    /// `b_n(x) = Σ_{σ ⊢ [n]} (x)_{ℓ(σ)} Π_T (-1)^{|T|-1} (|T|-1)!`, with
    /// exponential generating function `(1 + log(1+t))^x`. Its functional
    /// sends every `(x)_n`, `n > 0`, to 1 and `1` to 0.
    Log,
}

impl BinomialFamily {
    pub fn falling(a: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(BinomialFamily::FallingFactorial(a))
    }

    /// `a_n(x)`.
    pub fn poly(&self, n: usize) -> Poly {
        match self {
            BinomialFamily::Monomial => Poly::monomial(n),
            BinomialFamily::FallingFactorial(a) => {
                let inv = a.recip();
                (0..n).fold(Poly::one(), |acc, i| {
                    &acc * &Poly::from_coeffs(vec![-arith::int(i as i64), inv.clone()])
                })
            }
            BinomialFamily::RisingFactorial => {
                (0..n).fold(Poly::one(), |acc, i| &acc * &Poly::shifted_x(arith::int(i as i64)))
            }
            BinomialFamily::Abel(a) => {
                if n == 0 {
                    return Poly::one();
                }
                let shift = -(a * arith::int(n as i64));
                &Poly::x() * &Poly::shifted_x(shift).pow(n - 1)
            }
            BinomialFamily::Log => {
                let falling = BinomialFamily::FallingFactorial(Rational::one());
                log_family_weights(n)
                    .iter()
                    .enumerate()
                    .fold(Poly::zero(), |acc, (k, c)| &acc + &falling.poly(k).scale(c))
            }
        }
    }

    /// `a_0(x), …, a_n(x)`.
    pub fn polys(&self, n: usize) -> Vec<Poly> {
        (0..=n).map(|k| self.poly(k)).collect()
    }

    /// The associated delta functional, defined up to degree `degree`.
    pub fn delta(&self, degree: usize) -> Functional {
        let moments = match self {
            BinomialFamily::Monomial => {
                (0..=degree).map(|n| if n == 1 { Rational::one() } else { Rational::zero() }).collect()
            }
            BinomialFamily::Abel(a) => (0..=degree)
                .map(|n| match n {
                    0 => Rational::zero(),
                    _ => arith::int(n as i64) * arith::pow(a, n - 1),
                })
                .collect(),
            BinomialFamily::FallingFactorial(a) => {
                (0..=degree).map(|n| arith::pow(a, n) - arith::pow(&Rational::zero(), n)).collect()
            }
            BinomialFamily::RisingFactorial => {
                (0..=degree).map(|n| arith::pow(&Rational::zero(), n) - arith::sign(n)).collect()
            }
            BinomialFamily::Log => {
                // x^n in the falling basis, then B(x)_k = [k > 0]
                let falling = BinomialFamily::FallingFactorial(Rational::one());
                (0..=degree).map(|n| falling.to_basis(&Poly::monomial(n)).into_iter().skip(1).sum()).collect()
            }
        };
        Functional::new(moments)
    }

    /// Coefficients `c_k` with `f = Σ c_k a_k(x)`, by back substitution from
    /// the top degree. Empty for the zero polynomial.
    pub fn to_basis(&self, f: &Poly) -> Vec<Rational> {
        let Some(d) = f.degree() else {
            return Vec::new();
        };
        let basis = self.polys(d);
        let mut rest = f.clone();
        let mut coeffs = vec![Rational::zero(); d + 1];
        for k in (0..=d).rev() {
            let lead = basis[k].coeff(k);
            let c = rest.coeff(k) / lead;
            if !c.is_zero() {
                rest = &rest - &basis[k].scale(&c);
                coeffs[k] = c;
            }
        }
        debug_assert!(rest.is_zero());
        coeffs
    }

    /// `Σ c_k a_k(x)`.
    pub fn from_basis(&self, coeffs: &[Rational]) -> Poly {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Poly::zero(), |acc, (k, c)| &acc + &self.poly(k).scale(c))
    }

    /// Rebuilds `f` from the values `A^k f` for `k = 0..=deg f`, using
    /// `A^k a_n = k! δ_{n=k}`.
    pub fn from_power_values(&self, values: &[Rational]) -> Poly {
        let coeffs: Vec<Rational> = values.iter().enumerate().map(|(k, v)| v / arith::factorial(k)).collect();
        self.from_basis(&coeffs)
    }
}

/// `c(n,k) = Σ_{σ ⊢ [n], ℓ(σ)=k} Π_T (-1)^{|T|-1}(|T|-1)!`, computed by
/// splitting off the block that holds the first element.
fn log_family_weights(n: usize) -> Vec<Rational> {
    // table[m][k] for m ≤ n
    let mut table: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for m in 1..=n {
        let mut row = vec![Rational::zero(); m + 1];
        for j in 1..=m {
            let w = arith::sign(j - 1) * arith::factorial(j - 1) * arith::binomial(m - 1, j - 1);
            for (k, c) in table[m - j].iter().enumerate() {
                if !c.is_zero() {
                    row[k + 1] += &w * c;
                }
            }
        }
        table.push(row);
    }
    table.swap_remove(n)
}

/// Spec strings: `monomial`, `falling:a`, `rising`, `abel:a`, `logfamily`,
/// with `a` an exact rational such as `-1` or `3/2`.
impl fmt::Display for BinomialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinomialFamily::Monomial => f.write_str("monomial"),
            BinomialFamily::FallingFactorial(a) => write!(f, "falling:{a}"),
            BinomialFamily::RisingFactorial => f.write_str("rising"),
            BinomialFamily::Abel(a) => write!(f, "abel:{a}"),
            BinomialFamily::Log => f.write_str("logfamily"),
        }
    }
}

impl FromStr for BinomialFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseFamily(s.to_string());
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let scale = || -> Result<Rational> { arg.ok_or_else(bad)?.parse().map_err(|_| bad()) };
        match (name, arg.is_some()) {
            ("monomial", false) => Ok(BinomialFamily::Monomial),
            ("rising", false) => Ok(BinomialFamily::RisingFactorial),
            ("logfamily", false) => Ok(BinomialFamily::Log),
            ("falling", true) => BinomialFamily::falling(scale()?),
            ("abel", true) => Ok(BinomialFamily::Abel(scale()?)),
            _ => Err(bad()),
        }
    }
}
