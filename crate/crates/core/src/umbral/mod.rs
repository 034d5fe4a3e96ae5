//! Linear functionals on polynomials, the umbral product, and binomial-type
//! polynomial families with their delta functionals.
//!
//! A binomial-type family `a_n(x)` satisfies
//! `a_n(x+y) = Σ_k C(n,k) a_k(x) a_{n-k}(y)` and is paired with a delta
//! functional `A` (`A1 = 0`, `Ax ≠ 0`) such that `A^k a_n = k! δ_{n=k}`,
//! powers taken in the umbral product.

mod family;
mod functional;

pub use family::BinomialFamily;
pub use functional::Functional;
