//! Exact sparse multivariate polynomials and rational functions over a
//! fixed variable universe `t_1..t_k, z_1..z_n, h`.

mod monomial;
mod polynomial;
mod ratfun;
mod universe;

pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use ratfun::RationalFunction;
pub use universe::{Universe, Var};
