//! Monomials under grevlex, sparse polynomials, and multivariate division.

mod monomial;
mod polynomial;
pub mod text;

pub use monomial::{grevlex_cmp, monomials_of_degree, variable_names, Monomial};
pub use polynomial::{Division, PolyOp, Polynomial, Term};
pub use text::{parse_ideal_text, parse_polynomial, IdealText};
