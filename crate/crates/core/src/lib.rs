//! Exact grevlex Gröbner bases for generic ideals.
//!
//! The crate computes reduced Gröbner bases with Buchberger's algorithm over
//! the rationals or a prime field, builds the explicit basis and initial
//! ideal of two generic binary forms, checks the leading-term syzygies behind
//! that basis, and classifies monomial ideals as (weakly) reverse
//! lexicographic. The `harness` module drives seeded campaigns that test the
//! weakly-revlex property of generic initial ideals in more variables.
//!
//! ```
//! use revlex_core::{buchberger, Domain, Ideal};
//!
//! let ideal = Ideal::parse(
//!     "ring 2 vars over rational\nx^2 + 3*x*y + 5*y^2\n7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3\n",
//! )
//! .unwrap();
//! let gb = buchberger(&ideal).unwrap();
//! let j = gb.initial_ideal();
//! assert_eq!(j.staircase().unwrap().corners, [(2, 0), (1, 2), (0, 4)]);
//! assert!(j.is_weakly_revlex().holds);
//! # let _ = Domain::Rationals;
//! ```

pub mod closedform;
pub mod coeff;
pub mod error;
pub mod genericgen;
pub mod groebner;
pub mod harness;
pub mod monideal;
pub mod poly;
pub mod render;

pub use closedform::{
    closed_form_basis, closed_form_initial_ideal, cross_validate, expand_syzygy, syzygy_pair,
    verify_syzygy, ClosedFormBasis, ClosedFormSpec, Syzygy,
};
pub use coeff::{Domain, Scalar};
pub use error::{Error, Result};
pub use groebner::{buchberger, initial_ideal, normal_form, s_polynomial, GroebnerBasis, Ideal};
pub use monideal::{MonomialIdeal, Staircase};
pub use poly::{grevlex_cmp, Monomial, Polynomial, Term};
