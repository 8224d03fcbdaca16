//! Exact symbolic computation of the Cauchy-Kowalevski extension for
//! inframonogenic functions, i.e. null-solutions of the sandwich equation
//! `∂x f ∂x = 0` with values in the real Clifford algebra `R_{0,m}`.
//!
//! Everything is computed over the rationals with arbitrary precision, so
//! identities are checked by exact structural equality.
//!
//! The crate is layered bottom-up:
//!
//! * [`clifford`]: blades, multivectors and the geometric product.
//! * [`mvpoly`]: polynomials in commuting scalar variables `x0, x1..xm,
//!   u1..um` with multivector coefficients.
//! * [`operators`]: Cauchy-Riemann, Dirac and Laplace operators and the
//!   predicates built from them.
//! * [`ck_ext`]: the extension operator, its coefficient formulas and the
//!   constructions derived from it.
//! * [`expr_io`]: text grammar and JSON interchange.
//! * [`cli`]: the `ck` command-line front end.

pub mod ck_ext;
pub mod cli;
pub mod clifford;
pub mod error;
pub mod expr_io;
pub mod mvpoly;
pub mod operators;

mod rational;

pub use ck_ext::{
    ck_coefficient, ck_extend, inframonogenic_basis, inner_power_ck_left, inner_power_ck_right,
    monogenic_extend_left, monogenic_extend_right, polarize_reconstruct, recurrence_coefficients,
    restrict_pair, CoefficientSequence, InnerVector,
};
pub use clifford::{blade_mul, Blade, Dim, Multivector, Sign};
pub use error::{CkError, Result};
pub use expr_io::{
    from_json, from_json_str, parse_expr, print_expr, to_json, to_json_string, ParseError,
};
pub use mvpoly::{CliffordPolynomial, Monomial, Variable};
pub use num_rational::BigRational;
