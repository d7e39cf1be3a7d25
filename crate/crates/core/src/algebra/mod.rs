//! Exact arithmetic: scalars, sparse polynomials, rational functions, matrices.

pub mod coeff;
pub mod gcd;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod symmetric;
pub mod unipoly;

pub use coeff::{parse_rat, rat, rat_to_f64, Coeff, Domain, ExactDiv, Field, Int, Rat};
pub use matrix::{colex_subsets, Matrix, PolyMatrix};
pub use monomial::Monomial;
pub use parse::{parse_int_poly, parse_poly, parse_qpoly, VarTable};
pub use poly::{proportional_q, Poly, QPoly, ZPoly};
pub use ratfunc::{ParamScalar, RatFunc};
pub use symmetric::{elementary_symmetric, elementary_symmetric_poly, symmetrize_primitive, Symmetrized};
pub use unipoly::UniPoly;
