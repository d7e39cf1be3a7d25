//! Gröbner bases, normal forms, quotient rings and eliminants.

pub mod basis;
pub mod order;
pub mod quotient;
mod terms;

pub use basis::{buchberger, buchberger_params, buchberger_q, clear_param_denominators, proportional, same_up_to_scalar, Budget, GbStats, GroebnerBasis, Reduced};
pub use order::{MonomialOrder, OrderKind};
pub use quotient::{eliminant, is_zero_dimensional, lex_eliminant, shape_check, shape_variable, standard_monomials, ShapeReport};
