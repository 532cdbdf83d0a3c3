//! Multivariate polynomials over a coefficient field.

mod mainvar;
mod monomial;
mod polynomial;

pub use mainvar::{
    contract_power, even_odd_split, negate_main_var, permute_coefficients, substitute_power,
    MainVarView,
};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use polynomial::{poly_arith, ArithOp, PolyRing, Polynomial, Term, MAIN_VAR};
