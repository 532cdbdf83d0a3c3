//! Ring presentations, ideal arithmetic in quotients, fractional ideals and local generator counts.

mod arith;
mod fractional;
mod local;
mod spec;

pub use arith::{ideal_power, ideal_product};
pub use fractional::{
    fractional_inverse, fractional_inverse_with, is_invertible, Certificate, CofactorTerm,
    FractionalIdeal, InvertibilityReport,
};
pub use local::{min_generators_greedy, min_generators_local, LocalityWitness};
pub use spec::{make_quotient, RingSpec};
