//! Reduced Gröbner bases and the ideal-theoretic decisions built on them.

mod basis;
mod cache;
mod ideal;
mod lift;

pub use basis::{
    buchberger, buchberger_with_limits, normal_form, GbLimits, GroebnerBasis, ENV_MAX_GENERATORS,
    ENV_MAX_TERMS,
};
pub use cache::{cached_groebner, GbCache};
pub use ideal::{Colength, IdealHandle};
pub use lift::lift;
