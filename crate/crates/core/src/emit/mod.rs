//! Tautological expressions on `M_{g,n}^ct`, Abel-Jacobi pullbacks of theta
//! classes, stored constants, and script generation for an external
//! tautological-ring calculator.

pub mod constants;
pub mod script;
pub mod taut;
pub mod theta;

pub use constants::{
    constants, eisenstein_identity_check, jg_table, nl_projection_coeff, sigma, taut_product, ConstValue,
};
pub use script::{delta_emit, emit_comparison, emit_script, input_hash, Dialect};
pub use taut::{Atom, Decoration, StableGraph, TautExpr};
pub use theta::{eta_pullback, theta_pullback, theta_scaled_check};
