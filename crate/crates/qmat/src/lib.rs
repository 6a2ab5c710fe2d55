//! Dense complex linear algebra for quantum operators.
//!
//! Everything here is desk-scale and dense: Kronecker products, partial
//! traces, trace inner products, PSD checks via the real symmetric
//! embedding, and the standard qubit constants. Values are immutable after
//! construction; all operations are pure functions.

pub mod consts;
mod embed;
mod error;
mod matrix;
mod operator;

pub use embed::{real_embed, real_embed_matrix, sym_min_eigenvalue};
pub use error::QmatError;
pub use matrix::{kron, ComplexMatrix, C64};
pub use operator::{
    max_entangled, partial_trace, partial_trace_matrix, trace_inner, HermitianOperator,
    SubsystemShape,
};
