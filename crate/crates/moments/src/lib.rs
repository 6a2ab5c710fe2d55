//! Symbolic operator words and moment-matrix machinery.
//!
//! Words are products of measurement-effect symbols; a layout records how the
//! entries of a moment matrix share variables after reduction. Numeric
//! realizations evaluate a layout on an explicit finite-dimensional strategy,
//! either as scalar moments or as operator-valued blocks, and randomized
//! sampling recovers the span of moment matrices realizable in a fixed
//! dimension.

mod error;
pub mod haar;
mod layout;
mod realize;
mod span;
mod strategy;
mod symbol;
mod words;

pub use error::MomentsError;
pub use layout::{build_layout, EntryClass, MomentLayout, MomentPart};
pub use realize::{realize_block_moment, realize_moment_matrix, realize_moment_values};
pub use span::{sample_dim_span, DimSpan};
pub use strategy::Strategy;
pub use symbol::{reduce_word, EffectSymbol, OperatorWord, Reduced, ReductionRules};
pub use words::generate_words;
