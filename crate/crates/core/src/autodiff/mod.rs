//! Minimal reverse-mode automatic differentiation over dense `f64` arrays.
//!
//! The graph records exactly the primitives the transformer networks need
//! and replays them in reverse for gradients. Every backward rule is a
//! handful of explicit loops so it can be audited against the
//! finite-difference oracle in the test suite.

mod array;
mod checkpoint;
mod graph;
mod store;

pub use array::DenseArray;
pub use checkpoint::{load_checkpoint, save_checkpoint, CHECKPOINT_VERSION};
pub use graph::{Graph, NodeId};
pub use store::{AdamParams, ParameterStore};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AutodiffError {
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },
    #[error("non-finite value produced by {op}")]
    NonFinite { op: &'static str },
    #[error("invalid axis {axis} for rank-{rank} array")]
    InvalidAxis { axis: usize, rank: usize },
    #[error("cross-entropy target {target} out of range for vocabulary of {vocab}")]
    TargetOutOfRange { target: usize, vocab: usize },
    #[error("loss mask selects no positions")]
    EmptyLoss,
    #[error("backward root must be a scalar, got shape {0:?}")]
    NonScalarRoot(Vec<usize>),
    #[error("unknown parameter '{0}'")]
    UnknownParameter(String),
    #[error("parameter '{0}' has no gradient")]
    MissingGradient(String),
    #[error("embedding index {index} out of range for table with {rows} rows")]
    EmbedIndexOutOfRange { index: usize, rows: usize },
    #[error("checkpoint io: {0}")]
    Io(#[from] std::io::Error),
    #[error("checkpoint format: {0}")]
    BadCheckpoint(String),
}
