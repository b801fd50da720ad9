//! Collaborative question generation and question answering at desk scale.
//!
//! A decoder language model generates answer-conditioned questions, an
//! encoder span-QA model judges whether they are answerable, and a
//! partition-with-replay training loop feeds the judgement back into the
//! generator. Everything runs on 64-bit floats on a single CPU core so
//! that gradients, partitions and metrics can be checked against
//! independent oracles.

pub mod autodiff;
pub mod data;
pub mod eval;
pub mod metrics;
pub mod nets;
pub mod rng;
pub mod sampler;
pub mod tokenizer;
pub mod trainer;

pub use autodiff::{AdamParams, AutodiffError, DenseArray, Graph, NodeId, ParameterStore};
pub use nets::{DecoderLm, NetConfig, NetError, SpanPrediction, SpanQa};
pub use tokenizer::{TokenSequence, Vocab};
