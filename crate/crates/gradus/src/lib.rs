//! Graded-corpus curation and curriculum scheduling for small-LM pretraining.
//!
//! The crate covers the full data recipe for training a small language model
//! on a tightly budgeted corpus:
//!
//! - [`corpus`] — ingestion of JSONL / plain-line corpora and the shared
//!   text-measurement primitives ([`corpus::word_tokenize`],
//!   [`corpus::count_punctuation`]).
//! - [`filters`] — exact-duplicate removal and quality filtering with a full
//!   rejection audit trail.
//! - [`scoring`] — four surface complexity features combined into a weighted
//!   per-sample score.
//! - [`curriculum`] — ascending-complexity ordering, per-epoch exposure
//!   schedules with a decaying learning-rate series, and deterministic shard
//!   emission.
//! - [`mixing`] — seeded replacement of a word budget with samples from a
//!   secondary source while conserving total corpus size.
//! - [`tokenizer`] — byte-level BPE training to an exact vocabulary size,
//!   encoding, decoding, and corpus-level tokenizer metrics.
//! - [`ngram`] — an interpolated absolute-discount n-gram model over token
//!   ids, for perplexity and minimal-pair evaluation at desk scale.
//! - [`pipeline`] — the end-to-end run: one JSON config, content-hash stage
//!   caching, and byte-identical re-runs.
//!
//! Every stage is deterministic: a single seed drives all randomness, and
//! identical configs over identical inputs produce byte-identical outputs.
//!
//! Runnable walkthroughs for each capability live in `examples/`; the
//! `gradus` binary exposes the same stages as subcommands.

pub mod corpus;
pub mod curriculum;
pub mod error;
pub mod filters;
pub mod mixing;
pub mod ngram;
pub mod pipeline;
pub mod scoring;
pub mod tokenizer;

pub use corpus::{CorpusStats, Ingestor, InputFormat, Sample, SourceTag};
pub use error::{Error, Result};
pub use filters::{FilterConfig, FilterOutcome, RejectReason, RejectionRecord};
pub use scoring::{ComplexityScore, Feature, FeatureVector, Normalizer, ScoringConfig};
