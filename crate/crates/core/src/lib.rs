//! Compiles controlled-language descriptions of construction operations
//! into directed graphs of activities, durations, resources and their
//! relations.
//!
//! ```
//! use opgraph::{compile, CompileOptions, Lexicon};
//!
//! let doc = compile(
//!     "The loading activity is followed by the hauling activity.",
//!     Lexicon::builtin(),
//!     CompileOptions::default(),
//! )
//! .unwrap();
//! let triples: Vec<_> = doc.graph.triples().collect();
//! assert_eq!(triples, [("loading activity", "hauling activity", "followed by")]);
//! ```

pub mod cli;
pub mod document;
pub mod export;
pub mod extractor;
pub mod graph;
pub mod lexicon;
pub mod text_pipeline;

pub use document::{compile, CompileError, CompileOptions, ExtractionDocument, SCHEMA_VERSION};
pub use extractor::{classify, Element, ElementLabel, SentenceExtraction, SentenceRelation};
pub use graph::{build_graph, validate, BuildOptions, Diagnostic, NodeColor, OperationGraph};
pub use lexicon::Lexicon;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
