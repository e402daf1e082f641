//! End-to-end compilation of a text into an [`ExtractionDocument`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extractor::{extract_sentence_with, ElementLabel, ExtractError, SentenceExtraction};
use crate::graph::{
    codes, validate, BuildOptions, Diagnostic, DiagnosticSubject, EdgeRecord, GraphBuilder,
    GraphError, Node, NodeColor, OperationGraph, Severity,
};
use crate::lexicon::Lexicon;
use crate::text_pipeline::{analyze_sentence, segment_sentences, ParseError};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceRecord {
    pub index: usize,
    pub text: String,
    pub parse_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementRecord {
    pub surface: String,
    pub label: ElementLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationRecord {
    pub from: String,
    pub to: String,
    pub phrase: String,
    pub sentence_index: usize,
}

/// Everything produced for one input text. `elements` and `relations` list
/// the graph's nodes and edges in graph order; each relation carries the
/// first sentence it was found in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionDocument {
    pub version: String,
    pub sentences: Vec<SentenceRecord>,
    pub elements: Vec<ElementRecord>,
    pub relations: Vec<RelationRecord>,
    pub graph: OperationGraph,
    pub diagnostics: Vec<Diagnostic>,
}

impl ExtractionDocument {
    pub fn from_graph(
        sentences: Vec<SentenceRecord>,
        graph: OperationGraph,
        diagnostics: Vec<Diagnostic>,
    ) -> Self {
        let elements = graph
            .nodes()
            .iter()
            .map(|n| ElementRecord {
                surface: n.surface.clone(),
                label: n.label,
            })
            .collect();
        let relations = graph
            .edge_records()
            .map(|e| RelationRecord {
                sentence_index: e.sentence_indices.first().copied().unwrap_or(0),
                from: e.from,
                to: e.to,
                phrase: e.phrase,
            })
            .collect();
        ExtractionDocument {
            version: SCHEMA_VERSION.to_string(),
            sentences,
            elements,
            relations,
            graph,
            diagnostics,
        }
    }

    /// Rebuilds a graph from the flat `elements` and `relations` tables
    /// alone. Provenance beyond the first sentence is not recoverable there.
    pub fn rebuild_graph(&self) -> Result<OperationGraph, GraphError> {
        let nodes = self
            .elements
            .iter()
            .map(|e| Node {
                surface: e.surface.clone(),
                label: e.label,
                color: NodeColor::for_label(e.label),
                first_sentence_index: self
                    .relations
                    .iter()
                    .filter(|r| r.from == e.surface || r.to == e.surface)
                    .map(|r| r.sentence_index)
                    .min()
                    .unwrap_or(0),
            })
            .collect();
        let edges = self
            .relations
            .iter()
            .map(|r| EdgeRecord {
                from: r.from.clone(),
                to: r.to.clone(),
                phrase: r.phrase.clone(),
                sentence_indices: vec![r.sentence_index],
            })
            .collect();
        OperationGraph::from_parts(nodes, edges)
    }

    pub fn parse_errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics
            .iter()
            .filter(|d| d.code == codes::PARSE_ERROR)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompileOptions {
    /// Abort on the first sentence that fails to parse or extract.
    pub strict: bool,
    pub normalize_case: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("sentence {sentence_index}: {source}")]
    Extract {
        sentence_index: usize,
        #[source]
        source: ExtractError,
    },
}

/// Per-sentence result of the text pipeline and extractor.
pub fn extract_text(
    text: &str,
    lexicon: &Lexicon,
) -> Vec<(String, Result<SentenceExtraction, CompileError>)> {
    segment_sentences(text)
        .into_iter()
        .enumerate()
        .map(|(i, sentence)| {
            let result = analyze_sentence(sentence, i, lexicon)
                .map_err(CompileError::from)
                .and_then(|parse| {
                    extract_sentence_with(&parse, lexicon).map_err(|source| CompileError::Extract {
                        sentence_index: i,
                        source,
                    })
                });
            (sentence.to_string(), result)
        })
        .collect()
}

/// Runs segmentation, parsing, extraction, graph building and validation.
///
/// In lenient mode failing sentences are skipped and reported as warning
/// diagnostics; in strict mode the first failure is returned.
pub fn compile(
    text: &str,
    lexicon: &Lexicon,
    options: CompileOptions,
) -> Result<ExtractionDocument, CompileError> {
    let mut builder = GraphBuilder::new(BuildOptions {
        normalize_case: options.normalize_case,
    });
    let mut sentences = Vec::new();
    let mut diagnostics = Vec::new();

    for (index, (text, result)) in extract_text(text, lexicon).into_iter().enumerate() {
        let parse_ok = result.is_ok();
        match result {
            Ok(extraction) => builder.add(&extraction),
            Err(err) if options.strict => return Err(err),
            Err(err) => diagnostics.push(Diagnostic {
                severity: Severity::Warning,
                code: match err {
                    CompileError::Parse(_) => codes::PARSE_ERROR,
                    CompileError::Extract { .. } => codes::EXTRACT_ERROR,
                }
                .to_string(),
                message: err.to_string(),
                subject: DiagnosticSubject::Sentence { index },
            }),
        }
        sentences.push(SentenceRecord {
            index,
            text,
            parse_ok,
        });
    }

    let (graph, build_diagnostics) = builder.finish();
    diagnostics.extend(build_diagnostics);
    diagnostics.extend(validate(&graph));
    Ok(ExtractionDocument::from_graph(
        sentences,
        graph,
        diagnostics,
    ))
}
