//! Operation graph: deduplicated element nodes joined by labeled, directed
//! relation edges, merged across sentences.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extractor::{ElementLabel, SentenceExtraction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeColor {
    Red,
    Blue,
    Yellow,
    Grey,
}

impl NodeColor {
    pub fn for_label(label: ElementLabel) -> Self {
        match label {
            ElementLabel::Activity => NodeColor::Red,
            ElementLabel::Duration => NodeColor::Blue,
            ElementLabel::Resource => NodeColor::Yellow,
            ElementLabel::Other => NodeColor::Grey,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NodeColor::Red => "red",
            NodeColor::Blue => "blue",
            NodeColor::Yellow => "yellow",
            NodeColor::Grey => "grey",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Node {
    pub surface: String,
    pub label: ElementLabel,
    pub color: NodeColor,
    pub first_sentence_index: usize,
}

/// Edge between two node indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub phrase: String,
    pub sentence_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "GraphRecord", into = "GraphRecord")]
pub struct OperationGraph {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate node {0:?}")]
    DuplicateNode(String),
    #[error("node {surface:?} has color {color} but label {label}")]
    ColorMismatch {
        surface: String,
        label: ElementLabel,
        color: &'static str,
    },
    #[error("edge endpoint {0:?} is not a node")]
    UnknownEndpoint(String),
    #[error("duplicate edge {from:?} -> {to:?} ({phrase})")]
    DuplicateEdge {
        from: String,
        to: String,
        phrase: String,
    },
}

/// Edge as it appears in serialized documents: endpoints by surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: String,
    pub to: String,
    pub phrase: String,
    pub sentence_indices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphRecord {
    pub nodes: Vec<Node>,
    pub edges: Vec<EdgeRecord>,
}

impl From<OperationGraph> for GraphRecord {
    fn from(graph: OperationGraph) -> Self {
        let edges = graph.edge_records().collect();
        GraphRecord {
            nodes: graph.nodes,
            edges,
        }
    }
}

impl TryFrom<GraphRecord> for OperationGraph {
    type Error = GraphError;

    fn try_from(record: GraphRecord) -> Result<Self, GraphError> {
        OperationGraph::from_parts(record.nodes, record.edges)
    }
}

impl OperationGraph {
    /// Rebuilds a graph from serialized parts, checking every invariant.
    pub fn from_parts(nodes: Vec<Node>, edges: Vec<EdgeRecord>) -> Result<Self, GraphError> {
        let mut index = HashMap::new();
        for (i, node) in nodes.iter().enumerate() {
            if NodeColor::for_label(node.label) != node.color {
                return Err(GraphError::ColorMismatch {
                    surface: node.surface.clone(),
                    label: node.label,
                    color: node.color.as_str(),
                });
            }
            if index.insert(node.surface.as_str(), i).is_some() {
                return Err(GraphError::DuplicateNode(node.surface.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| GraphError::UnknownEndpoint(s.to_string()))
        };
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for e in edges {
            let (from, to) = (lookup(&e.from)?, lookup(&e.to)?);
            if !seen.insert((from, to, e.phrase.clone())) {
                return Err(GraphError::DuplicateEdge {
                    from: e.from,
                    to: e.to,
                    phrase: e.phrase,
                });
            }
            out.push(Edge {
                from,
                to,
                phrase: e.phrase,
                sentence_indices: e.sentence_indices,
            });
        }
        Ok(OperationGraph { nodes, edges: out })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, surface: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.surface == surface)
    }

    pub fn edge_records(&self) -> impl Iterator<Item = EdgeRecord> + '_ {
        self.edges.iter().map(|e| EdgeRecord {
            from: self.nodes[e.from].surface.clone(),
            to: self.nodes[e.to].surface.clone(),
            phrase: e.phrase.clone(),
            sentence_indices: e.sentence_indices.clone(),
        })
    }

    /// `(from, to, phrase)` surface triples in edge order.
    pub fn triples(&self) -> impl Iterator<Item = (&str, &str, &str)> + '_ {
        self.edges.iter().map(|e| {
            (
                self.nodes[e.from].surface.as_str(),
                self.nodes[e.to].surface.as_str(),
                e.phrase.as_str(),
            )
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Merge nodes whose surfaces differ only in letter case.
    pub normalize_case: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Severity {
    Warning,
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DiagnosticSubject {
    Node {
        surface: String,
    },
    Edge {
        from: String,
        to: String,
        phrase: String,
    },
    Sentence {
        index: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: String,
    pub message: String,
    pub subject: DiagnosticSubject,
}

pub mod codes {
    pub const PARSE_ERROR: &str = "parse-error";
    pub const EXTRACT_ERROR: &str = "extract-error";
    pub const LABEL_CONFLICT: &str = "label-conflict";
    pub const ISOLATED_NODE: &str = "isolated-node";
    pub const ACTIVITY_WITHOUT_DURATION: &str = "activity-without-duration";
    pub const ACTIVITY_WITHOUT_RESOURCE: &str = "activity-without-resource";
}

/// Incremental fold of sentence extractions into an [`OperationGraph`].
#[derive(Debug, Default)]
pub struct GraphBuilder {
    options: BuildOptions,
    graph: OperationGraph,
    nodes_by_key: HashMap<String, usize>,
    edges_by_key: HashMap<(usize, usize, String), usize>,
    diagnostics: Vec<Diagnostic>,
}

impl GraphBuilder {
    pub fn new(options: BuildOptions) -> Self {
        GraphBuilder {
            options,
            ..Default::default()
        }
    }

    fn key(&self, s: &str) -> String {
        if self.options.normalize_case {
            s.to_lowercase()
        } else {
            s.to_string()
        }
    }

    fn node_for(&mut self, surface: &str, label: ElementLabel, sentence: usize) -> usize {
        let key = self.key(surface);
        if let Some(&i) = self.nodes_by_key.get(&key) {
            let existing = &self.graph.nodes[i];
            if existing.label != label {
                self.diagnostics.push(Diagnostic {
                    severity: Severity::Warning,
                    code: codes::LABEL_CONFLICT.into(),
                    message: format!(
                        "{surface:?} labeled {label} in sentence {sentence}, keeping {} from sentence {}",
                        existing.label, existing.first_sentence_index
                    ),
                    subject: DiagnosticSubject::Node {
                        surface: existing.surface.clone(),
                    },
                });
            }
            return i;
        }
        let i = self.graph.nodes.len();
        self.graph.nodes.push(Node {
            surface: surface.to_string(),
            label,
            color: NodeColor::for_label(label),
            first_sentence_index: sentence,
        });
        self.nodes_by_key.insert(key, i);
        i
    }

    pub fn add(&mut self, extraction: &SentenceExtraction) {
        let sentence = extraction.sentence_index;
        let mut by_surface = HashMap::new();
        for el in &extraction.elements {
            let i = self.node_for(&el.surface, el.label, sentence);
            by_surface.insert(el.surface.as_str(), i);
        }
        for rel in &extraction.relations {
            let (Some(&from), Some(&to)) = (
                by_surface.get(rel.from.as_str()),
                by_surface.get(rel.to.as_str()),
            ) else {
                // endpoints are always among the sentence's elements
                continue;
            };
            let key = (from, to, self.key(&rel.phrase));
            match self.edges_by_key.get(&key) {
                Some(&e) => {
                    let indices = &mut self.graph.edges[e].sentence_indices;
                    if indices.last() != Some(&rel.sentence_index) {
                        indices.push(rel.sentence_index);
                    }
                }
                None => {
                    self.edges_by_key.insert(key, self.graph.edges.len());
                    self.graph.edges.push(Edge {
                        from,
                        to,
                        phrase: rel.phrase.clone(),
                        sentence_indices: vec![rel.sentence_index],
                    });
                }
            }
        }
    }

    pub fn finish(self) -> (OperationGraph, Vec<Diagnostic>) {
        (self.graph, self.diagnostics)
    }
}

pub fn build_graph(extractions: &[SentenceExtraction], options: BuildOptions) -> OperationGraph {
    let mut builder = GraphBuilder::new(options);
    for x in extractions {
        builder.add(x);
    }
    builder.finish().0
}

fn is_take(phrase: &str) -> bool {
    let verb = phrase
        .split_whitespace()
        .next()
        .unwrap_or("")
        .to_lowercase();
    matches!(
        verb.as_str(),
        "take" | "takes" | "took" | "taken" | "taking"
    )
}

/// Modeling hints about a graph: isolated nodes are warnings, activities
/// without a duration or resource are informational.
pub fn validate(graph: &OperationGraph) -> Vec<Diagnostic> {
    let n = graph.nodes.len();
    let mut degree = vec![0usize; n];
    let mut has_duration = vec![false; n];
    let mut has_resource = vec![false; n];
    for e in &graph.edges {
        degree[e.from] += 1;
        degree[e.to] += 1;
        if graph.nodes[e.to].label == ElementLabel::Duration && is_take(&e.phrase) {
            has_duration[e.from] = true;
        }
        if graph.nodes[e.from].label == ElementLabel::Resource {
            has_resource[e.to] = true;
        }
    }

    let mut out = Vec::new();
    for (i, node) in graph.nodes.iter().enumerate() {
        let subject = || DiagnosticSubject::Node {
            surface: node.surface.clone(),
        };
        if degree[i] == 0 {
            out.push(Diagnostic {
                severity: Severity::Warning,
                code: codes::ISOLATED_NODE.into(),
                message: format!("{:?} has no relations", node.surface),
                subject: subject(),
            });
        }
        if node.label != ElementLabel::Activity {
            continue;
        }
        if !has_duration[i] {
            out.push(Diagnostic {
                severity: Severity::Info,
                code: codes::ACTIVITY_WITHOUT_DURATION.into(),
                message: format!("activity {:?} has no duration", node.surface),
                subject: subject(),
            });
        }
        if !has_resource[i] {
            out.push(Diagnostic {
                severity: Severity::Info,
                code: codes::ACTIVITY_WITHOUT_RESOURCE.into(),
                message: format!("activity {:?} has no assigned resource", node.surface),
                subject: subject(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extractor::{Element, SentenceRelation};

    fn el(s: &str, label: ElementLabel) -> Element {
        Element {
            surface: s.into(),
            label,
        }
    }

    fn sentence(i: usize, els: &[(&str, ElementLabel)], phrases: &[&str]) -> SentenceExtraction {
        let elements: Vec<Element> = els.iter().map(|(s, l)| el(s, *l)).collect();
        let relations = elements
            .windows(2)
            .zip(phrases)
            .map(|(w, p)| SentenceRelation {
                from: w[0].surface.clone(),
                to: w[1].surface.clone(),
                phrase: p.to_string(),
                sentence_index: i,
            })
            .collect();
        SentenceExtraction {
            sentence_index: i,
            elements,
            relations,
        }
    }

    use ElementLabel::*;

    #[test]
    fn empty() {
        let g = build_graph(&[], BuildOptions::default());
        assert!(g.nodes().is_empty() && g.edges().is_empty());
        assert!(validate(&g).is_empty());
    }

    #[test]
    fn dedup_and_provenance() {
        let a = sentence(
            0,
            &[("loading activity", Activity), ("2.8 min", Duration)],
            &["takes"],
        );
        let b = sentence(
            1,
            &[("loading activity", Activity), ("2.8 min", Duration)],
            &["takes"],
        );
        let g = build_graph(&[a, b], BuildOptions::default());
        assert_eq!(g.nodes().len(), 2);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].sentence_indices, [0, 1]);
        assert_eq!(g.nodes()[1].color, NodeColor::Blue);
        assert_eq!(g.nodes()[1].first_sentence_index, 0);
    }

    #[test]
    fn case_sensitive_by_default() {
        let a = sentence(0, &[("One truck", Resource), ("capacity", Other)], &["has"]);
        let b = sentence(
            1,
            &[("x min", Duration), ("one truck", Resource)],
            &["load"],
        );
        let g = build_graph(&[a.clone(), b.clone()], BuildOptions::default());
        assert_eq!(g.nodes().len(), 4);
        let g = build_graph(
            &[a, b],
            BuildOptions {
                normalize_case: true,
            },
        );
        assert_eq!(g.nodes().len(), 3);
        assert_eq!(g.nodes()[0].surface, "One truck");
        assert_eq!(g.triples().nth(1), Some(("x min", "One truck", "load")));
    }

    #[test]
    fn label_conflict_is_a_warning() {
        let a = sentence(0, &[("crew", Resource)], &[]);
        let b = sentence(3, &[("crew", Other)], &[]);
        let mut builder = GraphBuilder::new(BuildOptions::default());
        builder.add(&a);
        builder.add(&b);
        let (g, diags) = builder.finish();
        assert_eq!(g.nodes()[0].label, Resource);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, codes::LABEL_CONFLICT);
        assert_eq!(diags[0].severity, Severity::Warning);
    }

    #[test]
    fn isolated_node_warning() {
        let g = build_graph(
            &[sentence(0, &[("Excavation", Other)], &[])],
            BuildOptions::default(),
        );
        let d = validate(&g);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].code, codes::ISOLATED_NODE);
        assert_eq!(d[0].severity, Severity::Warning);
    }

    #[test]
    fn activity_hints() {
        let g = build_graph(
            &[
                sentence(
                    0,
                    &[("One dozer", Resource), ("spreading activity", Activity)],
                    &["used in"],
                ),
                sentence(
                    1,
                    &[("spreading activity", Activity), ("8.5 min", Duration)],
                    &["takes"],
                ),
                sentence(
                    2,
                    &[
                        ("hauling activity", Activity),
                        ("dumping activity", Activity),
                    ],
                    &["precedes before"],
                ),
            ],
            BuildOptions::default(),
        );
        let d = validate(&g);
        let codes: Vec<(&str, &str)> = d
            .iter()
            .map(|d| match &d.subject {
                DiagnosticSubject::Node { surface } => (d.code.as_str(), surface.as_str()),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(
            codes,
            [
                (codes::ACTIVITY_WITHOUT_DURATION, "hauling activity"),
                (codes::ACTIVITY_WITHOUT_RESOURCE, "hauling activity"),
                (codes::ACTIVITY_WITHOUT_DURATION, "dumping activity"),
                (codes::ACTIVITY_WITHOUT_RESOURCE, "dumping activity"),
            ]
        );
    }

    #[test]
    fn from_parts_rejects_bad_records() {
        let node = |s: &str, label, color| Node {
            surface: s.into(),
            label,
            color,
            first_sentence_index: 0,
        };
        assert_eq!(
            OperationGraph::from_parts(vec![node("a", Activity, NodeColor::Blue)], vec![]),
            Err(GraphError::ColorMismatch {
                surface: "a".into(),
                label: Activity,
                color: "blue"
            })
        );
        let edge = EdgeRecord {
            from: "a".into(),
            to: "b".into(),
            phrase: "takes".into(),
            sentence_indices: vec![0],
        };
        assert_eq!(
            OperationGraph::from_parts(vec![node("a", Activity, NodeColor::Red)], vec![edge]),
            Err(GraphError::UnknownEndpoint("b".into()))
        );
    }
}
