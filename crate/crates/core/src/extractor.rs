//! Element and relation extraction over clause parses.
//!
//! Elements are the subject and object chunks of a sentence (modifiers kept,
//! leading determiner dropped). Each element is labeled by keyword:
//! "activity" makes an activity, "min" a duration, a cardinal number a
//! resource, anything else is "other". Relations chain the elements in
//! textual order, labeled with the verb that introduces each object plus
//! its trailing preposition.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::{is_numeral, Lexicon};
use crate::text_pipeline::{ClauseParse, NpChunk, PosCategory, VerbGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ElementLabel {
    Activity,
    Duration,
    Resource,
    Other,
}

impl ElementLabel {
    pub const ALL: [ElementLabel; 4] = [
        ElementLabel::Activity,
        ElementLabel::Duration,
        ElementLabel::Resource,
        ElementLabel::Other,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ElementLabel::Activity => "Activity",
            ElementLabel::Duration => "Duration",
            ElementLabel::Resource => "Resource",
            ElementLabel::Other => "Other",
        }
    }
}

impl std::fmt::Display for ElementLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Element {
    pub surface: String,
    pub label: ElementLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SentenceRelation {
    pub from: String,
    pub to: String,
    pub phrase: String,
    pub sentence_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceExtraction {
    pub sentence_index: usize,
    pub elements: Vec<Element>,
    pub relations: Vec<SentenceRelation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("noun phrase is empty once its determiner is removed")]
    EmptyChunk,
    #[error("cannot classify an empty surface")]
    EmptySurface,
    #[error("sentence {sentence_index}: {surface:?} would relate to itself")]
    SelfRelation {
        sentence_index: usize,
        surface: String,
    },
}

/// Surface text of a chunk: leading determiner dropped, remaining tokens
/// joined by single spaces, case preserved.
pub fn element_surface(chunk: &NpChunk) -> Result<String, ExtractError> {
    let tokens = match chunk.tokens.split_first() {
        Some((first, rest)) if first.pos == PosCategory::Determiner => rest,
        _ => &chunk.tokens[..],
    };
    if tokens.is_empty() {
        return Err(ExtractError::EmptyChunk);
    }
    Ok(tokens
        .iter()
        .map(|t| t.surface())
        .collect::<Vec<_>>()
        .join(" "))
}

/// Classifies with the builtin cardinal words.
pub fn classify(surface: &str) -> Result<ElementLabel, ExtractError> {
    classify_with(surface, Lexicon::builtin())
}

/// Word-level keyword classification with precedence
/// Activity > Duration > Resource > Other.
pub fn classify_with(surface: &str, lexicon: &Lexicon) -> Result<ElementLabel, ExtractError> {
    let words: Vec<String> = surface.split_whitespace().map(str::to_lowercase).collect();
    if words.is_empty() {
        return Err(ExtractError::EmptySurface);
    }
    let has = |pred: &dyn Fn(&str) -> bool| words.iter().any(|w| pred(w));
    let label = if has(&|w| w == "activity" || w == "activities") {
        ElementLabel::Activity
    } else if has(&|w| w == "min") {
        ElementLabel::Duration
    } else if has(&|w| lexicon.is_cardinal_word(w) || is_numeral(w)) {
        ElementLabel::Resource
    } else {
        ElementLabel::Other
    };
    Ok(label)
}

/// Main verb plus trailing preposition; auxiliary and "to" are dropped.
pub fn relation_phrase(vg: &VerbGroup) -> String {
    match &vg.prep {
        Some(prep) => format!("{} {}", vg.main.surface, prep.surface),
        None => vg.main.surface.clone(),
    }
}

pub fn extract_sentence(parse: &ClauseParse) -> Result<SentenceExtraction, ExtractError> {
    extract_sentence_with(parse, Lexicon::builtin())
}

/// Applies the element, label and relation rules to one parse. Object `k`
/// is linked from the element before it (the subject for the first object)
/// by `vgs[k - 1]`.
pub fn extract_sentence_with(
    parse: &ClauseParse,
    lexicon: &Lexicon,
) -> Result<SentenceExtraction, ExtractError> {
    let elements = parse
        .nps
        .iter()
        .map(|np| {
            let surface = element_surface(np)?;
            let label = classify_with(&surface, lexicon)?;
            Ok(Element { surface, label })
        })
        .collect::<Result<Vec<_>, ExtractError>>()?;

    let relations = elements
        .windows(2)
        .zip(&parse.vgs)
        .map(|(pair, vg)| {
            if pair[0].surface == pair[1].surface {
                return Err(ExtractError::SelfRelation {
                    sentence_index: parse.sentence_index,
                    surface: pair[0].surface.clone(),
                });
            }
            Ok(SentenceRelation {
                from: pair[0].surface.clone(),
                to: pair[1].surface.clone(),
                phrase: relation_phrase(vg),
                sentence_index: parse.sentence_index,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(SentenceExtraction {
        sentence_index: parse.sentence_index,
        elements,
        relations,
    })
}
