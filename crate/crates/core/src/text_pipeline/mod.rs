//! Sentence segmentation, tokenization, tagging and clause chunking for the
//! controlled operation-description language.
//!
//! Every sentence is expected to follow
//!
//! ```text
//! S  -> NP VG NP (TO VG NP?)? '.'
//! NP -> Determiner? (Cardinal | Noun | UnitNumber)* (Noun | UnitNumber)
//! VG -> Aux? Verb Preposition?
//! ```
//!
//! where participles inside a noun phrase ("the dumped dirt") are tagged as
//! nouns by the tagger.

mod parse;
mod segment;
mod tag;
mod tokenize;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::Lexicon;

pub use parse::parse_clause;
pub use segment::{segment_sentences, sentence_spans};
pub use tag::tag;
pub use tokenize::{is_punct, tokenize};

/// A whitespace-free slice of a sentence. Offsets count `char`s.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PosCategory {
    Determiner,
    Cardinal,
    Noun,
    Verb,
    Aux,
    Preposition,
    InfinitiveMarker,
    UnitNumber,
    Punct,
}

impl PosCategory {
    pub fn starts_noun_phrase(self) -> bool {
        matches!(
            self,
            PosCategory::Determiner
                | PosCategory::Cardinal
                | PosCategory::Noun
                | PosCategory::UnitNumber
        )
    }

    pub fn is_nominal(self) -> bool {
        matches!(
            self,
            PosCategory::Cardinal | PosCategory::Noun | PosCategory::UnitNumber
        )
    }

    pub fn is_np_head(self) -> bool {
        matches!(self, PosCategory::Noun | PosCategory::UnitNumber)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TaggedToken {
    pub token: Token,
    pub pos: PosCategory,
}

impl TaggedToken {
    pub fn surface(&self) -> &str {
        &self.token.surface
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NpRole {
    Subject,
    /// 1-based object position.
    Object(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NpChunk {
    pub tokens: Vec<TaggedToken>,
    pub role: NpRole,
}

impl NpChunk {
    pub fn start(&self) -> usize {
        self.tokens.first().map_or(0, |t| t.token.start)
    }

    pub fn end(&self) -> usize {
        self.tokens.last().map_or(0, |t| t.token.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerbGroup {
    pub aux: Option<Token>,
    /// The "to" of an infinitival verb group.
    pub infinitive: Option<Token>,
    pub main: Token,
    pub prep: Option<Token>,
}

impl VerbGroup {
    pub fn start(&self) -> usize {
        [&self.infinitive, &self.aux]
            .into_iter()
            .flatten()
            .map(|t| t.start)
            .min()
            .unwrap_or(self.main.start)
    }

    pub fn end(&self) -> usize {
        self.prep.as_ref().unwrap_or(&self.main).end
    }
}

/// Shallow parse of one sentence: `nps[0]` is the subject and `vgs[k]`
/// introduces `nps[k + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseParse {
    pub sentence_index: usize,
    pub nps: Vec<NpChunk>,
    pub vgs: Vec<VerbGroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParseFailure {
    EmptySentence,
    MissingSubject,
    NpWithoutHead,
    MissingVerb,
    MissingObject,
    UnexpectedToken(String),
}

impl std::fmt::Display for ParseFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseFailure::EmptySentence => f.write_str("sentence has no words"),
            ParseFailure::MissingSubject => {
                f.write_str("sentence does not start with a noun phrase")
            }
            ParseFailure::NpWithoutHead => f.write_str("noun phrase has no noun head"),
            ParseFailure::MissingVerb => f.write_str("no lexicon verb in verb-group position"),
            ParseFailure::MissingObject => f.write_str("verb group is not followed by an object"),
            ParseFailure::UnexpectedToken(s) => write!(f, "unexpected token {s:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("sentence {sentence_index}: {reason} (chars {}..{})", char_span.0, char_span.1)]
pub struct ParseError {
    pub sentence_index: usize,
    pub reason: ParseFailure,
    pub char_span: (usize, usize),
}

/// Tokenize, tag and chunk one sentence.
pub fn analyze_sentence(
    sentence: &str,
    sentence_index: usize,
    lexicon: &Lexicon,
) -> Result<ClauseParse, ParseError> {
    let tokens = tokenize(sentence);
    let tagged = tag(&tokens, lexicon);
    parse_clause(&tagged, sentence_index)
}
