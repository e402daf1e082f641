//! Closed-class word lists and the verb lexicon used by the tagger.
//!
//! A lexicon file is plain UTF-8 text made of sections:
//!
//! ```text
//! # comment
//! [verbs]
//! load
//! take/took/taken
//! [prepositions]
//! in
//! ```
//!
//! Recognised section headers are `[verbs]`, `[prepositions]`,
//! `[determiners]`, `[aux]` and `[cardinals]`. Entries are matched
//! case-insensitively. Verb entries are lemmas; regular inflections are
//! derived, irregular ones are listed after the lemma separated by `/`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::sync::LazyLock;

use thiserror::Error;

const DEFAULT_LEXICON: &str = include_str!("../data/default.lex");

static DEFAULT: LazyLock<Lexicon> =
    LazyLock::new(|| Lexicon::parse(DEFAULT_LEXICON).expect("embedded lexicon is well formed"));

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("cannot read lexicon {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    Verbs,
    Prepositions,
    Determiners,
    Aux,
    Cardinals,
}

impl Section {
    fn from_header(name: &str) -> Option<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "verbs" => Some(Section::Verbs),
            "prepositions" => Some(Section::Prepositions),
            "determiners" => Some(Section::Determiners),
            "aux" => Some(Section::Aux),
            "cardinals" => Some(Section::Cardinals),
            _ => None,
        }
    }

    fn header(self) -> &'static str {
        match self {
            Section::Verbs => "verbs",
            Section::Prepositions => "prepositions",
            Section::Determiners => "determiners",
            Section::Aux => "aux",
            Section::Cardinals => "cardinals",
        }
    }
}

/// How a surface form relates to a verb lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerbForm {
    /// The bare lemma ("load").
    Lemma,
    /// A finite or past-participle form ("loads", "loaded", "has").
    Finite,
    /// A present-participle / gerund form ("loading").
    Progressive,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    verb_forms: BTreeMap<String, VerbForm>,
    prepositions: BTreeSet<String>,
    determiners: BTreeSet<String>,
    aux: BTreeSet<String>,
    cardinals: BTreeSet<String>,
}

impl Lexicon {
    /// The embedded lexicon covering the earthmoving vocabulary.
    pub fn builtin() -> &'static Lexicon {
        &DEFAULT
    }

    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut lexicon = Lexicon::default();
        let mut section = None;
        for (n, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest.strip_suffix(']').ok_or_else(|| LexiconError::Syntax {
                    line: n + 1,
                    message: format!("unterminated section header {line:?}"),
                })?;
                section = Some(
                    Section::from_header(name).ok_or_else(|| LexiconError::Syntax {
                        line: n + 1,
                        message: format!("unknown section [{name}]"),
                    })?,
                );
                continue;
            }
            let Some(section) = section else {
                return Err(LexiconError::Syntax {
                    line: n + 1,
                    message: format!("entry {line:?} appears before any section header"),
                });
            };
            if line.chars().any(char::is_whitespace) {
                return Err(LexiconError::Syntax {
                    line: n + 1,
                    message: format!("entry {line:?} contains whitespace"),
                });
            }
            lexicon.insert(section, line);
        }
        Ok(lexicon)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| LexiconError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Builtin lexicon extended with the entries of `extra`.
    pub fn builtin_with(extra: &Lexicon) -> Self {
        let mut lexicon = Self::builtin().clone();
        lexicon.merge(extra);
        lexicon
    }

    pub fn merge(&mut self, other: &Lexicon) {
        for (form, kind) in &other.verb_forms {
            self.add_verb_form(form.clone(), *kind);
        }
        self.prepositions.extend(other.prepositions.iter().cloned());
        self.determiners.extend(other.determiners.iter().cloned());
        self.aux.extend(other.aux.iter().cloned());
        self.cardinals.extend(other.cardinals.iter().cloned());
    }

    pub fn insert(&mut self, section: Section, entry: &str) {
        let entry = entry.to_lowercase();
        match section {
            Section::Verbs => {
                let mut parts = entry.split('/').filter(|p| !p.is_empty());
                let Some(lemma) = parts.next() else { return };
                for (form, kind) in inflect(lemma) {
                    self.add_verb_form(form, kind);
                }
                for irregular in parts {
                    let kind = if irregular.ends_with("ing") {
                        VerbForm::Progressive
                    } else {
                        VerbForm::Finite
                    };
                    self.add_verb_form(irregular.to_string(), kind);
                }
            }
            Section::Prepositions => {
                self.prepositions.insert(entry);
            }
            Section::Determiners => {
                self.determiners.insert(entry);
            }
            Section::Aux => {
                self.aux.insert(entry);
            }
            Section::Cardinals => {
                self.cardinals.insert(entry);
            }
        }
    }

    // A lemma reading always wins over a derived one ("spread" is both).
    fn add_verb_form(&mut self, form: String, kind: VerbForm) {
        self.verb_forms
            .entry(form)
            .and_modify(|k| *k = (*k).min(kind))
            .or_insert(kind);
    }

    pub fn verb_form(&self, word: &str) -> Option<VerbForm> {
        self.verb_forms.get(&word.to_lowercase()).copied()
    }

    pub fn is_preposition(&self, word: &str) -> bool {
        self.prepositions.contains(&word.to_lowercase())
    }

    pub fn is_determiner(&self, word: &str) -> bool {
        self.determiners.contains(&word.to_lowercase())
    }

    pub fn is_aux(&self, word: &str) -> bool {
        self.aux.contains(&word.to_lowercase())
    }

    /// Spelled cardinal words only; numerals are handled by [`is_numeral`].
    pub fn is_cardinal_word(&self, word: &str) -> bool {
        self.cardinals.contains(&word.to_lowercase())
    }

    pub fn entries(&self, section: Section) -> Vec<&str> {
        let set = match section {
            Section::Verbs => {
                return self
                    .verb_forms
                    .iter()
                    .filter(|(_, k)| **k == VerbForm::Lemma)
                    .map(|(f, _)| f.as_str())
                    .collect()
            }
            Section::Prepositions => &self.prepositions,
            Section::Determiners => &self.determiners,
            Section::Aux => &self.aux,
            Section::Cardinals => &self.cardinals,
        };
        set.iter().map(String::as_str).collect()
    }
}

impl fmt::Display for Lexicon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for section in [
            Section::Verbs,
            Section::Prepositions,
            Section::Determiners,
            Section::Aux,
            Section::Cardinals,
        ] {
            writeln!(f, "[{}]", section.header())?;
            for entry in self.entries(section) {
                writeln!(f, "{entry}")?;
            }
        }
        Ok(())
    }
}

/// Digits with at most one interior decimal point ("8", "2.8").
pub fn is_numeral(word: &str) -> bool {
    let mut parts = word.split('.');
    let int = parts.next().unwrap_or("");
    let frac = parts.next();
    if parts.next().is_some() || int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) {
        return false;
    }
    match frac {
        None => true,
        Some(f) => !f.is_empty() && f.bytes().all(|b| b.is_ascii_digit()),
    }
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn ends_cvc(word: &str) -> bool {
    let chars: Vec<char> = word.chars().collect();
    match chars.as_slice() {
        [.., a, b, c] => {
            !is_vowel(*a) && is_vowel(*b) && !is_vowel(*c) && !matches!(c, 'w' | 'x' | 'y')
        }
        _ => false,
    }
}

/// Regular English inflections of a verb lemma. Over-generates on purpose
/// (both "traveled" and "travelled"); spurious forms never occur in text.
fn inflect(lemma: &str) -> Vec<(String, VerbForm)> {
    let mut forms = vec![(lemma.to_string(), VerbForm::Lemma)];
    let last = lemma.chars().last().unwrap_or(' ');
    let before_last = lemma.chars().rev().nth(1).unwrap_or(' ');
    let consonant_y = last == 'y' && !is_vowel(before_last);
    let stem_y = &lemma[..lemma.len() - last.len_utf8()];

    let third = if consonant_y {
        format!("{stem_y}ies")
    } else if ["s", "x", "z", "ch", "sh", "o"]
        .iter()
        .any(|s| lemma.ends_with(s))
    {
        format!("{lemma}es")
    } else {
        format!("{lemma}s")
    };
    forms.push((third, VerbForm::Finite));

    let past = if last == 'e' {
        format!("{lemma}d")
    } else if consonant_y {
        format!("{stem_y}ied")
    } else {
        format!("{lemma}ed")
    };
    forms.push((past, VerbForm::Finite));

    let ing = if let Some(stem) = lemma.strip_suffix("ie") {
        format!("{stem}ying")
    } else if last == 'e' && !lemma.ends_with("ee") && lemma.len() > 2 {
        format!("{}ing", &lemma[..lemma.len() - 1])
    } else {
        format!("{lemma}ing")
    };
    forms.push((ing, VerbForm::Progressive));

    if ends_cvc(lemma) {
        forms.push((format!("{lemma}{last}ed"), VerbForm::Finite));
        forms.push((format!("{lemma}{last}ing"), VerbForm::Progressive));
    }
    forms
}
