use super::{is_punct, PosCategory, TaggedToken, Token};
use crate::lexicon::{is_numeral, Lexicon, VerbForm};

/// Assigns a part-of-speech category to every token.
///
/// Closed classes come straight from the lexicon. Verb-lexicon forms are
/// disambiguated by position: after an auxiliary or infinitive marker they
/// are verbs; directly after the subject's head they are the main verb
/// (unless progressive, which needs an auxiliary); anywhere else, e.g. after
/// a determiner, cardinal or preposition, they are nominal ("the dumped
/// dirt", "assist with dumping").
pub fn tag(tokens: &[Token], lexicon: &Lexicon) -> Vec<TaggedToken> {
    let mut tagged: Vec<TaggedToken> = Vec::with_capacity(tokens.len());
    let mut seen_main_verb = false;

    for (i, token) in tokens.iter().enumerate() {
        let word = token.surface.as_str();
        let prev = tagged.last().map(|t| t.pos);
        let pos = if word.chars().all(is_punct) {
            PosCategory::Punct
        } else if lexicon.is_determiner(word) {
            PosCategory::Determiner
        } else if lexicon.is_aux(word) {
            PosCategory::Aux
        } else if word.eq_ignore_ascii_case("to")
            && tokens
                .get(i + 1)
                .is_some_and(|next| lexicon.verb_form(&next.surface) == Some(VerbForm::Lemma))
        {
            PosCategory::InfinitiveMarker
        } else if lexicon.is_preposition(word) {
            PosCategory::Preposition
        } else if lexicon.is_cardinal_word(word) || is_numeral(word) {
            PosCategory::Cardinal
        } else if word.starts_with(|c: char| c.is_ascii_digit()) {
            PosCategory::UnitNumber
        } else if let Some(form) = lexicon.verb_form(word) {
            match prev {
                Some(PosCategory::Aux | PosCategory::InfinitiveMarker) => PosCategory::Verb,
                Some(PosCategory::Noun | PosCategory::UnitNumber)
                    if !seen_main_verb && form != VerbForm::Progressive =>
                {
                    PosCategory::Verb
                }
                _ => PosCategory::Noun,
            }
        } else {
            PosCategory::Noun
        };
        if pos == PosCategory::Verb {
            seen_main_verb = true;
        }
        tagged.push(TaggedToken {
            token: token.clone(),
            pos,
        });
    }
    tagged
}
