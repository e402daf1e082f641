use super::{
    ClauseParse, NpChunk, NpRole, ParseError, ParseFailure, PosCategory, TaggedToken, VerbGroup,
};

struct Cursor<'a> {
    tokens: &'a [TaggedToken],
    pos: usize,
    sentence_index: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a TaggedToken> {
        self.tokens.get(self.pos)
    }

    fn peek_pos(&self) -> Option<PosCategory> {
        self.peek().map(|t| t.pos)
    }

    fn eat(&mut self, pos: PosCategory) -> Option<&'a TaggedToken> {
        let t = self.peek().filter(|t| t.pos == pos)?;
        self.pos += 1;
        Some(t)
    }

    /// Span of the token under the cursor, or an empty span at the sentence
    /// end.
    fn here(&self) -> (usize, usize) {
        match self.peek() {
            Some(t) => (t.token.start, t.token.end),
            None => {
                let end = self.tokens.last().map_or(0, |t| t.token.end);
                (end, end)
            }
        }
    }

    fn fail(&self, reason: ParseFailure, char_span: (usize, usize)) -> ParseError {
        ParseError {
            sentence_index: self.sentence_index,
            reason,
            char_span,
        }
    }

    fn noun_phrase(&mut self, role: NpRole) -> Result<NpChunk, ParseError> {
        let start = self.pos;
        self.eat(PosCategory::Determiner);
        while self.peek_pos().is_some_and(PosCategory::is_nominal) {
            self.pos += 1;
        }
        let chunk = &self.tokens[start..self.pos];
        match chunk.last() {
            Some(last) if last.pos.is_np_head() => Ok(NpChunk {
                tokens: chunk.to_vec(),
                role,
            }),
            Some(last) => Err(self.fail(
                ParseFailure::NpWithoutHead,
                (chunk[0].token.start, last.token.end),
            )),
            None => Err(self.fail(
                match role {
                    NpRole::Subject => ParseFailure::MissingSubject,
                    NpRole::Object(_) => ParseFailure::MissingObject,
                },
                self.here(),
            )),
        }
    }

    fn verb_group(&mut self, infinitive: bool) -> Result<VerbGroup, ParseError> {
        let marker = if infinitive {
            self.eat(PosCategory::InfinitiveMarker)
                .map(|t| t.token.clone())
        } else {
            None
        };
        let aux = if infinitive {
            None
        } else {
            self.eat(PosCategory::Aux).map(|t| t.token.clone())
        };
        let main = self
            .eat(PosCategory::Verb)
            .ok_or_else(|| self.fail(ParseFailure::MissingVerb, self.here()))?;
        let prep = self.eat(PosCategory::Preposition).map(|t| t.token.clone());
        Ok(VerbGroup {
            aux,
            infinitive: marker,
            main: main.token.clone(),
            prep,
        })
    }
}

/// Chunks a tagged sentence into its subject, objects and verb groups.
///
/// A trailing infinitive without an object ("to travel.") is consumed and
/// dropped. Only sentence-final punctuation is accepted.
pub fn parse_clause(
    tagged: &[TaggedToken],
    sentence_index: usize,
) -> Result<ClauseParse, ParseError> {
    let mut cur = Cursor {
        tokens: tagged,
        pos: 0,
        sentence_index,
    };
    if tagged.iter().all(|t| t.pos == PosCategory::Punct) {
        return Err(cur.fail(ParseFailure::EmptySentence, cur.here()));
    }

    let mut nps = vec![cur.noun_phrase(NpRole::Subject)?];
    let mut vgs = vec![cur.verb_group(false)?];
    nps.push(cur.noun_phrase(NpRole::Object(1))?);

    if cur.peek_pos() == Some(PosCategory::InfinitiveMarker) {
        let vg = cur.verb_group(true)?;
        if cur.peek_pos().is_some_and(PosCategory::starts_noun_phrase) {
            nps.push(cur.noun_phrase(NpRole::Object(2))?);
            vgs.push(vg);
        } else if vg.prep.is_some() {
            return Err(cur.fail(ParseFailure::MissingObject, cur.here()));
        }
    }

    let rest = &tagged[cur.pos..];
    if rest.iter().any(|t| t.pos != PosCategory::Punct) {
        return Err(cur.fail(
            ParseFailure::UnexpectedToken(rest[0].token.surface.clone()),
            cur.here(),
        ));
    }

    Ok(ClauseParse {
        sentence_index,
        nps,
        vgs,
    })
}
