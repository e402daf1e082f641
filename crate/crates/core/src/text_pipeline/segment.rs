use std::ops::Range;

fn is_terminator(c: char) -> bool {
    matches!(c, '.' | '!' | '?')
}

/// Byte ranges of the sentences in `text`, with surrounding whitespace
/// trimmed.
///
/// A run of `.`, `!` or `?` ends a sentence when it is followed by the end of
/// input or by whitespace and an uppercase letter. A period with digits on
/// both sides is a decimal point.
pub fn sentence_spans(text: &str) -> Vec<Range<usize>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut spans = Vec::new();
    let mut seg_start = 0;
    let mut i = 0;

    while i < chars.len() {
        let (_, c) = chars[i];
        if !is_terminator(c) {
            i += 1;
            continue;
        }
        let prev_digit = i > 0 && chars[i - 1].1.is_ascii_digit();
        let next_digit = chars.get(i + 1).is_some_and(|(_, n)| n.is_ascii_digit());
        if c == '.' && prev_digit && next_digit {
            i += 1;
            continue;
        }
        let mut j = i;
        while chars.get(j + 1).is_some_and(|(_, n)| is_terminator(*n)) {
            j += 1;
        }
        let after = j + 1;
        let next_word = chars[after..].iter().find(|(_, n)| !n.is_whitespace());
        let boundary = match next_word {
            None => true,
            Some((_, n)) => chars[after].1.is_whitespace() && n.is_uppercase(),
        };
        if boundary {
            let end = chars.get(after).map_or(text.len(), |(b, _)| *b);
            push_trimmed(text, seg_start..end, &mut spans);
            seg_start = end;
        }
        i = after;
    }
    push_trimmed(text, seg_start..text.len(), &mut spans);
    spans
}

fn push_trimmed(text: &str, range: Range<usize>, spans: &mut Vec<Range<usize>>) {
    let slice = &text[range.clone()];
    let lead = slice.len() - slice.trim_start().len();
    let trimmed = slice.trim();
    if !trimmed.is_empty() {
        let start = range.start + lead;
        spans.push(start..start + trimmed.len());
    }
}

pub fn segment_sentences(text: &str) -> Vec<&str> {
    sentence_spans(text).into_iter().map(|r| &text[r]).collect()
}
