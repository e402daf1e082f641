use super::Token;

pub fn is_punct(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '\u{2010}'..='\u{2027}' | '\u{00ab}' | '\u{00bb}' | '\u{00a1}' | '\u{00bf}'
        )
}

fn is_hyphen(c: char) -> bool {
    matches!(c, '-' | '\u{2010}' | '\u{2011}')
}

/// Splits a sentence into tokens.
///
/// Whitespace separates tokens, leading and trailing punctuation becomes one
/// token per character, and hyphens inside a word split it ("front-end" gives
/// "front" and "end"; the hyphen itself is dropped). Interior periods and
/// unit suffixes stay attached ("2.8", "8900m³").
pub fn tokenize(sentence: &str) -> Vec<Token> {
    let chars: Vec<char> = sentence.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < chars.len() && !chars[i].is_whitespace() {
            i += 1;
        }
        split_chunk(&chars, start, i, &mut tokens);
    }
    tokens
}

fn split_chunk(chars: &[char], start: usize, end: usize, out: &mut Vec<Token>) {
    let mut core_start = start;
    while core_start < end && is_punct(chars[core_start]) {
        out.push(make(chars, core_start, core_start + 1));
        core_start += 1;
    }
    let mut core_end = end;
    while core_end > core_start && is_punct(chars[core_end - 1]) {
        core_end -= 1;
    }

    let mut piece = core_start;
    for k in core_start..core_end {
        if is_hyphen(chars[k]) {
            if k > piece {
                out.push(make(chars, piece, k));
            }
            piece = k + 1;
        }
    }
    if core_end > piece {
        out.push(make(chars, piece, core_end));
    }

    for k in core_end..end {
        out.push(make(chars, k, k + 1));
    }
}

fn make(chars: &[char], start: usize, end: usize) -> Token {
    Token {
        surface: chars[start..end].iter().collect(),
        start,
        end,
    }
}
