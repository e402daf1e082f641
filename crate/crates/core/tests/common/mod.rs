#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use opgraph::ElementLabel;
use proptest::prelude::*;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn corpus() -> String {
    std::fs::read_to_string(data_path("earthmoving.txt")).unwrap()
}

/// The printed tables put a space before superscripts ("8900m ³ dirt").
pub fn canonical(s: &str) -> String {
    s.replace(" ³", "³")
}

fn read_table(name: &str) -> Vec<Vec<String>> {
    let mut reader = csv::Reader::from_path(data_path(name)).unwrap();
    reader
        .records()
        .map(|r| r.unwrap().iter().map(canonical).collect())
        .collect()
}

/// (surface, label) pairs transcribed from the element table.
pub fn golden_elements() -> BTreeSet<(String, String)> {
    read_table("table2.csv")
        .into_iter()
        .map(|r| (r[0].clone(), r[1].clone()))
        .collect()
}

/// (from, to, relation) triples transcribed from the relation table.
pub fn golden_relations() -> BTreeSet<(String, String, String)> {
    read_table("table3.csv")
        .into_iter()
        .map(|r| (r[0].clone(), r[1].clone(), r[2].clone()))
        .collect()
}

/// A sentence produced from the controlled grammar's templates together
/// with what extraction must yield for it.
#[derive(Debug, Clone)]
pub struct Generated {
    pub text: String,
    pub surfaces: Vec<String>,
    pub phrases: Vec<String>,
}

const DETERMINERS: &[&str] = &["the", "a", "an"];
const CARDINALS: &[&str] = &["one", "two", "three", "twelve", "2", "3.5", "19.1"];
const PARTICIPLES: &[&str] = &[
    "dumped",
    "loading",
    "hauling",
    "spreading",
    "returning",
    "excavated",
];
const NOUNS: &[&str] = &[
    "activity",
    "truck",
    "backhoe",
    "loader",
    "dirt",
    "capacity",
    "min",
    "spotter",
    "dozer",
    "crane",
    "excavation",
    "site",
    "truckload",
    "front",
    "end",
];
const UNITS: &[&str] = &["8900m³", "12m3", "4.5t", "8.9m³"];
const AUX_PARTICIPLES: &[&str] = &[
    "used", "followed", "loaded", "hauled", "preceded", "assisted",
];
const AUX: &[&str] = &["is", "are", "was", "were"];
const FINITE: &[&str] = &[
    "takes", "precedes", "starts", "returns", "has", "spreads", "hauled", "loads",
];
const PREPS: &[&str] = &[
    "in", "by", "before", "after", "with", "to", "of", "on", "at", "from",
];
const LEMMAS: &[&str] = &[
    "excavate", "load", "spread", "assist", "travel", "complete", "haul",
];

fn pick(words: &'static [&'static str]) -> impl Strategy<Value = String> {
    proptest::sample::select(words).prop_map(str::to_string)
}

/// Noun phrase as (tokens including determiner, element surface).
fn noun_phrase() -> impl Strategy<Value = (Vec<String>, String)> {
    (
        proptest::option::of(pick(DETERMINERS)),
        proptest::option::of(pick(CARDINALS)),
        proptest::option::of(pick(PARTICIPLES)),
        proptest::collection::vec(prop_oneof![pick(NOUNS), pick(UNITS)], 0..3),
        prop_oneof![3 => pick(NOUNS), 1 => pick(UNITS)],
    )
        .prop_map(|(det, card, part, mods, head)| {
            let mut body = Vec::new();
            body.extend(card.clone());
            // participles are nominal only right after a determiner or cardinal
            if det.is_some() || card.is_some() {
                body.extend(part);
            }
            body.extend(mods);
            body.push(head);
            let surface = body.join(" ");
            let mut tokens: Vec<String> = det.into_iter().collect();
            tokens.extend(body);
            (tokens, surface)
        })
}

fn main_verb_group() -> impl Strategy<Value = (Vec<String>, String)> {
    let passive = (pick(AUX), pick(AUX_PARTICIPLES)).prop_map(|(a, v)| (vec![a, v.clone()], v));
    let active = pick(FINITE).prop_map(|v| (vec![v.clone()], v));
    (
        prop_oneof![passive, active],
        proptest::option::of(pick(PREPS)),
    )
        .prop_map(|((mut tokens, main), prep)| match prep {
            Some(p) => {
                tokens.push(p.clone());
                (tokens, format!("{main} {p}"))
            }
            None => (tokens, main),
        })
}

fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Sentences of the form `NP VG NP (to VERB PREP? NP?)? .`
pub fn generated_sentence() -> impl Strategy<Value = Generated> {
    (
        noun_phrase(),
        main_verb_group(),
        noun_phrase(),
        proptest::option::of((
            pick(LEMMAS),
            proptest::option::of(pick(PREPS)),
            proptest::option::of(noun_phrase()),
        )),
    )
        .prop_filter_map("adjacent elements must differ", |(subj, vg, obj, tail)| {
            let mut tokens = subj.0.clone();
            tokens.extend(vg.0.clone());
            tokens.extend(obj.0.clone());
            let mut surfaces = vec![subj.1.clone(), obj.1.clone()];
            let mut phrases = vec![vg.1.clone()];
            if let Some((lemma, prep, np)) = tail {
                tokens.push("to".into());
                tokens.push(lemma.clone());
                match (prep, np) {
                    (Some(p), Some(np)) => {
                        tokens.push(p.clone());
                        tokens.extend(np.0);
                        surfaces.push(np.1);
                        phrases.push(format!("{lemma} {p}"));
                    }
                    (None, Some(np)) => {
                        tokens.extend(np.0);
                        surfaces.push(np.1);
                        phrases.push(lemma);
                    }
                    (Some(_), None) => return None,
                    (None, None) => {}
                }
            }
            if surfaces
                .windows(2)
                .any(|w| w[0].eq_ignore_ascii_case(&w[1]))
            {
                return None;
            }
            let mut text = tokens.join(" ");
            text.push('.');
            let text = capitalize(&text);
            // without a determiner the capitalized first word is part of the subject
            if !DETERMINERS.contains(&subj.0[0].as_str()) {
                surfaces[0] = capitalize(&surfaces[0]);
            }
            Some(Generated {
                text,
                surfaces,
                phrases,
            })
        })
}

pub fn generated_text(max_sentences: usize) -> impl Strategy<Value = String> {
    // a sentence boundary needs an uppercase letter after it
    let sentence = generated_sentence().prop_filter("starts with a letter", |g| {
        g.text.starts_with(char::is_uppercase)
    });
    proptest::collection::vec(sentence, 0..max_sentences)
        .prop_map(|v| v.into_iter().map(|g| g.text).collect::<Vec<_>>().join(" "))
}

/// Independent restatement of the labeling rule.
pub fn label_oracle(surface: &str) -> ElementLabel {
    let lower = surface.to_lowercase();
    let words: Vec<&str> = lower.split_whitespace().collect();
    const SPELLED: [&str; 22] = [
        "one",
        "two",
        "three",
        "four",
        "five",
        "six",
        "seven",
        "eight",
        "nine",
        "ten",
        "eleven",
        "twelve",
        "thirteen",
        "fourteen",
        "fifteen",
        "sixteen",
        "seventeen",
        "eighteen",
        "nineteen",
        "twenty",
        "hundred",
        "thousand",
    ];
    let numeral = |w: &str| {
        let digits = w.chars().filter(|c| c.is_ascii_digit()).count();
        let dots = w.chars().filter(|&c| c == '.').count();
        digits > 0
            && digits + dots == w.chars().count()
            && dots <= 1
            && !w.starts_with('.')
            && !w.ends_with('.')
    };
    if words.contains(&"activity") || words.contains(&"activities") {
        ElementLabel::Activity
    } else if words.contains(&"min") {
        ElementLabel::Duration
    } else if words.iter().any(|w| SPELLED.contains(w) || numeral(w)) {
        ElementLabel::Resource
    } else {
        ElementLabel::Other
    }
}

/// Random words biased towards the labeling keywords.
pub fn surface_word() -> impl Strategy<Value = String> {
    prop_oneof![
        proptest::sample::select(vec![
            "activity",
            "Activity",
            "activities",
            "min",
            "MIN",
            "minute",
            "one",
            "One",
            "twenty",
            "2.8",
            "19",
            "8900m³",
            "activityx",
            "truck",
            "dirt",
            "1.2.3",
            ".5",
            "minimum",
        ])
        .prop_map(str::to_string),
        "[a-z0-9.]{1,8}",
    ]
}
