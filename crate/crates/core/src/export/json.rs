use crate::document::ExtractionDocument;

/// Pretty-printed JSON with two-space indentation and a trailing newline.
/// Key order follows the struct declarations.
pub fn export_json(doc: &ExtractionDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serialization is infallible");
    out.push('\n');
    out
}

pub fn import_json(text: &str) -> Result<ExtractionDocument, serde_json::Error> {
    serde_json::from_str(text)
}
