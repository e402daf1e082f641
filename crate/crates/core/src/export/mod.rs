//! Serializers for extraction documents and operation graphs.

mod csv;
mod dot;
mod graphml;
mod json;

pub use self::csv::{export_csv, CsvTables, ELEMENTS_HEADER, RELATIONS_HEADER};
pub use self::dot::export_dot;
pub use self::graphml::export_graphml;
pub use self::json::{export_json, import_json};
