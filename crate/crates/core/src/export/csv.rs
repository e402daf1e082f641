use crate::document::ExtractionDocument;

pub const ELEMENTS_HEADER: [&str; 2] = ["Element", "Label"];
pub const RELATIONS_HEADER: [&str; 3] = ["Element (From)", "Element (To)", "Relation"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvTables {
    pub elements: String,
    pub relations: String,
}

fn write_table<const N: usize>(
    header: [&str; N],
    rows: impl Iterator<Item = [String; N]>,
) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    writer.write_record(header).expect("writing to memory");
    for row in rows {
        writer.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("input was UTF-8")
}

/// Element and relation tables with RFC 4180 quoting and CRLF line endings.
pub fn export_csv(doc: &ExtractionDocument) -> CsvTables {
    CsvTables {
        elements: write_table(
            ELEMENTS_HEADER,
            doc.elements
                .iter()
                .map(|e| [e.surface.clone(), e.label.to_string()]),
        ),
        relations: write_table(
            RELATIONS_HEADER,
            doc.relations
                .iter()
                .map(|r| [r.from.clone(), r.to.clone(), r.phrase.clone()]),
        ),
    }
}
