use std::ffi::{CStr, CString};
use std::ptr;

use opgraph_ffi::*;

const CORPUS: &str = include_str!("../../core/tests/data/earthmoving.txt");

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> Option<String> {
    let p = opg_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn compile(text: &str, options: Option<&OpgOptions>) -> (OpgStatus, *mut OpgDocument) {
    let text = c(text);
    let mut doc = ptr::null_mut();
    let opts = options.map_or(ptr::null(), |o| o as *const _);
    let status = unsafe { opg_compile(text.as_ptr(), opts, &mut doc) };
    (status, doc)
}

fn export(doc: *const OpgDocument, format: OpgFormat) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { opg_document_export(doc, format as u32, &mut out) },
        OpgStatus::Ok
    );
    let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    unsafe { opg_string_free(out) };
    s
}

#[test]
fn corpus_counts_and_exports() {
    let (status, doc) = compile(CORPUS, None);
    assert_eq!(status, OpgStatus::Ok);
    assert!(last_error().is_none());
    unsafe {
        assert_eq!(opg_document_sentence_count(doc), 17);
        assert_eq!(opg_document_element_count(doc), 23);
        assert_eq!(opg_document_relation_count(doc), 22);
        assert!(opg_document_diagnostic_count(doc) > 0);
    }

    let json = export(doc, OpgFormat::Json);
    let native = opgraph::compile(CORPUS, opgraph::Lexicon::builtin(), Default::default()).unwrap();
    assert_eq!(json, opgraph::export::export_json(&native));
    assert!(export(doc, OpgFormat::Dot).starts_with("digraph"));
    assert!(export(doc, OpgFormat::GraphMl).contains("<graphml"));
    assert!(export(doc, OpgFormat::CsvElements).starts_with("Element,Label\r\n"));
    assert!(export(doc, OpgFormat::CsvRelations)
        .starts_with("Element (From),Element (To),Relation\r\n"));
    unsafe { opg_document_free(doc) };
}

#[test]
fn strict_parse_failure() {
    let opts = OpgOptions {
        strict: true,
        normalize_case: false,
        lexicon: ptr::null(),
    };
    let (status, doc) = compile("Colorless green ideas sleep furiously near.", Some(&opts));
    assert_eq!(status, OpgStatus::ParseError);
    assert!(doc.is_null());
    assert!(last_error().unwrap().starts_with("sentence 0"));

    // lenient mode keeps going and records a diagnostic
    let (status, doc) = compile("Colorless green ideas sleep furiously near.", None);
    assert_eq!(status, OpgStatus::Ok);
    assert!(last_error().is_none());
    assert_eq!(unsafe { opg_document_diagnostic_count(doc) }, 1);
    unsafe { opg_document_free(doc) };
}

#[test]
fn options_and_lexicon() {
    let lexicon = c("[verbs]\nhoist\n");
    let opts = OpgOptions {
        strict: true,
        normalize_case: true,
        lexicon: lexicon.as_ptr(),
    };
    let (status, doc) = compile(
        "The lifting activity hoists one beam. One beam hoists one truck.",
        Some(&opts),
    );
    assert_eq!(status, OpgStatus::Ok, "{:?}", last_error());
    assert_eq!(unsafe { opg_document_element_count(doc) }, 3);
    unsafe { opg_document_free(doc) };

    let broken = c("hoist\n");
    let opts = OpgOptions {
        lexicon: broken.as_ptr(),
        ..opts
    };
    let (status, doc) = compile("The lifting activity hoists one beam.", Some(&opts));
    assert_eq!(status, OpgStatus::LexiconError);
    assert!(doc.is_null());
    assert!(last_error().unwrap().contains("line 1"));
}

#[test]
fn invalid_arguments() {
    let mut doc = ptr::null_mut();
    assert_eq!(
        unsafe { opg_compile(ptr::null(), ptr::null(), &mut doc) },
        OpgStatus::InvalidArgument
    );
    let text = c("The loading activity takes 2.8 min.");
    assert_eq!(
        unsafe { opg_compile(text.as_ptr(), ptr::null(), ptr::null_mut()) },
        OpgStatus::InvalidArgument
    );

    let bytes = b"The \xff activity takes 2.8 min.\0";
    assert_eq!(
        unsafe { opg_compile(bytes.as_ptr().cast(), ptr::null(), &mut doc) },
        OpgStatus::InvalidUtf8
    );
    assert!(doc.is_null());

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { opg_document_export(ptr::null(), OpgFormat::Json as u32, &mut out) },
        OpgStatus::InvalidArgument
    );
    let (_, doc) = compile("The loading activity takes 2.8 min.", None);
    assert_eq!(
        unsafe { opg_document_export(doc, 7, &mut out) },
        OpgStatus::InvalidArgument
    );
    assert!(out.is_null());
    assert!(last_error().unwrap().contains("unknown format 7"));

    unsafe {
        assert_eq!(opg_document_element_count(ptr::null()), 0);
        opg_document_free(doc);
        opg_document_free(ptr::null_mut());
        opg_string_free(ptr::null_mut());
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(opg_version()) }.to_str().unwrap();
    assert_eq!(v, opgraph::VERSION);
}
