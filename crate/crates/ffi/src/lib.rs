//! C ABI over the opgraph compiler.
//!
//! Documents are opaque handles owned by the caller and released with
//! [`opg_document_free`]. Strings returned through out-parameters are owned
//! by the caller and released with [`opg_string_free`]. Every fallible call
//! returns an [`OpgStatus`]; on failure [`opg_last_error_message`] describes
//! the error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use opgraph::export::{export_csv, export_dot, export_graphml, export_json};
use opgraph::{compile, CompileError, CompileOptions, ExtractionDocument, Lexicon};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpgStatus {
    Ok = 0,
    /// A sentence failed to parse or extract in strict mode.
    ParseError = 1,
    /// A required pointer was null or an enum value was out of range.
    InvalidArgument = 2,
    InvalidUtf8 = 3,
    /// The supplied lexicon text could not be parsed.
    LexiconError = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpgFormat {
    Json = 0,
    Dot = 1,
    GraphMl = 2,
    CsvElements = 3,
    CsvRelations = 4,
}

impl OpgFormat {
    fn from_raw(raw: u32) -> Option<Self> {
        [
            OpgFormat::Json,
            OpgFormat::Dot,
            OpgFormat::GraphMl,
            OpgFormat::CsvElements,
            OpgFormat::CsvRelations,
        ]
        .into_iter()
        .find(|f| *f as u32 == raw)
    }
}

/// Compile options. `lexicon` may be null; otherwise it is lexicon text
/// whose entries extend the built-in vocabulary.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct OpgOptions {
    pub strict: bool,
    pub normalize_case: bool,
    pub lexicon: *const c_char,
}

/// Compiled extraction document.
pub struct OpgDocument {
    doc: ExtractionDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    let c = CString::new(message).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(OpgStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> OpgStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OpgStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {what}"));
            OpgStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(
            OpgStatus::InvalidArgument,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(OpgStatus::InvalidUtf8, format!("{what} is not UTF-8: {e}")))
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s).map(CString::into_raw).map_err(|_| {
        Failure(
            OpgStatus::InvalidArgument,
            "output contains a nul byte".into(),
        )
    })
}

/// Compiles `text` into a new document stored in `*out`.
///
/// `options` may be null for the defaults. On failure `*out` is set to null.
///
/// # Safety
/// `text` must be a nul-terminated string, `options` null or valid, and
/// `out` a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn opg_compile(
    text: *const c_char,
    options: *const OpgOptions,
    out: *mut *mut OpgDocument,
) -> OpgStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(OpgStatus::InvalidArgument, "out is null".into()));
        }
        *out = ptr::null_mut();
        let text = read_str(text, "text")?;
        let opts = options.as_ref().copied().unwrap_or(OpgOptions {
            strict: false,
            normalize_case: false,
            lexicon: ptr::null(),
        });
        let custom = if opts.lexicon.is_null() {
            None
        } else {
            let extra = Lexicon::parse(read_str(opts.lexicon, "lexicon")?)
                .map_err(|e| Failure(OpgStatus::LexiconError, format!("lexicon {e}")))?;
            Some(Lexicon::builtin_with(&extra))
        };
        let lexicon = custom.as_ref().unwrap_or_else(|| Lexicon::builtin());
        let doc = compile(
            text,
            lexicon,
            CompileOptions {
                strict: opts.strict,
                normalize_case: opts.normalize_case,
            },
        )
        .map_err(|e: CompileError| Failure(OpgStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(OpgDocument { doc }));
        Ok(())
    })
}

/// Releases a document. Null is ignored.
///
/// # Safety
/// `doc` must be null or a handle from [`opg_compile`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn opg_document_free(doc: *mut OpgDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// # Safety
/// `doc` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn opg_document_sentence_count(doc: *const OpgDocument) -> usize {
    doc.as_ref().map_or(0, |d| d.doc.sentences.len())
}

/// # Safety
/// `doc` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn opg_document_element_count(doc: *const OpgDocument) -> usize {
    doc.as_ref().map_or(0, |d| d.doc.elements.len())
}

/// # Safety
/// `doc` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn opg_document_relation_count(doc: *const OpgDocument) -> usize {
    doc.as_ref().map_or(0, |d| d.doc.relations.len())
}

/// Number of diagnostics, including skipped-sentence warnings.
///
/// # Safety
/// `doc` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn opg_document_diagnostic_count(doc: *const OpgDocument) -> usize {
    doc.as_ref().map_or(0, |d| d.doc.diagnostics.len())
}

/// Serializes `doc` in `format`, one of the [`OpgFormat`] values, and
/// stores a newly allocated string in `*out`.
///
/// # Safety
/// `doc` must be a live handle and `out` a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn opg_document_export(
    doc: *const OpgDocument,
    format: u32,
    out: *mut *mut c_char,
) -> OpgStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(OpgStatus::InvalidArgument, "out is null".into()));
        }
        *out = ptr::null_mut();
        let doc = &doc
            .as_ref()
            .ok_or_else(|| Failure(OpgStatus::InvalidArgument, "document is null".into()))?
            .doc;
        let format = OpgFormat::from_raw(format).ok_or_else(|| {
            Failure(
                OpgStatus::InvalidArgument,
                format!("unknown format {format}"),
            )
        })?;
        let text = match format {
            OpgFormat::Json => export_json(doc),
            OpgFormat::Dot => export_dot(&doc.graph),
            OpgFormat::GraphMl => export_graphml(&doc.graph),
            OpgFormat::CsvElements => export_csv(doc).elements,
            OpgFormat::CsvRelations => export_csv(doc).relations,
        };
        *out = to_c_string(text)?;
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from [`opg_document_export`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn opg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn opg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn opg_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
