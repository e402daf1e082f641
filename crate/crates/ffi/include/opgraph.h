#ifndef OPGRAPH_H
#define OPGRAPH_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OpgFormat {
  OPG_FORMAT_JSON = 0,
  OPG_FORMAT_DOT = 1,
  OPG_FORMAT_GRAPH_ML = 2,
  OPG_FORMAT_CSV_ELEMENTS = 3,
  OPG_FORMAT_CSV_RELATIONS = 4,
} OpgFormat;

typedef enum OpgStatus {
  OPG_STATUS_OK = 0,
  /**
   * A sentence failed to parse or extract in strict mode.
   */
  OPG_STATUS_PARSE_ERROR = 1,
  /**
   * A required pointer was null or an enum value was out of range.
   */
  OPG_STATUS_INVALID_ARGUMENT = 2,
  OPG_STATUS_INVALID_UTF8 = 3,
  /**
   * The supplied lexicon text could not be parsed.
   */
  OPG_STATUS_LEXICON_ERROR = 4,
  OPG_STATUS_PANIC = 5,
} OpgStatus;

/**
 * Compiled extraction document.
 */
typedef struct OpgDocument OpgDocument;

/**
 * Compile options. `lexicon` may be null; otherwise it is lexicon text
 * whose entries extend the built-in vocabulary.
 */
typedef struct OpgOptions {
  bool strict;
  bool normalize_case;
  const char *lexicon;
} OpgOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Compiles `text` into a new document stored in `*out`.
 *
 * `options` may be null for the defaults. On failure `*out` is set to null.
 *
 * # Safety
 * `text` must be a nul-terminated string, `options` null or valid, and
 * `out` a valid pointer to writable storage.
 */
enum OpgStatus opg_compile(const char *text,
                           const struct OpgOptions *options,
                           struct OpgDocument **out);

/**
 * Releases a document. Null is ignored.
 *
 * # Safety
 * `doc` must be null or a handle from [`opg_compile`] not yet freed.
 */
void opg_document_free(struct OpgDocument *doc);

/**
 * # Safety
 * `doc` must be null or a live handle.
 */
size_t opg_document_sentence_count(const struct OpgDocument *doc);

/**
 * # Safety
 * `doc` must be null or a live handle.
 */
size_t opg_document_element_count(const struct OpgDocument *doc);

/**
 * # Safety
 * `doc` must be null or a live handle.
 */
size_t opg_document_relation_count(const struct OpgDocument *doc);

/**
 * Number of diagnostics, including skipped-sentence warnings.
 *
 * # Safety
 * `doc` must be null or a live handle.
 */
size_t opg_document_diagnostic_count(const struct OpgDocument *doc);

/**
 * Serializes `doc` in `format`, one of the [`OpgFormat`] values, and
 * stores a newly allocated string in `*out`.
 *
 * # Safety
 * `doc` must be a live handle and `out` a valid pointer to writable storage.
 */
enum OpgStatus opg_document_export(const struct OpgDocument *doc, uint32_t format, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from [`opg_document_export`] not yet freed.
 */
void opg_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library on the same thread.
 */
const char *opg_last_error_message(void);

/**
 * Library version as a static nul-terminated string.
 */
const char *opg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OPGRAPH_H */
