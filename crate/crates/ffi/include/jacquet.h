#ifndef JACQUET_H
#define JACQUET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdint.h>

// Result codes.
typedef enum JqStatus {
  JQ_STATUS_OK = 0,
  JQ_STATUS_NULL_POINTER = 1,
  JQ_STATUS_INVALID_UTF8 = 2,
  JQ_STATUS_PARSE = 3,
  JQ_STATUS_CONFIG = 4,
  JQ_STATUS_DOMAIN = 5,
  JQ_STATUS_CHECK_FAILED = 6,
  JQ_STATUS_PANIC = 7,
} JqStatus;

// A validated set of cuspidal lines.
typedef struct JqConfig JqConfig;

// An element of R, tied to the lines it was parsed against.
typedef struct JqElem JqElem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failure on this thread, or null. Valid until the
// next call into the library on this thread.
const char *jq_last_error(void);

// Library version as a static string.
const char *jq_version(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void jq_string_free(char *s);

// The single self-dual line `rho` with size 1 and s = 1.
//
// # Safety
// `out` must be valid for writes.
enum JqStatus jq_config_default(struct JqConfig **out);

// Parses a configuration document.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be valid for writes.
enum JqStatus jq_config_parse(const char *text, struct JqConfig **out);

// # Safety
// `cfg` must be null or a handle from this library, not yet freed.
void jq_config_free(struct JqConfig *cfg);

// Parses an expression such as `d(rho,0,1) x c(rho:1)`.
//
// # Safety
// `cfg` must be a live handle, `expr` a NUL-terminated string and `out`
// valid for writes.
enum JqStatus jq_elem_parse(const struct JqConfig *cfg, const char *expr, struct JqElem **out);

// # Safety
// `elem` must be null or a handle from this library, not yet freed.
void jq_elem_free(struct JqElem *elem);

// # Safety
// `a` and `b` must be live handles; `out` must be valid for writes.
enum JqStatus jq_elem_product(const struct JqElem *a, const struct JqElem *b, struct JqElem **out);

// # Safety
// `a` and `b` must be live handles; `out` must be valid for writes.
enum JqStatus jq_elem_sum(const struct JqElem *a, const struct JqElem *b, struct JqElem **out);

// Whether two elements are equal; writes 1 or 0.
//
// # Safety
// `a` and `b` must be live handles; `out` must be valid for writes.
enum JqStatus jq_elem_equal(const struct JqElem *a, const struct JqElem *b, int32_t *out);

// The element in expression syntax; parsing it back gives the same element.
//
// # Safety
// `elem` must be a live handle; `out` must be valid for writes.
enum JqStatus jq_elem_to_string(const struct JqElem *elem, char **out);

// m*(elem), one `coeff left (x) right` term per line.
//
// # Safety
// `elem` must be a live handle; `out` must be valid for writes.
enum JqStatus jq_mstar(const struct JqElem *elem, char **out);

// The minimal Jacquet module of elem, one `coeff word` term per line.
//
// # Safety
// `elem` must be a live handle; `out` must be valid for writes.
enum JqStatus jq_cuspidal_jacquet(const struct JqElem *elem, char **out);

// Irreducibility of d(a) x d(b) for segments written `line,start,end`.
//
// # Safety
// `cfg` must be a live handle, `a` and `b` NUL-terminated strings and `out`
// valid for writes.
enum JqStatus jq_decide(const struct JqConfig *cfg, const char *a, const char *b, char **out);

// Square-integrable representations supported on a comma-separated point
// multiset such as `rho:-1/2,rho:1/2`.
//
// # Safety
// `cfg` must be a live handle, `points` a NUL-terminated string and `out`
// valid for writes.
enum JqStatus jq_classify_si(const struct JqConfig *cfg, const char *points, char **out);

// Casselman test on a comma-separated word. Writes the report and, when
// `square_integrable` is not null, 1 or 0.
//
// # Safety
// `cfg` must be a live handle, `word` a NUL-terminated string, `out` valid
// for writes and `square_integrable` null or valid for writes.
enum JqStatus jq_casselman(const struct JqConfig *cfg,
                           const char *word,
                           char **out,
                           int32_t *square_integrable);

// Runs verification checks. `suite` is a comma-separated list of check
// names or `all`; `window` may be null for the default window. Returns
// `CheckFailed` when any check fails; the report is written either way.
//
// # Safety
// `cfg` must be a live handle, `suite` a NUL-terminated string, `window`
// null or a NUL-terminated string and `out` valid for writes.
enum JqStatus jq_verify(const struct JqConfig *cfg,
                        const char *suite,
                        const char *window,
                        char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JACQUET_H */
