#ifndef MONODROMY_H
#define MONODROMY_H

/* Generated with cbindgen; run `cargo run -p monodromy-ffi --example generate_header` to refresh. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirroring the CLI exit codes.
 */
enum MonoStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  MONO_STATUS_OK = 0,
  MONO_STATUS_VERIFY_FAILED = 1,
  MONO_STATUS_INVALID = 2,
  MONO_STATUS_RESOURCE = 3,
  MONO_STATUS_PANIC = 4,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum MonoStatus MonoStatus;
#else
typedef int32_t MonoStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * An owned text result.
 */
typedef struct MonoText MonoText;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent error on this thread; valid until the next
 * failing call on the same thread.
 */
const char *mono_last_error(void);

/**
 * The NUL-terminated text of a result handle.
 */
const char *mono_text_get(const MonoText *handle);

/**
 * Free a result handle. Passing NULL is a no-op.
 */
void mono_text_free(MonoText *handle);

/**
 * Counts report for the parameters, as key=value lines.
 */
MonoStatus mono_report(int64_t a, int64_t b, int64_t c, int64_t d, MonoText **out);

/**
 * The braid monodromy factorization in the line-oriented text format.
 */
MonoStatus mono_factorization(int64_t a, int64_t b, int64_t c, int64_t d, MonoText **out);

/**
 * Parse a factorization text and return its normalized form; validates the
 * format and the tag invariants.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string.
 */
MonoStatus mono_factorization_parse(const char *text, MonoText **out);

/**
 * Run the bundled verification suite. `Ok` when every check passes,
 * `VerifyFailed` otherwise; the text carries one PASS/FAIL line per check
 * either way.
 */
MonoStatus mono_verify_paper(uint64_t seed, MonoText **out);

/**
 * Compare the stable-equivalence invariants of two parameter sets. The
 * text is the verdict line of the `compare` command.
 */
MonoStatus mono_compare(int64_t a,
                        int64_t b,
                        int64_t c,
                        int64_t d,
                        int64_t a2,
                        int64_t b2,
                        int64_t c2,
                        int64_t d2,
                        MonoText **out);

/**
 * Liftability data of an arc, as key=value lines (mirrors `lift-check`).
 *
 * # Safety
 * `arc` must be a valid NUL-terminated string.
 */
MonoStatus mono_lift_check(int64_t b, int64_t d, const char *arc, int32_t power, MonoText **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MONODROMY_H */
