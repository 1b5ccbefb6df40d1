#ifndef TWISTLAB_H
#define TWISTLAB_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum TwistlabStatus {
  TWISTLAB_STATUS_OK = 0,
  TWISTLAB_STATUS_NULL_POINTER = 1,
  TWISTLAB_STATUS_INVALID_UTF8 = 2,
  TWISTLAB_STATUS_PARSE = 3,
  TWISTLAB_STATUS_NOT_A_KNOT = 4,
  TWISTLAB_STATUS_ON_JUMP = 5,
  TWISTLAB_STATUS_INVALID_ARGUMENT = 6,
  TWISTLAB_STATUS_SCRIPT = 7,
  TWISTLAB_STATUS_PRECISION = 8,
  TWISTLAB_STATUS_PANIC = 9,
} TwistlabStatus;

/**
 * The result of replaying a move script.
 */
typedef struct TwistlabCertificate TwistlabCertificate;

/**
 * A braid word on a fixed number of strands.
 */
typedef struct TwistlabWord TwistlabWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *twistlab_last_error(void);

/**
 * Static description of a status code.
 */
const char *twistlab_status_name(enum TwistlabStatus status);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void twistlab_string_free(char *s);

/**
 * Parses `a..y`/`A..Y` text (with `^k`) or a signed list like `[1,-2]`.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum TwistlabStatus twistlab_word_parse(const char *text,
                                        size_t strands,
                                        struct TwistlabWord **out);

/**
 * # Safety
 * `w` must be null or a handle from `twistlab_word_parse`, not yet freed.
 */
void twistlab_word_free(struct TwistlabWord *w);

/**
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum TwistlabStatus twistlab_word_length(const struct TwistlabWord *w, size_t *out);

/**
 * Number of components of the closure.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum TwistlabStatus twistlab_word_components(const struct TwistlabWord *w, size_t *out);

/**
 * Garside normal form as a letter string; free with `twistlab_string_free`.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum TwistlabStatus twistlab_word_normal_form(const struct TwistlabWord *w, char **out);

/**
 * Whether two words are the same braid.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TwistlabStatus twistlab_word_equal(const struct TwistlabWord *a,
                                        const struct TwistlabWord *b,
                                        bool *out);

/**
 * Maximum of `|σ_ω|` over the circle, away from roots of the Alexander polynomial.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum TwistlabStatus twistlab_word_sigma_hat(const struct TwistlabWord *w, int64_t *out);

/**
 * Signature at `s = num/den`, signed so that positive torus knots are positive.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum TwistlabStatus twistlab_word_signature(const struct TwistlabWord *w,
                                            int64_t num,
                                            int64_t den,
                                            int64_t *out);

/**
 * `σ̂` of the torus knot `T(p,q)` from its jump formula.
 *
 * # Safety
 * `out` must be writable.
 */
enum TwistlabStatus twistlab_torus_sigma_hat(int64_t p, int64_t q, int64_t *out);

/**
 * Script JSON for a named family member; free with `twistlab_string_free`.
 *
 * # Safety
 * `family` must be a valid C string; `out` must be writable.
 */
enum TwistlabStatus twistlab_family_script(const char *family, size_t param, char **out);

/**
 * Replays a script given as JSON. A script that fails its claim still yields
 * a certificate; only unreadable scripts return an error.
 *
 * # Safety
 * `json` must be a valid C string; `out` must be writable.
 */
enum TwistlabStatus twistlab_verify_script(const char *json, struct TwistlabCertificate **out);

/**
 * # Safety
 * `c` must be null or a handle from `twistlab_verify_script`, not yet freed.
 */
void twistlab_certificate_free(struct TwistlabCertificate *c);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TwistlabStatus twistlab_certificate_verified(const struct TwistlabCertificate *c, bool *out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TwistlabStatus twistlab_certificate_cost(const struct TwistlabCertificate *c, uint32_t *out);

/**
 * Full certificate as JSON; free with `twistlab_string_free`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TwistlabStatus twistlab_certificate_json(const struct TwistlabCertificate *c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWISTLAB_H */
