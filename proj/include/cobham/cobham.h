/*
 * C interface to the cobham library: sets of natural numbers recognized by
 * automata over base-p digits, their length-set profiles, interval witnesses,
 * the syndeticity decision and cross-base refutation certificates.
 *
 * Conventions:
 *  - Every fallible call returns a cobham_status; outputs are written only on
 *    COBHAM_OK. cobham_last_error() describes the most recent failure on the
 *    calling thread.
 *  - Arbitrary-size integers cross the boundary as NUL-terminated decimal
 *    strings. Strings returned by the library are released with
 *    cobham_string_free, result structs with their *_release function.
 *  - cobham_set handles are immutable; concurrent reads are safe.
 */
#ifndef COBHAM_COBHAM_H
#define COBHAM_COBHAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COBHAM_BUILDING_LIBRARY)
#    define COBHAM_API __declspec(dllexport)
#  else
#    define COBHAM_API __declspec(dllimport)
#  endif
#else
#  define COBHAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cobham_status {
  COBHAM_OK = 0,
  COBHAM_INVALID_ARGUMENT = 1,
  COBHAM_PARSE_ERROR = 2,
  COBHAM_VALIDATION_ERROR = 3,
  COBHAM_LEADING_ZERO = 4,
  COBHAM_PRECONDITION = 5,
  COBHAM_NO_WITNESS = 6,
  COBHAM_CAP_EXCEEDED = 7,
  COBHAM_INSUFFICIENT_DATA = 8,
  COBHAM_IO_ERROR = 9,
  COBHAM_INTERNAL_ERROR = 10
} cobham_status;

/* Short kebab-case name, e.g. "cap-exceeded". Never NULL. */
COBHAM_API const char* cobham_status_name(cobham_status status);
/* Message of the last failing call on this thread ("" if none). */
COBHAM_API const char* cobham_last_error(void);

COBHAM_API void cobham_string_free(char* text);
COBHAM_API void cobham_strings_free(char** values, size_t count);

/* ---- numeration ------------------------------------------------------- */

/* Canonical digits of n (decimal) in `base`, most significant first; 0 gives
 * an empty array (*digits may be NULL). Release with cobham_digits_free. */
COBHAM_API cobham_status cobham_encode(const char* n, uint32_t base, uint32_t** digits,
                                       size_t* length);
COBHAM_API void cobham_digits_free(uint32_t* digits);
COBHAM_API cobham_status cobham_decode(const uint32_t* digits, size_t length, uint32_t base,
                                       char** n);

/* *independent = 1 or 0; when 0, p^k == q^l with the smallest such k, l. */
COBHAM_API cobham_status cobham_mult_independent(uint64_t p, uint64_t q, int* independent,
                                                 uint64_t* k, uint64_t* l);

typedef struct cobham_kronecker_query {
  const char* m;
  const char* n;
  uint64_t a, b, c, d;
  uint64_t p, q;
} cobham_kronecker_query;

/* Least l, then k, with n q^(c+dl) <= m p^(a+bk) < (m+1) p^(a+bk) <= (n+1) q^(c+dl).
 * cap == 0 selects the default (10000). */
COBHAM_API cobham_status cobham_kronecker_witness(const cobham_kronecker_query* query,
                                                  uint64_t cap, uint64_t* k, uint64_t* l);
COBHAM_API cobham_status cobham_kronecker_verify(const cobham_kronecker_query* query,
                                                 uint64_t k, uint64_t l, int* ok);

/* ---- sets ------------------------------------------------------------- */

typedef struct cobham_set cobham_set;

/* strict != 0: reject unknown fields and leading-zero acceptance. */
COBHAM_API cobham_status cobham_set_read(const char* path, int strict, cobham_set** out);
COBHAM_API cobham_status cobham_set_parse(const char* text, int strict, cobham_set** out);
COBHAM_API cobham_status cobham_set_write(const cobham_set* set, const char* path);
COBHAM_API cobham_status cobham_set_serialize(const cobham_set* set, char** text);
COBHAM_API cobham_status cobham_set_example1(cobham_set** out);
COBHAM_API void cobham_set_free(cobham_set* set);

COBHAM_API uint32_t cobham_set_base(const cobham_set* set);
COBHAM_API uint32_t cobham_set_state_count(const cobham_set* set);

COBHAM_API cobham_status cobham_set_member(const cobham_set* set, const char* n, int* out);
/* First `limit` elements, ascending. */
COBHAM_API cobham_status cobham_set_enumerate(const cobham_set* set, size_t limit,
                                              char*** values, size_t* count);
COBHAM_API cobham_status cobham_set_trim(const cobham_set* set, cobham_set** out);
COBHAM_API cobham_status cobham_set_minimize(const cobham_set* set, cobham_set** out);
COBHAM_API cobham_status cobham_set_equivalent(const cobham_set* lhs, const cobham_set* rhs,
                                               int* out);
COBHAM_API cobham_status cobham_set_right_dense(const cobham_set* set, int* out);

/* ---- length profiles --------------------------------------------------- */

typedef struct cobham_profile {
  uint64_t preperiod;
  uint64_t period;
  uint8_t* head_bits;  /* preperiod entries, each 0 or 1 */
  uint8_t* cycle_bits; /* period entries */
  uint64_t first_repeat_start;
  uint64_t first_repeat_end;
  int cofinite;                /* 1 if every cycle bit is 1 */
  uint64_t cofinite_threshold; /* meaningful when cofinite */
} cobham_profile;

/* Profile of the length set of `state` in the set's automaton as stored. */
COBHAM_API cobham_status cobham_set_profile(const cobham_set* set, uint32_t state,
                                            cobham_profile* out);
COBHAM_API void cobham_profile_release(cobham_profile* profile);

/* ---- witnesses --------------------------------------------------------- */

typedef struct cobham_options {
  uint64_t k_check;     /* verification depth */
  uint64_t cap;         /* search caps */
  uint64_t profile_cap; /* subset-sequence iterations */
} cobham_options;

COBHAM_API cobham_options cobham_options_default(void);

typedef enum cobham_interval_kind {
  COBHAM_INTERVAL_NONEMPTY = 0,
  COBHAM_INTERVAL_EMPTY = 1
} cobham_interval_kind;

/* Intervals [m base^(a+bk), (m+1) base^(a+bk)) for k >= 0. `state` indexes
 * the set's normal form (trimmed, minimized, completed with a sink). */
typedef struct cobham_interval_witness {
  uint32_t base;
  char* m;
  uint64_t a;
  uint64_t b;
  uint32_t state;
  cobham_interval_kind kind;
} cobham_interval_witness;

COBHAM_API void cobham_interval_witness_release(cobham_interval_witness* witness);

/* m_min NULL means 1. */
COBHAM_API cobham_status cobham_witness_nonempty(const cobham_set* set, const char* m_min,
                                                 const cobham_options* options,
                                                 cobham_interval_witness* out);
/* *found = 0 when every qualifying state has a cofinite length set. */
COBHAM_API cobham_status cobham_witness_empty(const cobham_set* set,
                                              const cobham_options* options, int* found,
                                              cobham_interval_witness* out);
COBHAM_API cobham_status cobham_witness_verify(const cobham_set* set,
                                               const cobham_interval_witness* witness,
                                               uint64_t k_check, int* ok);

typedef enum cobham_verdict {
  COBHAM_FINITE = 0,
  COBHAM_NOT_SYNDETIC = 1,
  COBHAM_SYNDETIC = 2
} cobham_verdict;

typedef struct cobham_syndetic_result {
  cobham_verdict verdict;
  cobham_interval_witness witness; /* COBHAM_NOT_SYNDETIC */
  /* COBHAM_SYNDETIC: every window of length `bound` = 2 base^C meets X. */
  uint64_t C;
  char* bound;
  size_t threshold_count;
  uint32_t* threshold_states;
  uint64_t* thresholds;
} cobham_syndetic_result;

COBHAM_API cobham_status cobham_syndetic_decide(const cobham_set* set,
                                                const cobham_options* options,
                                                cobham_syndetic_result* out);
COBHAM_API void cobham_syndetic_result_release(cobham_syndetic_result* result);

typedef struct cobham_certificate {
  cobham_interval_witness base_p_witness;
  cobham_interval_witness base_q_witness;
  uint64_t K;
  uint64_t L;
  char* element;
  /* Nested intervals at k = K and l = L, for convenience. */
  char* p_low;
  char* p_high;
  char* q_low;
  char* q_high;
} cobham_certificate;

/* *found = 0: no refutation by this route, which does not imply equality. */
COBHAM_API cobham_status cobham_cross_base_refute(const cobham_set* set_p,
                                                  const cobham_set* set_q,
                                                  const cobham_options* options, int* found,
                                                  cobham_certificate* out);
COBHAM_API cobham_status cobham_certificate_verify(const cobham_set* set_p,
                                                   const cobham_set* set_q,
                                                   const cobham_certificate* certificate,
                                                   int* ok);
COBHAM_API void cobham_certificate_release(cobham_certificate* certificate);

typedef struct cobham_gap_report {
  char* max_gap;
  size_t element_count;
  size_t position_count;
  char** gap_starts;
  char** gap_ends;
} cobham_gap_report;

COBHAM_API cobham_status cobham_gap_scan(const cobham_set* set, const char* horizon,
                                         cobham_gap_report* out);
COBHAM_API void cobham_gap_report_release(cobham_gap_report* report);

#ifdef __cplusplus
}
#endif

#endif /* COBHAM_COBHAM_H */
