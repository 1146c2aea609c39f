/*
 * crand: compact pseudorandom generator library with a stable C ABI.
 *
 * Every generator works on a caller-owned state array of unsigned 64-bit
 * words (32-bit generators keep their lanes in the low halves). The state
 * array is mutated in place on every call, so consecutive calls continue
 * the same sequence. The library itself holds no state and allocates
 * nothing; all entrypoints are reentrant.
 *
 * Exported symbols (complete list, checked by the test suite):
 *   crand_kind_count, crand_seed_words, crand_state_words,
 *   crand_init, crand_fill, crand_fill_unit,
 *   uint64_var, change_var, avg_value
 */

#ifndef CRAND_H
#define CRAND_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CRAND_API __declspec(dllexport)
#else
#define CRAND_API __attribute__((visibility("default")))
#endif

/* Status codes. Every generator entrypoint returns one of these; outputs
 * are valid only on CRAND_OK, and error paths never write to buffers. */
enum {
    CRAND_OK = 0,
    CRAND_BAD_KIND = 1,
    CRAND_BAD_SEED = 2,
    CRAND_NULL_ARGUMENT = 3
};

/* Generator identifiers, stable across releases. */
enum {
    CRAND_XORSHIFT32 = 0,
    CRAND_XORSHIFT64 = 1,
    CRAND_XORSHIFT128 = 2,
    CRAND_XORSHIFT128PLUS = 3,
    CRAND_PCG32 = 4,
    CRAND_KISS = 5,
    CRAND_SPLITMIX64 = 6,
    CRAND_MT19937_64 = 7
};

/* Number of defined generator kinds. */
CRAND_API int32_t crand_kind_count(void);

/* Seed words the user passes to crand_init for this kind.
 * Negative on an unknown kind. */
CRAND_API int32_t crand_seed_words(int32_t kind);

/* Length of the internal state array crand_fill expects for this kind
 * (equals crand_seed_words for every kind except mt19937_64, whose one
 * seed word expands to a 312-word vector plus one index word).
 * Negative on an unknown kind. */
CRAND_API int32_t crand_state_words(int32_t kind);

/* Build the internal state array from user seed words.
 * seed_len must equal crand_seed_words(kind) and state_len must equal
 * crand_state_words(kind). Rejects all-zero seeds of xorshift-family
 * kinds with CRAND_BAD_SEED. */
CRAND_API int32_t crand_init(int32_t kind, const uint64_t *seed,
                             int32_t seed_len, uint64_t *state,
                             int32_t state_len);

/* Fill out[0..n) with raw outputs, advancing the state in place.
 * 32-bit outputs are zero-extended. state_len must equal
 * crand_state_words(kind); the state is validated even when n is 0. */
CRAND_API int32_t crand_fill(int32_t kind, uint64_t *state, int32_t state_len,
                             uint64_t *out, uint64_t n);

/* As crand_fill, but each output is normalized into [0, 1):
 * 64-bit kinds map as (value >> 11) * 2^-53, 32-bit as value * 2^-32. */
CRAND_API int32_t crand_fill_unit(int32_t kind, uint64_t *state,
                                  int32_t state_len, double *out, uint64_t n);

/* Boundary demonstration functions. */

/* Returns 9223372036854775807 regardless of the argument. */
CRAND_API uint64_t uint64_var(uint64_t var);

/* Stores 2.0 through the pointer; no-op on NULL. */
CRAND_API void change_var(double *var);

/* Returns the arithmetic mean and zeroes every slot. len == 0 or NULL
 * returns 0.0 with no writes. */
CRAND_API double avg_value(int64_t array[], size_t len);

#ifdef __cplusplus
}
#endif

#endif /* CRAND_H */
