/* Internal per-algorithm entrypoints. Not installed; symbols stay hidden. */

#ifndef CRAND_INTERNAL_H
#define CRAND_INTERNAL_H

#include <stdint.h>

/* step: one output, state mutated in place.
 * expand: build internal state words from user seed words.
 * check: 1 if the state is usable, 0 if degenerate/corrupt. */

uint64_t crand_xorshift32_step(uint64_t *s);
void crand_xorshift32_expand(const uint64_t *seed, uint64_t *state);
int crand_xorshift32_check(const uint64_t *state);

uint64_t crand_xorshift64_step(uint64_t *s);
void crand_xorshift64_expand(const uint64_t *seed, uint64_t *state);
int crand_xorshift64_check(const uint64_t *state);

uint64_t crand_xorshift128_step(uint64_t *s);
void crand_xorshift128_expand(const uint64_t *seed, uint64_t *state);
int crand_xorshift128_check(const uint64_t *state);

uint64_t crand_xorshift128plus_step(uint64_t *s);
void crand_xorshift128plus_expand(const uint64_t *seed, uint64_t *state);
int crand_xorshift128plus_check(const uint64_t *state);

uint64_t crand_pcg32_step(uint64_t *s);
void crand_pcg32_expand(const uint64_t *seed, uint64_t *state);

uint64_t crand_kiss_step(uint64_t *s);
void crand_kiss_expand(const uint64_t *seed, uint64_t *state);

uint64_t crand_splitmix64_step(uint64_t *s);
void crand_splitmix64_expand(const uint64_t *seed, uint64_t *state);

#define CRAND_MT_N 312
uint64_t crand_mt19937_64_step(uint64_t *s);
void crand_mt19937_64_expand(const uint64_t *seed, uint64_t *state);
int crand_mt19937_64_check(const uint64_t *state);

#endif /* CRAND_INTERNAL_H */
