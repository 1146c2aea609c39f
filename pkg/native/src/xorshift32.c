/* Marsaglia xorshift, 32-bit state, shift triple (13, 17, 5). */

#include "crand_internal.h"

uint64_t crand_xorshift32_step(uint64_t *s)
{
    uint32_t x = (uint32_t)s[0];
    x ^= x << 13;
    x ^= x >> 17;
    x ^= x << 5;
    s[0] = x;
    return x;
}

void crand_xorshift32_expand(const uint64_t *seed, uint64_t *state)
{
    state[0] = seed[0] & 0xFFFFFFFFu;
}

int crand_xorshift32_check(const uint64_t *state)
{
    return (state[0] & 0xFFFFFFFFu) != 0;
}
