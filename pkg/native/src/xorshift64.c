/* Marsaglia xorshift, 64-bit state, shift triple (13, 7, 17). */

#include "crand_internal.h"

uint64_t crand_xorshift64_step(uint64_t *s)
{
    uint64_t x = s[0];
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    s[0] = x;
    return x;
}

void crand_xorshift64_expand(const uint64_t *seed, uint64_t *state)
{
    state[0] = seed[0];
}

int crand_xorshift64_check(const uint64_t *state)
{
    return state[0] != 0;
}
