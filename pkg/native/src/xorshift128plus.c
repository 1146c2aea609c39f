/* Vigna xorshift128+: shifts (23, 17, 26), output = new s1 + s0. */

#include "crand_internal.h"

uint64_t crand_xorshift128plus_step(uint64_t *s)
{
    uint64_t s1 = s[0];
    const uint64_t s0 = s[1];
    s[0] = s0;
    s1 ^= s1 << 23;
    s1 ^= s0 ^ (s1 >> 17) ^ (s0 >> 26);
    s[1] = s1;
    return s1 + s0;
}

void crand_xorshift128plus_expand(const uint64_t *seed, uint64_t *state)
{
    state[0] = seed[0];
    state[1] = seed[1];
}

int crand_xorshift128plus_check(const uint64_t *state)
{
    return (state[0] | state[1]) != 0;
}
