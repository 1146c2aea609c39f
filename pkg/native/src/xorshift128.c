/* Marsaglia xor128: four 32-bit lanes, shifts (11, 8, 19).
 * Lanes (x, y, z, w) are packed as s[0] = x | y<<32, s[1] = z | w<<32. */

#include "crand_internal.h"

uint64_t crand_xorshift128_step(uint64_t *s)
{
    uint32_t x = (uint32_t)s[0];
    uint32_t y = (uint32_t)(s[0] >> 32);
    uint32_t z = (uint32_t)s[1];
    uint32_t w = (uint32_t)(s[1] >> 32);
    uint32_t t = x ^ (x << 11);
    t ^= t >> 8;
    x = y;
    y = z;
    z = w;
    w = (w ^ (w >> 19)) ^ t;
    s[0] = (uint64_t)x | ((uint64_t)y << 32);
    s[1] = (uint64_t)z | ((uint64_t)w << 32);
    return w;
}

void crand_xorshift128_expand(const uint64_t *seed, uint64_t *state)
{
    state[0] = seed[0];
    state[1] = seed[1];
}

int crand_xorshift128_check(const uint64_t *state)
{
    return (state[0] | state[1]) != 0;
}
