/* KISS99: multiply-with-carry pair (36969, 18000), shift register
 * (13, 17, 5) and congruential (69069, 12345), combined as
 * (MWC ^ CONG) + SHR3. State word order is (z, w, jsr, jcong). */

#include "crand_internal.h"

uint64_t crand_kiss_step(uint64_t *s)
{
    uint32_t z = (uint32_t)s[0];
    uint32_t w = (uint32_t)s[1];
    uint32_t jsr = (uint32_t)s[2];
    uint32_t jcong = (uint32_t)s[3];
    uint32_t mwc;

    z = 36969u * (z & 65535u) + (z >> 16);
    w = 18000u * (w & 65535u) + (w >> 16);
    mwc = (z << 16) + w;
    jcong = 69069u * jcong + 12345u;
    jsr ^= jsr << 13;
    jsr ^= jsr >> 17;
    jsr ^= jsr << 5;

    s[0] = z;
    s[1] = w;
    s[2] = jsr;
    s[3] = jcong;
    return (mwc ^ jcong) + jsr;
}

void crand_kiss_expand(const uint64_t *seed, uint64_t *state)
{
    int i;
    for (i = 0; i < 4; ++i)
        state[i] = seed[i] & 0xFFFFFFFFu;
}
