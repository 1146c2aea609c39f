/* 64-bit Mersenne Twister, standard parameters. The caller-visible state
 * is the 312-word vector followed by one index word; index CRAND_MT_N
 * means "twist pending", which is how a freshly expanded state starts. */

#include "crand_internal.h"

#define MT_N CRAND_MT_N
#define MT_M 156
#define MT_MATRIX_A 0xB5026F5AA96619E9ULL
#define MT_UPPER 0xFFFFFFFF80000000ULL
#define MT_LOWER 0x7FFFFFFFULL

static void twist(uint64_t *mt)
{
    int i;
    for (i = 0; i < MT_N; ++i) {
        uint64_t x = (mt[i] & MT_UPPER) | (mt[(i + 1) % MT_N] & MT_LOWER);
        uint64_t xa = x >> 1;
        if (x & 1u)
            xa ^= MT_MATRIX_A;
        mt[i] = mt[(i + MT_M) % MT_N] ^ xa;
    }
}

uint64_t crand_mt19937_64_step(uint64_t *s)
{
    uint64_t i = s[MT_N];
    uint64_t x;
    if (i >= MT_N) {
        twist(s);
        i = 0;
    }
    x = s[i];
    s[MT_N] = i + 1;
    x ^= (x >> 29) & 0x5555555555555555ULL;
    x ^= (x << 17) & 0x71D67FFFEDA60000ULL;
    x ^= (x << 37) & 0xFFF7EEE000000000ULL;
    x ^= x >> 43;
    return x;
}

void crand_mt19937_64_expand(const uint64_t *seed, uint64_t *state)
{
    int i;
    state[0] = seed[0];
    for (i = 1; i < MT_N; ++i)
        state[i] =
            6364136223846793005ULL * (state[i - 1] ^ (state[i - 1] >> 62)) +
            (uint64_t)i;
    state[MT_N] = MT_N;
}

int crand_mt19937_64_check(const uint64_t *state)
{
    return state[MT_N] <= MT_N;
}
