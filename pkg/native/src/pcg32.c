/* PCG-XSH-RR 64/32. State s[0] advances by an LCG with the odd stream
 * increment held in s[1]; the user seeds with (initstate, initseq). */

#include "crand_internal.h"

#define PCG_MULT 6364136223846793005ULL

uint64_t crand_pcg32_step(uint64_t *s)
{
    uint64_t old = s[0];
    uint32_t xorshifted, rot;
    s[0] = old * PCG_MULT + s[1];
    xorshifted = (uint32_t)(((old >> 18) ^ old) >> 27);
    rot = (uint32_t)(old >> 59);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

void crand_pcg32_expand(const uint64_t *seed, uint64_t *state)
{
    uint64_t inc = (seed[1] << 1) | 1u;
    uint64_t st = inc;            /* one LCG advance from zero */
    st += seed[0];
    st = st * PCG_MULT + inc;
    state[0] = st;
    state[1] = inc;
}
