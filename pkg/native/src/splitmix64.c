/* splitmix64: Weyl sequence with the standard two-multiply finalizer.
 * Also used as the seed expander for multi-word generators. */

#include "crand_internal.h"

uint64_t crand_splitmix64_step(uint64_t *s)
{
    uint64_t z = (s[0] += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void crand_splitmix64_expand(const uint64_t *seed, uint64_t *state)
{
    state[0] = seed[0];
}
