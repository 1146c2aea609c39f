/* Public ABI: kind dispatch, validation, buffer filling, normalization. */

#include "crand.h"

#include "crand_internal.h"

typedef uint64_t (*step_fn)(uint64_t *state);
typedef void (*expand_fn)(const uint64_t *seed, uint64_t *state);
typedef int (*check_fn)(const uint64_t *state);

struct kind_info {
    step_fn step;
    expand_fn expand;
    check_fn check; /* NULL: any state of the right length is usable */
    int32_t seed_words;
    int32_t state_words;
    int32_t output_bits;
};

static const struct kind_info KINDS[] = {
    /* CRAND_XORSHIFT32 */
    {crand_xorshift32_step, crand_xorshift32_expand, crand_xorshift32_check,
     1, 1, 32},
    /* CRAND_XORSHIFT64 */
    {crand_xorshift64_step, crand_xorshift64_expand, crand_xorshift64_check,
     1, 1, 64},
    /* CRAND_XORSHIFT128 */
    {crand_xorshift128_step, crand_xorshift128_expand, crand_xorshift128_check,
     2, 2, 32},
    /* CRAND_XORSHIFT128PLUS */
    {crand_xorshift128plus_step, crand_xorshift128plus_expand,
     crand_xorshift128plus_check, 2, 2, 64},
    /* CRAND_PCG32 */
    {crand_pcg32_step, crand_pcg32_expand, 0, 2, 2, 32},
    /* CRAND_KISS */
    {crand_kiss_step, crand_kiss_expand, 0, 4, 4, 32},
    /* CRAND_SPLITMIX64 */
    {crand_splitmix64_step, crand_splitmix64_expand, 0, 1, 1, 64},
    /* CRAND_MT19937_64 */
    {crand_mt19937_64_step, crand_mt19937_64_expand, crand_mt19937_64_check,
     1, CRAND_MT_N + 1, 64},
};

#define KIND_COUNT ((int32_t)(sizeof KINDS / sizeof KINDS[0]))

int32_t crand_kind_count(void)
{
    return KIND_COUNT;
}

int32_t crand_seed_words(int32_t kind)
{
    if (kind < 0 || kind >= KIND_COUNT)
        return -1;
    return KINDS[kind].seed_words;
}

int32_t crand_state_words(int32_t kind)
{
    if (kind < 0 || kind >= KIND_COUNT)
        return -1;
    return KINDS[kind].state_words;
}

int32_t crand_init(int32_t kind, const uint64_t *seed, int32_t seed_len,
                   uint64_t *state, int32_t state_len)
{
    const struct kind_info *ki;
    if (kind < 0 || kind >= KIND_COUNT)
        return CRAND_BAD_KIND;
    ki = &KINDS[kind];
    if (seed == 0 || state == 0)
        return CRAND_NULL_ARGUMENT;
    if (seed_len != ki->seed_words || state_len != ki->state_words)
        return CRAND_BAD_SEED;
    ki->expand(seed, state);
    if (ki->check && !ki->check(state))
        return CRAND_BAD_SEED;
    return CRAND_OK;
}

static int32_t validate(const struct kind_info *ki, const uint64_t *state,
                        int32_t state_len, const void *out, uint64_t n)
{
    if (state == 0 || (out == 0 && n > 0))
        return CRAND_NULL_ARGUMENT;
    if (state_len != ki->state_words)
        return CRAND_BAD_SEED;
    if (ki->check && !ki->check(state))
        return CRAND_BAD_SEED;
    return CRAND_OK;
}

int32_t crand_fill(int32_t kind, uint64_t *state, int32_t state_len,
                   uint64_t *out, uint64_t n)
{
    const struct kind_info *ki;
    step_fn step;
    uint64_t i;
    int32_t status;

    if (kind < 0 || kind >= KIND_COUNT)
        return CRAND_BAD_KIND;
    ki = &KINDS[kind];
    status = validate(ki, state, state_len, out, n);
    if (status != CRAND_OK)
        return status;
    step = ki->step;
    for (i = 0; i < n; ++i)
        out[i] = step(state);
    return CRAND_OK;
}

int32_t crand_fill_unit(int32_t kind, uint64_t *state, int32_t state_len,
                        double *out, uint64_t n)
{
    const struct kind_info *ki;
    step_fn step;
    uint64_t i;
    int32_t status;

    if (kind < 0 || kind >= KIND_COUNT)
        return CRAND_BAD_KIND;
    ki = &KINDS[kind];
    status = validate(ki, state, state_len, out, n);
    if (status != CRAND_OK)
        return status;
    step = ki->step;
    if (ki->output_bits == 64) {
        for (i = 0; i < n; ++i)
            out[i] = (double)(step(state) >> 11) *
                     (1.0 / 9007199254740992.0); /* 2^-53 */
    } else {
        for (i = 0; i < n; ++i)
            out[i] = (double)step(state) *
                     (1.0 / 4294967296.0); /* 2^-32 */
    }
    return CRAND_OK;
}
