/* random: run any generator and print the resulting sequence.
 *
 * usage: random <generator> <count> [seed words...]
 *
 * Seed words default to 1, 2, 3, ... when omitted. Output is one decimal
 * value per line on stdout.
 */

#include <inttypes.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "crand.h"

static const char *NAMES[] = {
    "xorshift32", "xorshift64",  "xorshift128", "xorshift128plus",
    "pcg32",      "kiss",        "splitmix64",  "mt19937_64",
};

#define CHUNK 4096

static int kind_by_name(const char *name)
{
    int32_t i;
    for (i = 0; i < crand_kind_count(); ++i)
        if (strcmp(name, NAMES[i]) == 0)
            return i;
    return -1;
}

static void usage(void)
{
    int32_t i;
    fprintf(stderr, "usage: random <generator> <count> [seed words...]\n");
    fprintf(stderr, "generators:");
    for (i = 0; i < crand_kind_count(); ++i)
        fprintf(stderr, " %s", NAMES[i]);
    fprintf(stderr, "\n");
}

int main(int argc, char **argv)
{
    int32_t kind, seed_len, state_len, i;
    uint64_t count, done, n;
    uint64_t seed[4];
    uint64_t *state;
    uint64_t out[CHUNK];

    if (argc < 3) {
        usage();
        return 1;
    }
    kind = kind_by_name(argv[1]);
    if (kind < 0) {
        fprintf(stderr, "random: unknown generator '%s'\n", argv[1]);
        usage();
        return 1;
    }
    count = strtoull(argv[2], 0, 0);
    seed_len = crand_seed_words(kind);
    state_len = crand_state_words(kind);
    if (argc - 3 != 0 && argc - 3 != seed_len) {
        fprintf(stderr, "random: %s takes %" PRId32 " seed word(s)\n", argv[1],
                seed_len);
        return 1;
    }
    for (i = 0; i < seed_len; ++i)
        seed[i] = (argc - 3 > 0) ? strtoull(argv[3 + i], 0, 0)
                                 : (uint64_t)(i + 1);

    state = malloc((size_t)state_len * sizeof(uint64_t));
    if (state == 0) {
        fprintf(stderr, "random: out of memory\n");
        return 2;
    }
    if (crand_init(kind, seed, seed_len, state, state_len) != CRAND_OK) {
        fprintf(stderr, "random: bad seed for %s\n", argv[1]);
        free(state);
        return 1;
    }
    for (done = 0; done < count; done += n) {
        n = count - done;
        if (n > CHUNK)
            n = CHUNK;
        if (crand_fill(kind, state, state_len, out, n) != CRAND_OK) {
            fprintf(stderr, "random: generation failed\n");
            free(state);
            return 2;
        }
        for (i = 0; i < (int32_t)n; ++i)
            printf("%" PRIu64 "\n", out[i]);
    }
    free(state);
    return 0;
}
