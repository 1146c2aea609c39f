/* Boundary demonstration functions for exercising foreign-function call
 * patterns: by-value scalar, by-reference scalar, array plus length. */

#include "crand.h"

uint64_t uint64_var(uint64_t var)
{
    uint64_t i = 9223372036854775807llu;
    (void)var;
    return i;
}

void change_var(double *var)
{
    if (var != 0)
        *var = 2.0;
}

double avg_value(int64_t array[], size_t len)
{
    double avg = 0.0;
    size_t i;
    if (array == 0 || len == 0)
        return 0.0;
    for (i = 0; i < len; ++i) {
        avg += (double)array[i] / (double)len;
        array[i] = 0;
    }
    return avg;
}
