/* Minimal consumer of the holorect C API.
 *
 * Build against the shared library:
 *   cargo build -p holorect-ffi
 *   cc demo.c -I../include -L../../../target/debug -lholorect_ffi -lm -o demo
 *   LD_LIBRARY_PATH=../../../target/debug ./demo
 */
#include <inttypes.h>
#include <stdio.h>

#include "holorect.h"

int main(void) {
    HrFunction *f = NULL;
    HrStatus st = hr_fn_parse("1/z", &f);
    if (st != HR_STATUS_OK) {
        fprintf(stderr, "parse failed: %s\n", hr_status_name(st));
        return 1;
    }

    HrRect square = {-1.0, 1.0, -1.0, 1.0};
    HrIntegral out;
    st = hr_rectangle_integral(f, square, NULL, &out);
    hr_fn_free(f);
    if (st != HR_STATUS_OK) {
        fprintf(stderr, "integral failed: %s\n", hr_status_name(st));
        return 1;
    }
    printf("integral of 1/z = %.12g + %.12g i (k = %zu)\n", out.value.re,
           out.value.im, out.partitions_used);

    HrFunction *g = NULL;
    if (hr_fn_parse("z^2 - 1", &g) != HR_STATUS_OK) {
        return 1;
    }
    HrRect big = {-2.0, 2.0, -2.0, 2.0};
    HrComplex origin = {0.0, 0.0};
    int64_t count = 0;
    st = hr_count_preimages(g, big, origin, NULL, &count);
    hr_fn_free(g);
    if (st != HR_STATUS_OK) {
        fprintf(stderr, "count failed: %s\n", hr_status_name(st));
        return 1;
    }
    printf("preimages of 0 under z^2-1 = %" PRId64 "\n", count);

    /* sanity gates so the exit code is meaningful */
    double tau = 6.283185307179586;
    if (out.value.im < tau - 1e-8 || out.value.im > tau + 1e-8) {
        return 2;
    }
    if (count != 2) {
        return 3;
    }
    return 0;
}
