/* Build the library first (cargo build -p sqcolor-ffi), then:
 *   cc -Icrates/ffi/include crates/ffi/examples/smoke.c \
 *      target/debug/libsqcolor_ffi.a -lpthread -ldl -lm -o smoke
 */
#include <stdio.h>
#include <stdlib.h>
#include "sqcolor.h"

int main(void) {
    SqGraph *g = NULL;
    SqStatus st = sq_graph_named("figure2", &g);
    if (st != SQ_STATUS_OK) {
        fprintf(stderr, "%s: %s\n", sq_status_name(st), sq_last_error());
        return 1;
    }
    int64_t num, den;
    sq_mad(g, &num, &den);

    SqGraph *sq = NULL;
    sq_graph_square(g, &sq);
    size_t lower, upper;
    st = sq_exact_chromatic(sq, 0, &lower, &upper);
    printf("mad %lld/%lld, chi(G^2) in [%zu, %zu] (%s)\n",
           (long long)num, (long long)den, lower, upper, sq_status_name(st));

    SqGraph *bad = NULL;
    st = sq_graph_parse("n 2\n0 9\n", &bad);
    printf("bad input: %s: %s\n", sq_status_name(st), sq_last_error());

    sq_graph_free(sq);
    sq_graph_free(g);
    return 0;
}
