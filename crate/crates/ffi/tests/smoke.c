#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "divisor_lab.h"

#define CHECK(call)                                                          \
    do {                                                                     \
        DlStatus s_ = (call);                                                \
        if (s_ != DL_STATUS_OK) {                                            \
            fprintf(stderr, "%s -> %d: %s\n", #call, (int)s_, dl_last_error()); \
            return 1;                                                        \
        }                                                                    \
    } while (0)

int main(void) {
    DlRing *ring = NULL;
    DlIdeal *ideal = NULL, *d = NULL;
    char *text = NULL;
    size_t grade = 0;

    CHECK(dl_ring_new("QQ[x,y]", "grevlex", 0, &ring));
    CHECK(dl_ideal_parse(ring, "x^2, x*y", &ideal));
    CHECK(dl_ideal_divisorial(ideal, DL_ROUTE_EXT, &d, &grade));
    CHECK(dl_ideal_to_string(d, &text));
    printf("D = %s, grade %zu\n", text, grade);
    dl_string_free(text);

    if (dl_ideal_parse(ring, "x +", &ideal) != DL_STATUS_INPUT_ERROR) {
        return 1;
    }
    printf("error: %s\n", dl_last_error());

    dl_ideal_free(d);
    dl_ideal_free(ideal);
    dl_ring_free(ring);
    return 0;
}
