#include <stdio.h>
#include <string.h>
#include "fullex.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    FullexGraph *g = NULL;
    CHECK(fullex_tube_new(2, &g) == FULLEX_STATUS_OK);
    CHECK(fullex_graph_order(g) == 20);

    size_t p4, p5, p6;
    CHECK(fullex_face_counts(g, &p4, &p5, &p6) == FULLEX_STATUS_OK);
    CHECK(p4 == 6 && p5 == 0 && p6 == 6);

    bool ext = true;
    size_t w[4];
    CHECK(fullex_is_k_extendable(g, 2, &ext, w) == FULLEX_STATUS_OK);
    CHECK(!ext);

    size_t layers = 0, k = 0;
    CHECK(fullex_tube_layers(g, &layers) == FULLEX_STATUS_OK && layers == 2);
    CHECK(fullex_extendability(g, &k) == FULLEX_STATUS_OK && k == 1);

    size_t len = 0;
    CHECK(fullex_canonical_code(g, NULL, 0, &len) == FULLEX_STATUS_BUFFER_TOO_SMALL);
    CHECK(len > 20);

    CHECK(fullex_tube_new(0, &g) == FULLEX_STATUS_INVALID_INPUT);
    CHECK(strcmp(fullex_status_message(FULLEX_STATUS_OK), "ok") == 0);
    fullex_graph_free(g);
    puts("ok");
    return 0;
}
