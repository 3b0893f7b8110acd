#include <stdio.h>
#include <string.h>

#include "sqfree_lab.h"

#define CHECK(expr)                                                   \
    do {                                                              \
        SqfStatus s_ = (expr);                                        \
        if (s_ != SQF_STATUS_OK) {                                    \
            fprintf(stderr, "%s -> %d: %s\n", #expr, (int)s_,         \
                    sqf_last_error_message());                        \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    const char *text = "vertices: 6\n1 2 3\n1 4 5\n3 4 6\n";
    SqfComplex *c = NULL;
    CHECK(sqf_complex_parse(text, &c));

    size_t dims[8];
    size_t len = 0;
    CHECK(sqf_complex_homology(c, 0, dims, 8, &len));
    printf("homology");
    for (size_t i = 0; i < len; i++) printf(" %zu", dims[i]);
    printf("\n");

    bool ccm = false;
    int32_t witness = 0;
    CHECK(sqf_complex_is_ccm(c, 0, &ccm, &witness));
    printf("ccm %d witness %d\n", ccm, witness);

    SqfLyubeznikTable *t = NULL;
    CHECK(sqf_lyubeznik_table(c, 2, &t));
    size_t d = 0, l33 = 0;
    CHECK(sqf_lyubeznik_table_dimension(t, &d));
    CHECK(sqf_lyubeznik_table_get(t, 3, 3, &l33));
    printf("d %zu lambda33 %zu\n", d, l33);
    sqf_lyubeznik_table_free(t);
    sqf_complex_free(c);

    if (sqf_complex_parse("vertices: 1\n2\n", &c) != SQF_STATUS_PARSE) return 2;

    SqfIdeal *ideal = NULL;
    CHECK(sqf_ideal_parse("vars: 2\nx1 + x2\nx1 + 4*x2\n", &ideal));
    char *json = NULL;
    CHECK(sqf_ideal_initial_ideal_json(ideal, 3, SQF_ORDER_DEG_REV_LEX, &json));
    printf("initial %s\n", json);
    sqf_string_free(json);
    sqf_ideal_free(ideal);
    return 0;
}
