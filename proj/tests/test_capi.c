/* Compiles the public header as C and drives the shared library without C++. */
#include <stdio.h>
#include <string.h>

#include "homeology/homeology.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

int main(void) {
    hml_complex* k = NULL;
    char* out = NULL;
    int passed = 0;

    EXPECT(hml_complex_from_json("{\"vertices\": [\"a\",\"b\",\"c\"], \"facets\": [[\"a\",\"b\"],[\"b\",\"c\"],[\"a\",\"c\"]]}", &k) == HML_OK);
    EXPECT(hml_complex_dim(k) == 1);
    EXPECT(hml_complex_num_faces(k) == 6);
    EXPECT(hml_complex_euler(k) == 0);

    EXPECT(hml_compute(k, "cohomeology", "z", 0, 0, 2, HML_FORMAT_MARKDOWN, &out) == HML_OK);
    EXPECT(out != NULL && strstr(out, "| 0 | Z |") != NULL);
    hml_string_free(out);

    EXPECT(hml_verify_invariance(k, 3, 42, "z", 1000, &out, &passed) == HML_OK);
    EXPECT(passed == 1);
    hml_string_free(out);

    EXPECT(hml_compute(k, "cohomeology", "zp:6", 0, 0, 2, HML_FORMAT_JSON, &out) == HML_ERR_INVALID_INPUT);
    EXPECT(strlen(hml_last_error()) > 0);

    hml_complex* bad = NULL;
    EXPECT(hml_complex_from_json("{\"vertices\": [", &bad) == HML_ERR_PARSE);
    EXPECT(bad == NULL);
    EXPECT(strstr(hml_last_error(), "line 1") != NULL);
    EXPECT(hml_compute(NULL, "total", "z", 0, 0, 2, HML_FORMAT_JSON, &out) == HML_ERR_NULL_ARGUMENT);

    hml_complex_free(k);
    if (failures == 0) printf("C API OK\n");
    return failures == 0 ? 0 : 1;
}
