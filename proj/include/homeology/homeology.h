/* C interface to the homeology library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Every function that can fail returns an hml_status and leaves
 * a message for hml_last_error() on the calling thread. Strings returned
 * through char** out-parameters are allocated by the library and released with
 * hml_string_free(). Complexes, blocks, maps and results travel as JSON text.
 */
#ifndef HOMEOLOGY_H
#define HOMEOLOGY_H

#include <stdint.h>

#if defined(_WIN32)
#define HML_API __declspec(dllexport)
#else
#define HML_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hml_status {
    HML_OK = 0,
    HML_ERR_INVALID_INPUT = 1,
    HML_ERR_PARSE = 2,
    HML_ERR_NOT_IN_COMPLEX = 3,
    HML_ERR_LABEL_COLLISION = 4,
    HML_ERR_BUDGET = 5,
    HML_ERR_HYPOTHESIS = 6,
    HML_ERR_CONTAINMENT = 7,
    HML_ERR_NOT_SUBCOMPLEX = 8,
    HML_ERR_NOT_PURE = 9,
    HML_ERR_NON_ORIENTABLE = 10,
    HML_ERR_MISSING_CHAIN_SIMPLEX = 11,
    HML_ERR_PARTITION = 12,
    HML_ERR_HOMOLOGY = 13,
    HML_ERR_DEGENERATE_MAP = 14,
    HML_ERR_INTERNAL = 15,
    HML_ERR_NULL_ARGUMENT = 16
} hml_status;

typedef enum hml_format { HML_FORMAT_JSON = 0, HML_FORMAT_MARKDOWN = 1 } hml_format;

typedef struct hml_complex hml_complex;

HML_API const char* hml_version(void);
/* Message of the last failure on this thread, "" if none. */
HML_API const char* hml_last_error(void);
HML_API const char* hml_status_name(hml_status status);
HML_API void hml_string_free(char* s);

/* {"vertices": [...], "facets": [[...], ...]} */
HML_API hml_status hml_complex_from_json(const char* json, hml_complex** out);
HML_API hml_status hml_complex_to_json(const hml_complex* k, char** out);
/* name: point, simplex, boundary, path, cycle, torus, sphere0, cylinder, moebius, rp2. */
HML_API hml_status hml_complex_shape(const char* name, int n, hml_complex** out);
HML_API hml_status hml_complex_random(int vertices, int dim, double density, uint64_t seed, hml_complex** out);
HML_API void hml_complex_free(hml_complex* k);
HML_API int hml_complex_dim(const hml_complex* k);
HML_API long hml_complex_num_faces(const hml_complex* k);
HML_API long hml_complex_euler(const hml_complex* k);

/* what: homology, cohomology, homeology, cohomeology, page, e-infinity, total, links.
 * coeffs: "z", "q" or "zp:<prime>". page applies to "page" (r >= 1), and to "links"
 * (1 or 2). "page" and "e-infinity" use the cohomeology filtration unless
 * homological is nonzero. */
HML_API hml_status hml_compute(const hml_complex* k, const char* what, const char* coeffs, int reduced,
                               int homological, int page, hml_format format, char** out);

/* simplex_json: array of labels; label NULL picks a fresh "w<k>". */
HML_API hml_status hml_subdivide(const hml_complex* k, const char* simplex_json, const char* label,
                                 hml_complex** out);
/* count seeded subdivisions at uniformly chosen faces of dimension >= 1. */
HML_API hml_status hml_subdivide_random(const hml_complex* k, int count, uint64_t seed, hml_complex** out);
HML_API hml_status hml_product(const hml_complex* a, const hml_complex* b, hml_complex** out);
HML_API hml_status hml_join(const hml_complex* a, const hml_complex* b, hml_complex** out);
HML_API hml_status hml_disjoint_union(const hml_complex* a, const hml_complex* b, hml_complex** out);
/* identification_json: {"vertex_map": {"<L label>": "<K label>", ...}} */
HML_API hml_status hml_glue(const hml_complex* k, const hml_complex* l, const char* identification_json,
                            hml_complex** out);

/* Report JSON {"pass", "steps", "log", "failure"}; *passed is 1 or 0. */
HML_API hml_status hml_verify_invariance(const hml_complex* k, int count, uint64_t seed, const char* coeffs,
                                         long face_budget, char** report, int* passed);
/* check: euler, components, kunneth-join, kunneth-product, glue. b is required for the
 * two-complex checks; extra_json is the identification for glue, otherwise NULL. */
HML_API hml_status hml_check(const char* check, const hml_complex* a, const hml_complex* b, const char* extra_json,
                             long face_budget, char** report, int* passed);

/* blocks_json: {"blocks": [{"faces": [[...]], "positive": [...]}]}. The report lists the
 * blocks by dimension with their boundaries. */
HML_API hml_status hml_blocks_validate(const hml_complex* k, const char* blocks_json, char** report);
/* what: cohomeology, homeology, chain (block boundary matrices). */
HML_API hml_status hml_blocks_compute(const hml_complex* k, const char* blocks_json, const char* what,
                                      const char* coeffs, int reduced, hml_format format, char** out);
/* {"complex": ..., "blocks": ...} for the product or subdivision block complexes. */
HML_API hml_status hml_blocks_product(const hml_complex* a, const hml_complex* b, char** out);
HML_API hml_status hml_blocks_subdivision(const hml_complex* k, const char* simplex_json, const char* label,
                                          char** out);

/* Induced maps on E_2 for a non-degenerate simplicial map {"vertex_map": {...}}. */
HML_API hml_status hml_induced(const hml_complex* source, const hml_complex* target, const char* map_json,
                               const char* coeffs, int reduced, int homological, char** out);

#ifdef __cplusplus
}
#endif

#endif
