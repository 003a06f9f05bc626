/* C interface to the ksseq spectral-sequence engine.
 *
 * Objects are opaque handles released with the matching *_free function. Every
 * function returning ksseq_status leaves a message for ksseq_last_error() on failure;
 * the message is thread-local and valid until the next failing call on that thread.
 * Strings returned through char** are heap-allocated and released with
 * ksseq_string_free(). */
#ifndef KSSEQ_KSSEQ_H
#define KSSEQ_KSSEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(KSSEQ_BUILDING_LIBRARY)
#define KSSEQ_API __attribute__((visibility("default")))
#else
#define KSSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ksseq_status {
    KSSEQ_OK = 0,
    KSSEQ_ERR_INVALID_ARGUMENT = 1, /* null pointer, out-of-range parameter */
    KSSEQ_ERR_PARSE = 2,            /* malformed model, report, form or rational */
    KSSEQ_ERR_INVALID_MODEL = 3,    /* filtered complex violating d∘d = 0 or d(F^p) ⊆ F^p */
    KSSEQ_ERR_HYPOTHESIS = 4,       /* theorem hypotheses fail (e.g. no hard Lefschetz) */
    KSSEQ_ERR_INCONSISTENT = 5,     /* Betti input not realizable; see ksseq_last_error_degree */
    KSSEQ_ERR_NOT_FOUND = 6,        /* unknown preset */
    KSSEQ_ERR_IO = 7,
    KSSEQ_ERR_INTERNAL = 8
} ksseq_status;

typedef struct ksseq_model ksseq_model;
typedef struct ksseq_report ksseq_report;

KSSEQ_API const char* ksseq_version(void);
KSSEQ_API const char* ksseq_status_name(ksseq_status status);
KSSEQ_API const char* ksseq_last_error(void);
/* Degree of the last KSSEQ_ERR_INCONSISTENT failure, -1 if none. */
KSSEQ_API int ksseq_last_error_degree(void);
KSSEQ_API void ksseq_string_free(char* s);

/* Models */
KSSEQ_API ksseq_status ksseq_model_parse(const char* text, ksseq_model** out);
KSSEQ_API ksseq_status ksseq_model_load(const char* path, ksseq_model** out);
KSSEQ_API ksseq_status ksseq_model_preset(const char* name, ksseq_model** out);
/* type is "S", "C" or "mixed". */
KSSEQ_API ksseq_status ksseq_model_generate(uint64_t seed, unsigned n, unsigned s,
                                            unsigned max_primitive_dim, const char* type,
                                            ksseq_model** out);
/* Replaces the lambdas of an invariant model; each entry is "num/den" or "num". */
KSSEQ_API ksseq_status ksseq_model_set_lambdas(ksseq_model* model, const char* const* lambdas,
                                               size_t count);
KSSEQ_API ksseq_status ksseq_model_to_string(const ksseq_model* model, char** out);
KSSEQ_API void ksseq_model_free(ksseq_model* model);

KSSEQ_API size_t ksseq_preset_count(void);
/* Static string, or NULL when index is out of range. */
KSSEQ_API const char* ksseq_preset_name(size_t index);

/* Analysis and reports */
KSSEQ_API ksseq_status ksseq_analyze(const ksseq_model* model, int record_timing, ksseq_report** out);
/* 1 when no applicable verification failed, 0 otherwise (or for NULL). */
KSSEQ_API int ksseq_report_passed(const ksseq_report* report);
KSSEQ_API unsigned ksseq_report_stable_at(const ksseq_report* report);
/* E_infinity totals per degree. Writes min(count, capacity) values and stores the full
 * count in *count. */
KSSEQ_API ksseq_status ksseq_report_betti(const ksseq_report* report, long long* out, size_t capacity,
                                          size_t* count);
KSSEQ_API ksseq_status ksseq_report_to_json(const ksseq_report* report, char** out);
KSSEQ_API ksseq_status ksseq_report_to_text(const ksseq_report* report, char** out);
KSSEQ_API ksseq_status ksseq_report_parse_json(const char* text, ksseq_report** out);
/* 1 when both reports hold the same data. */
KSSEQ_API int ksseq_report_equal(const ksseq_report* a, const ksseq_report* b);
KSSEQ_API void ksseq_report_free(ksseq_report* report);

/* Betti recursions. betti has 2n+s+1 entries.
 * primitive_out receives n+1 values, basic_out 2n+1 values. */
KSSEQ_API ksseq_status ksseq_primitive_betti(const long long* betti, size_t count, unsigned s, unsigned n,
                                             long long* primitive_out, long long* basic_out);
/* basic_out receives count - s values. */
KSSEQ_API ksseq_status ksseq_basic_betti(const long long* betti, size_t count, unsigned s,
                                         long long* basic_out);

/* Exhaustive check of the full Hodge star against the transverse star and the eta sign
 * rule. *counterexample is NULL when the check passes (may be NULL to ignore). */
KSSEQ_API ksseq_status ksseq_star_check(unsigned n, unsigned s, size_t* cases, int* passed,
                                        char** counterexample);

/* Lefschetz decomposition of a transverse form over R^{2n}, e.g. "e1^e2 - 1/2 e3^e4".
 * Writes one line per component: "L^i (primitive degree d): beta". */
KSSEQ_API ksseq_status ksseq_decompose(unsigned n, const char* form, char** out);

#ifdef __cplusplus
}
#endif

#endif
