#ifndef IHARA_IHARA_H
#define IHARA_IHARA_H

#include <stddef.h>
#include <stdint.h>

#ifndef IHARA_API
#if defined(_WIN32)
#if defined(ihara_EXPORTS)
#define IHARA_API __declspec(dllexport)
#else
#define IHARA_API __declspec(dllimport)
#endif
#else
#define IHARA_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ihara_graph ihara_graph;
typedef struct ihara_gog ihara_gog;
typedef struct ihara_covering ihara_covering;
typedef struct ihara_rep ihara_rep;

typedef enum ihara_status {
    IHARA_OK = 0,
    IHARA_INVALID_ARGUMENT,  /* null pointer, mismatched handles */
    IHARA_PARSE,
    IHARA_INVALID_INPUT,
    IHARA_DIMENSION,
    IHARA_NOT_EDGE_FREE,
    IHARA_NOT_INVERTIBLE,
    IHARA_DIVISION_BY_ZERO,
    IHARA_ROUNDING,
    IHARA_GUARD,  /* enumeration too large without allow_big */
    IHARA_VERIFICATION,
    IHARA_INTERNAL
} ihara_status;

typedef struct ihara_options {
    int json;              /* reports as JSON instead of text */
    unsigned euler_order;  /* 0 skips the Euler product check */
    unsigned max_len;      /* splitting table length bound */
    int allow_big;
} ihara_options;

IHARA_API const char* ihara_version(void);
IHARA_API const char* ihara_status_name(ihara_status status);
/* Message of the last failure on the calling thread; never null. */
IHARA_API const char* ihara_last_error(void);
/* Releases every string returned through a char** out parameter. */
IHARA_API void ihara_string_free(char* s);
IHARA_API void ihara_options_init(ihara_options* opt);

IHARA_API ihara_status ihara_graph_from_json(const char* text, ihara_graph** out);
IHARA_API ihara_status ihara_graph_to_json(const ihara_graph* g, char** out);
IHARA_API void ihara_graph_free(ihara_graph* g);
/* Expanded zeta^-1 in compact form, e.g. "1-3u+2u^2". */
IHARA_API ihara_status ihara_graph_zeta(const ihara_graph* g, char** out);
IHARA_API ihara_status ihara_graph_zeta_report(const ihara_graph* g, const ihara_options* opt, char** out,
                                               int* verified);

IHARA_API ihara_status ihara_gog_from_json(const char* text, ihara_gog** out);
IHARA_API ihara_status ihara_gog_to_json(const ihara_gog* x, char** out);
IHARA_API void ihara_gog_free(ihara_gog* x);
IHARA_API ihara_status ihara_gog_zeta(const ihara_gog* x, char** out);
IHARA_API ihara_status ihara_gog_zeta_report(const ihara_gog* x, const ihara_options* opt, char** out,
                                             int* verified);

/* Quotient by the action given as JSON generators. tree_seed names a vertex
 * of the quotient (its least member label) and may be null. A nonzero
 * choice_seed randomizes every free choice. */
IHARA_API ihara_status ihara_quotient(const ihara_graph* g, const char* action_json, const char* tree_seed,
                                      uint64_t choice_seed, ihara_covering** out);
IHARA_API ihara_status ihara_covering_from_json(const char* text, ihara_covering** out);
IHARA_API ihara_status ihara_covering_to_json(const ihara_covering* c, char** out);
IHARA_API void ihara_covering_free(ihara_covering* c);
IHARA_API ihara_status ihara_covering_gog(const ihara_covering* c, ihara_gog** out);
IHARA_API ihara_status ihara_quotient_report(const ihara_covering* c, const ihara_options* opt, char** out,
                                             int* verified);
IHARA_API ihara_status ihara_split_report(const ihara_covering* c, const ihara_options* opt, char** out,
                                          int* verified);

/* Representations belong to the group of the covering they were made for. */
IHARA_API ihara_status ihara_rep_from_json(const ihara_covering* c, const char* text, ihara_rep** out);
IHARA_API ihara_status ihara_rep_trivial(const ihara_covering* c, ihara_rep** out);
IHARA_API ihara_status ihara_rep_regular(const ihara_covering* c, ihara_rep** out);
IHARA_API void ihara_rep_free(ihara_rep* r);
IHARA_API ihara_status ihara_lfunction(const ihara_covering* c, const ihara_rep* r, char** out);
IHARA_API ihara_status ihara_lfunction_report(const ihara_covering* c, const ihara_rep* r,
                                              const ihara_options* opt, char** out, int* verified);
IHARA_API ihara_status ihara_factorize_report(const ihara_covering* c, const ihara_rep* const* irreps,
                                              size_t count, const ihara_options* opt, char** out,
                                              int* verified);

/* Factored display of an integer polynomial in u, e.g. "1 - u^2" -> "1-u^2". */
IHARA_API ihara_status ihara_factor_poly(const char* poly, char** out);

#ifdef __cplusplus
}
#endif

#endif
