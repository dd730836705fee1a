/* C interface to the unfolder library. All functions report failures through
 * an unf_status; the message of the last failure on the calling thread is
 * available from unf_last_error(). Strings returned through char** out
 * parameters are owned by the caller and released with unf_string_free(). */
#ifndef UNFOLDER_H
#define UNFOLDER_H

#include <stddef.h>

#if defined(UNFOLDER_BUILDING)
#define UNF_API __attribute__((visibility("default")))
#else
#define UNF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unf_status {
  UNF_OK = 0,
  UNF_ERR_MIXED_DIMENSION,
  UNF_ERR_DEGENERATE_FACET,
  UNF_ERR_SELF_IDENTIFICATION,
  UNF_ERR_BAD_GLUING,
  UNF_ERR_NOT_SIMPLICIAL,
  UNF_ERR_NOT_A_FACE,
  UNF_ERR_NOT_A_FACET,
  UNF_ERR_INVALID_PATH,
  UNF_ERR_NOT_STRONGLY_CONNECTED,
  UNF_ERR_NOT_LOCALLY_STRONGLY_CONNECTED,
  UNF_ERR_DEGENERATE_MAP,
  UNF_ERR_ISOMORPHISM_NOT_FOUND,
  UNF_ERR_MISMATCH,
  UNF_ERR_BASE_NOT_NICE,
  UNF_ERR_DIMENSION_MISMATCH,
  UNF_ERR_BAD_PARAMETER,
  UNF_ERR_PARSE,
  UNF_ERR_INTERNAL
} unf_status;

typedef enum unf_mode { UNF_COMPLETE = 0, UNF_PARTIAL = 1 } unf_mode;

typedef enum unf_subdivision { UNF_BARYCENTRIC = 0, UNF_ANTIPRISMATIC = 1, UNF_STELLAR = 2 } unf_subdivision;

/* A simplicial or pseudo-simplicial complex, possibly with a projection table. */
typedef struct unf_complex unf_complex;
typedef struct unf_unfolding unf_unfolding;

UNF_API const char* unf_status_name(unf_status status);
UNF_API const char* unf_last_error(void);
UNF_API void unf_string_free(char* s);

UNF_API unf_status unf_parse(const char* text, unf_complex** out);
UNF_API unf_status unf_gallery(const char* name, unf_complex** out);
UNF_API void unf_complex_free(unf_complex* c);

UNF_API unf_status unf_emit(const unf_complex* c, char** out);
UNF_API unf_status unf_analyze(const unf_complex* c, int base, char** report);
UNF_API int unf_dim(const unf_complex* c);
UNF_API int unf_facet_count(const unf_complex* c);
UNF_API int unf_is_pseudo(const unf_complex* c);
UNF_API unf_status unf_group_order(const unf_complex* c, int base, size_t* order);

UNF_API unf_status unf_unfold(const unf_complex* c, unf_mode mode, int base, unf_unfolding** out);
UNF_API void unf_unfolding_free(unf_unfolding* u);
/* The whole unfolding with its projection table. */
UNF_API unf_status unf_unfolding_total(const unf_unfolding* u, unf_complex** out);
UNF_API int unf_unfolding_component_count(const unf_unfolding* u);
/* Component k (ids ordered by lowest facet) with its projection table. */
UNF_API unf_status unf_unfolding_component(const unf_unfolding* u, int k, unf_complex** out);

/* facet: for UNF_STELLAR, the facet to subdivide, or -1 for all facets. */
UNF_API unf_status unf_subdivide(const unf_complex* c, unf_subdivision kind, int facet, int iterations,
                                 unf_complex** out);

/* suite: "all", "props" or "paper". *all_passed is 1 when every check passed. */
UNF_API unf_status unf_verify(const char* suite, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
