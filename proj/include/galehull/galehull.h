/* C interface to the galehull library.
 *
 * All objects are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Functions returning text allocate a
 * NUL-terminated JSON string that must be released with ghx_string_free.
 * On failure a function returns a nonzero status and leaves a JSON error
 * document ({"error","module","message"}) retrievable with ghx_last_error()
 * on the calling thread.
 */
#ifndef GALEHULL_H
#define GALEHULL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GHX_API __declspec(dllexport)
#else
#define GHX_API __attribute__((visibility("default")))
#endif

typedef enum ghx_status {
  GHX_OK = 0,
  GHX_E_INVALID_ARGUMENT,
  GHX_E_PARSE,
  GHX_E_NOT_CUBIC,
  GHX_E_BAD_EDGE,
  GHX_E_EULER_VIOLATION,
  GHX_E_DISCONNECTED,
  GHX_E_DEGENERATE_FACE,
  GHX_E_NOT_THREE_COLORABLE,
  GHX_E_UNKNOWN_NAME,
  GHX_E_ODD_PRISM,
  GHX_E_BAD_PARAMETERS,
  GHX_E_DIMENSION_MISMATCH,
  GHX_E_THEOREM_VIOLATION,
  GHX_E_DIAGRAM_MISMATCH,
  GHX_E_CRITERION_MISMATCH,
  GHX_E_STRUCTURE_MISMATCH,
  GHX_E_POINT_OUTSIDE_AFFINE_HULL,
  GHX_E_DEGENERATE_INPUT,
  GHX_E_TOO_MANY_POINTS,
  GHX_E_TOO_LARGE,
  GHX_E_VERIFY_FAILED,
  GHX_E_INTERNAL
} ghx_status;

/* Output formatting flags. */
#define GHX_PRETTY 1

typedef struct ghx_polytope ghx_polytope;
typedef struct ghx_analysis ghx_analysis;

GHX_API const char* ghx_status_name(ghx_status status);
/* Process exit code for a status: 0 success, 2 validation error,
 * 3 theorem/oracle mismatch, 4 resource limit, 1 anything else. */
GHX_API int ghx_status_exit_code(ghx_status status);
GHX_API const char* ghx_last_error(void);
GHX_API void ghx_string_free(char* s);

/* {"faces": [[v, ...], ...]} */
GHX_API ghx_status ghx_polytope_from_json(const char* json, ghx_polytope** out);
/* "cube", "prism:6", "truncated-octahedron" */
GHX_API ghx_status ghx_polytope_from_catalog(const char* spec, ghx_polytope** out);
GHX_API void ghx_polytope_free(ghx_polytope* p);
GHX_API ghx_status ghx_polytope_faces_json(const ghx_polytope* p, int flags, char** out);
/* Validation and coloring report. */
GHX_API ghx_status ghx_polytope_report(const ghx_polytope* p, int flags, char** out);
GHX_API ghx_status ghx_catalog_names(int flags, char** out);

GHX_API ghx_status ghx_analyze(const ghx_polytope* p, ghx_analysis** out);
GHX_API void ghx_analysis_free(ghx_analysis* a);
GHX_API ghx_status ghx_analysis_report(const ghx_analysis* a, int flags, char** out);
/* Face lattice of the hull for the first coloring. */
GHX_API ghx_status ghx_analysis_lattice(const ghx_analysis* a, int flags, char** out);
/* Oracle cross-check. *out receives the report even when checks fail, in
 * which case GHX_E_VERIFY_FAILED is returned. */
GHX_API ghx_status ghx_verify(const ghx_analysis* a, int flags, char** out);
GHX_API ghx_status ghx_compare(const ghx_analysis* a, const ghx_analysis* b, int use_oracle, int flags, char** out);

GHX_API ghx_status ghx_hamilton(const ghx_polytope* p, int flags, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GALEHULL_H */
