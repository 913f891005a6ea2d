#ifndef CATGEO_CATGEO_H
#define CATGEO_CATGEO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CATGEO_BUILDING_LIBRARY)
#define CATGEO_API __declspec(dllexport)
#else
#define CATGEO_API __declspec(dllimport)
#endif
#else
#define CATGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum catgeo_status {
  CATGEO_OK = 0,
  CATGEO_ERR_USAGE = 1,
  CATGEO_ERR_PARSE = 2,
  CATGEO_ERR_IO = 3,
  CATGEO_ERR_INVALID_PRESENTATION = 4,
  CATGEO_ERR_DUPLICATE_ID = 5,
  CATGEO_ERR_NONTRIVIAL_CYCLE = 6,
  CATGEO_ERR_CYCLIC_GRAPH = 7,
  CATGEO_ERR_AXIOM_VIOLATION = 8,
  CATGEO_ERR_UNKNOWN_ARROW = 9,
  CATGEO_ERR_NOT_COMPOSABLE = 10,
  CATGEO_ERR_UNDEFINED = 11,
  CATGEO_ERR_COMPOSITE_IS_IDENTITY = 12,
  CATGEO_ERR_NOT_GENERATED = 13,
  CATGEO_ERR_NO_DIFFERENCE = 14,
  CATGEO_ERR_CHECK_FAILED = 15,
  CATGEO_ERR_INTERNAL = 16
} catgeo_status;

/* Load flags. */
#define CATGEO_LOAD_NO_VALIDATE 0x1u

/* Output flags. */
#define CATGEO_OUTPUT_JSON 0x1u

typedef enum catgeo_report_kind {
  CATGEO_REPORT_VALIDATE = 0,
  CATGEO_REPORT_BASIS = 1,
  CATGEO_REPORT_NORMS = 2,
  CATGEO_REPORT_TABLE = 3,
  CATGEO_REPORT_CLIFFORD = 4,
  CATGEO_REPORT_EMBED = 5,
  CATGEO_REPORT_DOT = 6,
  CATGEO_REPORT_DOT_BASIS = 7
} catgeo_report_kind;

typedef struct catgeo_category catgeo_category;

CATGEO_API const char* catgeo_status_name(catgeo_status status);
/* Diagnostic for the last failing call on this thread; never NULL. */
CATGEO_API const char* catgeo_last_error(void);
/* Strings returned through char** out-parameters are released here. */
CATGEO_API void catgeo_string_free(char* s);

CATGEO_API catgeo_status catgeo_category_load(const char* document, unsigned flags,
                                              catgeo_category** out);
CATGEO_API catgeo_status catgeo_category_load_file(const char* path, unsigned flags,
                                                   catgeo_category** out);
CATGEO_API void catgeo_category_free(catgeo_category* category);

/* Non-identity arrows, in canonical order. */
CATGEO_API size_t catgeo_arrow_count(const catgeo_category* category);
/* Borrowed pointer, valid for the handle's lifetime. */
CATGEO_API catgeo_status catgeo_arrow_id(const catgeo_category* category, size_t index,
                                         const char** out);

/* Vector arguments name arrows by id; "O" is the zero vector. */
CATGEO_API catgeo_status catgeo_norm(const catgeo_category* category, const char* f,
                                     uint64_t* out);
CATGEO_API catgeo_status catgeo_add(const catgeo_category* category, const char* f,
                                    const char* g, char** out);
CATGEO_API catgeo_status catgeo_inner(const catgeo_category* category, const char* f,
                                      const char* g, uint64_t* out);
CATGEO_API catgeo_status catgeo_distance(const catgeo_category* category, const char* f,
                                         const char* g, uint64_t* out);
CATGEO_API catgeo_status catgeo_is_orthogonal(const catgeo_category* category, const char* f,
                                              const char* g, int* out);
CATGEO_API catgeo_status catgeo_is_parallel(const catgeo_category* category, const char* f,
                                            const char* g, int* out);

/* Rendered reports. CATGEO_REPORT_VALIDATE and CATGEO_REPORT_CLIFFORD return
 * CATGEO_ERR_CHECK_FAILED (with *out still set) when a check fails. */
CATGEO_API catgeo_status catgeo_report(const catgeo_category* category, catgeo_report_kind kind,
                                       unsigned flags, char** out);
CATGEO_API catgeo_status catgeo_product_report(const catgeo_category* category, const char* f,
                                               const char* g, unsigned flags, char** out);

/* Built-in example document by name ("po6", "path3", "parallel", "iso"). */
CATGEO_API catgeo_status catgeo_example(const char* name, char** out);
/* Newline-separated list of example names. */
CATGEO_API catgeo_status catgeo_example_names(char** out);

/* Real-line backend. Vectors are "O" or "<lo>:<hi>" with decimal or
 * fraction endpoints. */
CATGEO_API catgeo_status catgeo_interval_norm(const char* f, unsigned flags, char** out);
CATGEO_API catgeo_status catgeo_interval_add(const char* f, const char* g, unsigned flags,
                                             char** out);
CATGEO_API catgeo_status catgeo_interval_product(const char* f, const char* g, unsigned flags,
                                                 char** out);

#ifdef __cplusplus
}
#endif

#endif /* CATGEO_CATGEO_H */
