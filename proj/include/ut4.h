/* C interface to the ut4 library: subgroups of UT(4,Z), their characters and
 * the irreducibility classification of the induced representations.
 *
 * Every function returns a ut4_status. Objects are opaque and owned by the
 * caller once returned; free them with the matching *_free function. Strings
 * returned by the library stay valid until the owning object is freed. */
#ifndef UT4_H
#define UT4_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UT4_API __declspec(dllexport)
#else
#define UT4_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  UT4_OK = 0,
  UT4_E_ARGUMENT = 1,        /* null pointer or out-of-range option */
  UT4_E_SCHEMA = 2,          /* request is not valid JSON or fails the schema */
  UT4_E_UNKNOWN_COMMAND = 3,
  UT4_E_PRECONDITION = 4,    /* input outside a formula's domain (structure, relations, divisibility) */
  UT4_E_NUMERIC = 5,         /* numeric value could not be lifted to an exact one */
  UT4_E_INTERNAL = 6         /* internal inconsistency; a bug */
} ut4_status;

typedef struct ut4_context ut4_context;
typedef struct ut4_result ut4_result;
typedef struct ut4_subgroup ut4_subgroup;

UT4_API const char* ut4_version(void);
UT4_API const char* ut4_status_name(ut4_status s);

/* Options shared by all requests. Keys: "radius" (default 4), "box" (2),
 * "limit" (1000), "numeric_q" (120). */
UT4_API ut4_status ut4_context_new(ut4_context** out);
UT4_API void ut4_context_free(ut4_context* ctx);
UT4_API ut4_status ut4_context_set_int(ut4_context* ctx, const char* key, int64_t value);
/* Equality tolerance for numeric values, in (0, 1e-3]; default 1e-9. */
UT4_API ut4_status ut4_context_set_tolerance(ut4_context* ctx, double tol);

/* Runs one JSON request {"command": ..., "payload": {...}, "options": {...}}.
 * A result object is produced for every status except UT4_E_ARGUMENT; on
 * failure it holds {"ok": false, "error": {...}}. */
UT4_API ut4_status ut4_run(ut4_context* ctx, const char* request_json, ut4_result** out);
UT4_API ut4_status ut4_result_status(const ut4_result* r);
/* indent < 0 gives compact JSON. */
UT4_API const char* ut4_result_json(ut4_result* r, int indent);
UT4_API void ut4_result_free(ut4_result* r);

/* Subgroup generated by n elements given as 6 coordinates each
 * (a, d, f, b, e, c: matrix entries (1,2), (2,3), (3,4), (1,3), (2,4), (1,4)). */
UT4_API ut4_status ut4_subgroup_new(const int64_t* coords, size_t n, ut4_subgroup** out);
UT4_API void ut4_subgroup_free(ut4_subgroup* h);
UT4_API ut4_status ut4_subgroup_ranks(const ut4_subgroup* h, int* rk1, int* rk2, int* rk3);
UT4_API ut4_status ut4_subgroup_contains(const ut4_subgroup* h, const int64_t* coords, int* out);
/* Index [G : H]; 0 when infinite. Fails with UT4_E_NUMERIC on overflow. */
UT4_API ut4_status ut4_subgroup_index(const ut4_subgroup* h, int64_t* out);
UT4_API ut4_status ut4_subgroup_is_isolated(const ut4_subgroup* h, int* out);

/* Lifts re + i im to exp(2 pi i p/q) with q <= max_q, p in [0, q).
 * UT4_E_NUMERIC when no candidate is within tol or two distinct ones are. */
UT4_API ut4_status ut4_lift_root(double re, double im, int max_q, double tol, int64_t* p,
                                 int64_t* q);

#ifdef __cplusplus
}
#endif

#endif
