/* holab: exact-arithmetic holonomy toolkit for contact sub-Riemannian and
 * pseudo-Hermitian structures. Plain C interface over opaque handles.
 *
 * Every entry point returns a status (HOLAB_OK on success). On failure the
 * message is available from holab_last_error() on the calling thread.
 * A command that runs to completion returns HOLAB_OK even if its verdict is
 * negative; read the verdict with holab_result_verdict(). */
#ifndef HOLAB_H
#define HOLAB_H

#if defined(_WIN32)
#define HOLAB_API __declspec(dllexport)
#else
#define HOLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum holab_status {
  HOLAB_OK = 0,
  HOLAB_MIXED_BACKEND,
  HOLAB_MISSING_TOLERANCE,
  HOLAB_SINGULAR,
  HOLAB_NO_FIXPOINT,
  HOLAB_SYNTAX_ERROR,
  HOLAB_UNKNOWN_VARIABLE,
  HOLAB_DIVIDE_BY_ZERO_POLY,
  HOLAB_DEGREE_OVERFLOW,
  HOLAB_POLE_AT_POINT,
  HOLAB_NOT_CONTACT,
  HOLAB_NOT_ALMOST_COMPLEX,
  HOLAB_POLE_ON_PATH,
  HOLAB_THEOREM_VIOLATION,
  HOLAB_SPLIT_INCOMPLETE,
  HOLAB_INVALID_INPUT,
  HOLAB_JACOBI_FAIL,
  HOLAB_PARAM_DOMAIN,
  HOLAB_VALIDATION_FAIL,
  HOLAB_MISMATCH,
  HOLAB_SIZE_GUARD,
  HOLAB_LABEL_DOMAIN,
  HOLAB_UNSUPPORTED_LABEL,
  HOLAB_PARSE_ERROR,
  HOLAB_MODEL_INVALID,
  HOLAB_INTERNAL
} holab_status;

typedef struct holab_model holab_model;
typedef struct holab_result holab_result;

HOLAB_API const char* holab_version(void);
HOLAB_API const char* holab_status_name(int status);
/* Process exit code for a status: 0 ok, 1 parse, 2 validation,
 * 3 theorem violation, 4 no fixpoint, 5 internal. */
HOLAB_API int holab_exit_code(int status);
HOLAB_API const char* holab_last_error(void);

/* Model files use the JSON schema "holonomy-lab/1". */
HOLAB_API int holab_model_load_file(const char* path, holab_model** out);
HOLAB_API int holab_model_load_json(const char* text, const char* source, holab_model** out);
HOLAB_API const char* holab_model_name(const holab_model* model);
HOLAB_API int holab_model_m(const holab_model* model);
HOLAB_API void holab_model_free(holab_model* model);

typedef struct holab_analyze_options {
  int depth;               /* 0..4, default 2 */
  const char* point;       /* "r1,...,rn" or NULL for the base point */
  int sample_points;       /* identity-suite sample points, default 5 */
  unsigned long long seed; /* identity-suite seed */
} holab_analyze_options;
HOLAB_API void holab_analyze_options_init(holab_analyze_options* opt);
HOLAB_API int holab_analyze(const holab_model* model, const holab_analyze_options* opt, holab_result** out);

/* kind: "heisenberg", "cpn-sphere" or "torsion-family"; lambda and mu are
 * rationals such as "1" or "-3/2". */
HOLAB_API int holab_subsym(const char* kind, int m, const char* lambda, const char* mu, holab_result** out);

/* algebra: "su", "u", "so", "so+u1", "sp", "sp+u1". */
HOLAB_API int holab_spin(int m, const char* algebra, holab_result** out);

typedef struct holab_transport_options {
  int i, j;            /* coordinate plane of the square loop */
  const char* side;    /* rational side length, default "1/10" */
  const char* conn;    /* "adapted" or "wagner" */
  int steps;           /* RK4 steps per side */
  const char* point;   /* corner, NULL for the base point */
} holab_transport_options;
HOLAB_API void holab_transport_options_init(holab_transport_options* opt);
HOLAB_API int holab_transport(const holab_model* model, const holab_transport_options* opt, holab_result** out);

/* corpus_dir NULL or "" uses the built-in models directory; filter is a
 * case-insensitive substring of check names. */
HOLAB_API int holab_selftest(const char* corpus_dir, const char* filter, holab_result** out);

HOLAB_API const char* holab_result_json(const holab_result* r);
HOLAB_API const char* holab_result_text(const holab_result* r);
/* HOLAB_OK, or the status describing a negative verdict. */
HOLAB_API int holab_result_verdict(const holab_result* r);
HOLAB_API const char* holab_result_detail(const holab_result* r);
HOLAB_API void holab_result_free(holab_result* r);

#ifdef __cplusplus
}
#endif

#endif
