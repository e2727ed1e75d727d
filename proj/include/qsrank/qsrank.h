/*
 * qsrank C interface.
 *
 * Shapes are passed as text: comma-separated strictly decreasing positive
 * integers, optionally followed by "/" and an inner shape ("4,3/3").
 *
 * Every function returns a qsr_status. On failure a description of the most
 * recent error on the calling thread is available from qsr_last_error().
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with qsr_string_free(); polynomial handles with
 * qsr_poly_free().
 */
#ifndef QSRANK_QSRANK_H
#define QSRANK_QSRANK_H

#include <stddef.h>

#if defined(QSRANK_BUILDING)
#define QSR_API __attribute__((visibility("default")))
#else
#define QSR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsr_status {
  QSR_OK = 0,
  QSR_E_PARSE = 1,    /* malformed shape, partition or JSON text */
  QSR_E_INVALID = 2,  /* well-formed input violating a precondition */
  QSR_E_BOUND = 3,    /* input too large for a brute-force routine */
  QSR_E_NULL = 4,     /* required pointer argument was NULL */
  QSR_E_INTERNAL = 5  /* broken internal invariant */
} qsr_status;

typedef enum qsr_route {
  QSR_ROUTE_DEFAULT = 0, /* morris for straight shapes, pf for skew shapes */
  QSR_ROUTE_MORRIS = 1,
  QSR_ROUTE_RECUR = 2,
  QSR_ROUTE_PF = 3,
  QSR_ROUTE_STRIPS = 4
} qsr_route;

typedef enum qsr_sweep {
  QSR_SWEEP_CONJECTURE = 0,
  QSR_SWEEP_SKEW = 1
} qsr_sweep;

/* Opaque power-sum polynomial with exact rational coefficients. */
typedef struct qsr_poly qsr_poly;

QSR_API const char* qsr_last_error(void);
QSR_API const char* qsr_status_name(qsr_status status);
QSR_API void qsr_string_free(char* s);

/* Q-function of a straight or skew shape by the chosen route. */
QSR_API qsr_status qsr_qfun(const char* shape, qsr_route route, qsr_poly** out);
QSR_API void qsr_poly_free(qsr_poly* p);
QSR_API qsr_status qsr_poly_text(const qsr_poly* p, char** out);
QSR_API qsr_status qsr_poly_json(const qsr_poly* p, char** out);
QSR_API qsr_status qsr_poly_from_json(const char* json, qsr_poly** out);
QSR_API qsr_status qsr_poly_term_count(const qsr_poly* p, size_t* out);
/* QSR_E_INVALID for the zero polynomial. */
QSR_API qsr_status qsr_poly_lowest_degree(const qsr_poly* p, int* out);
QSR_API qsr_status qsr_poly_bottom(const qsr_poly* p, qsr_poly** out);
QSR_API qsr_status qsr_poly_equal(const qsr_poly* a, const qsr_poly* b, int* out);

/* srank of a straight or skew shape. */
QSR_API qsr_status qsr_srank(const char* shape, int* out);
/* Exhaustive minimum number of bars; |outer| <= bound or QSR_E_BOUND (bound <= 0 selects the
 * default of 12). When witness is non-NULL it receives a rendering of a minimal tableau. */
QSR_API qsr_status qsr_srank_bruteforce(const char* shape, int bound, int* out, char** witness);

/* Spin character value <lambda>(pi) as a decimal string. pi must have odd parts. */
QSR_API qsr_status qsr_character(const char* lambda, const char* pi, char** out);

/* Lists the bar tableaux of the shape whose bar sizes in label order are `type`, each
 * rendered with its weight. */
QSR_API qsr_status qsr_tableaux(const char* shape, const char* type, char** listing, size_t* count);

/* Runs a verification sweep up to max_n. The report is always produced when
 * the status is QSR_OK; *violations is the number of failed checks. */
QSR_API qsr_status qsr_verify(qsr_sweep sweep, int max_n, char** report, int* violations);

#ifdef __cplusplus
}
#endif

#endif /* QSRANK_QSRANK_H */
