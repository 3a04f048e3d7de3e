#ifndef HODO_H
#define HODO_H

/* C interface to the hodograph toolkit. Every operation returns a status
 * code; nonzero means failure and hodo_last_error() carries the message for
 * the calling thread. Results come back as records: line-delimited JSON
 * (CSV where noted) plus a one-line human summary. */

#include <stddef.h>

#if defined(HODO_BUILD_SHARED)
#define HODO_API __attribute__((visibility("default")))
#else
#define HODO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hodo_status {
  HODO_OK = 0,
  HODO_INVALID_INPUT = 1,
  HODO_NO_CONVERGENCE = 2,
  HODO_COLLAPSE = 3,
  HODO_REAL_COLLAPSE = 4,
  HODO_SINGULAR_HESSIAN = 5,
  HODO_DEGENERATE_DELTA = 6,
  HODO_BAD_ARITY = 7,
  HODO_RADICAND_NEGATIVE = 8,
  HODO_TOLERANCE_AMBIGUITY = 9,
  HODO_ALL_COEFFICIENTS_VANISH = 10,
  HODO_EMPTY_LOCUS = 11,
  HODO_DEEPER_SINGULARITY = 12,
  HODO_GRID_CROSSES_SINGULARITY = 13,
  HODO_NOT_ON_MANIFOLD = 14,
  HODO_UNSUPPORTED = 15,
  HODO_INTERNAL = 16
} hodo_status;

HODO_API const char* hodo_version(void);
HODO_API const char* hodo_status_name(hodo_status s);
/* Message of the most recent failing call on this thread; "" when none. */
HODO_API const char* hodo_last_error(void);

/* Time vector: hierarchy is "benney" (slots x, t2, t3, ...) or "dtoda"
 * (slots x0, x1, ...); spec is a comma list like "x=0,t2=-1,t4=1".
 * Unnamed slots are exactly zero. */
typedef struct hodo_times hodo_times;
HODO_API hodo_status hodo_times_parse(const char* hierarchy, const char* spec,
                                      hodo_times** out);
HODO_API void hodo_times_free(hodo_times* t);
/* Slot index of a name like "t3" or "x1"; usable in the slot arguments
 * below. */
HODO_API hodo_status hodo_times_slot(const hodo_times* t, const char* name,
                                     int* slot);

typedef struct hodo_opts {
  double tol;        /* Newton residual target */
  double merge_tol;  /* invariant-collision threshold */
  double zero_tol;   /* relative classification threshold */
  double sing_tol;   /* Hessian degeneracy threshold */
  double seed_range; /* half-width of the coarse seeding scan */
  int max_iter;
  int order; /* series truncation override, 0 = automatic */
  int jobs;  /* grid parallelism; 1 = serial */
} hodo_opts;
/* Defaults; HODO_TOL in the environment overrides tol. */
HODO_API void hodo_opts_init(hodo_opts* o);

/* Record list handed back by the operations below. Lines are JSON objects
 * (CSV rows for hodo_trace_locus with csv != 0), one result per line. */
typedef struct hodo_records hodo_records;
HODO_API int hodo_records_count(const hodo_records* r);
HODO_API const char* hodo_records_line(const hodo_records* r, int i);
HODO_API const char* hodo_records_summary(const hodo_records* r);
HODO_API void hodo_records_free(hodo_records* r);

/* Regular critical point from a hyperbolic seed (b1, b2). */
HODO_API hodo_status hodo_solve(const hodo_times* t, double b1, double b2,
                                const hodo_opts* o, hodo_records** out);

/* Sector of a point already on the hodograph manifold. */
HODO_API hodo_status hodo_classify(const hodo_times* t, double b1, double b2,
                                   const hodo_opts* o, hodo_records** out);

/* Singular point of class (n1, n2); free_slots lists the n1 + n2 time
 * slots solved alongside (b1, b2). */
HODO_API hodo_status hodo_solve_singular(const hodo_times* t, int n1, int n2,
                                         const int* free_slots, int n_free,
                                         double b1, double b2,
                                         const hodo_opts* o,
                                         hodo_records** out);

/* Catastrophe locus over a rectangle in two time slots. csv != 0 emits CSV
 * rows (header first) instead of JSON lines. */
HODO_API hodo_status hodo_trace_locus(const hodo_times* t, int n1, int n2,
                                      const int* free_slots, int n_free,
                                      int slot1, double lo1, double hi1,
                                      int count1, int slot2, double lo2,
                                      double hi2, int count2, double b1,
                                      double b2, int csv, const hodo_opts* o,
                                      hodo_records** out);

/* Both branches of the (1,0) and (0,1) loci of the three-parameter family
 * against the closed forms and their corrected variants. */
HODO_API hodo_status hodo_compare_section3(double t2, double t3, double t4,
                                           const hodo_opts* o,
                                           hodo_records** out);

/* Elliptic critical point from a complex seed; Im(seed) must be nonzero. */
HODO_API hodo_status hodo_solve_elliptic(const hodo_times* t, double re,
                                         double im, const hodo_opts* o,
                                         hodo_records** out);

/* Elliptic gradient catastrophe: solves the first two ladder entries for
 * two free time slots plus beta. */
HODO_API hodo_status hodo_find_catastrophe(const hodo_times* t, int slot_a,
                                           int slot_b, double re, double im,
                                           const hodo_opts* o,
                                           hodo_records** out);

/* Exact series entries restricted to a conjugate pair, in (U, V) variables
 * or, with chart_uv != 0, in the (u, v) chart. */
HODO_API hodo_status hodo_elliptic_entries(const char* eps, int order,
                                           int chart_uv, hodo_records** out);

/* Series table for exponent eps ("p/q"). With at == NULL the entries are
 * exact polynomials in (b1, b2); otherwise at points to {a, b} and the
 * record carries float values C_0..C_order. */
HODO_API hodo_status hodo_series(const char* eps, int order, const double* at,
                                 hodo_records** out);

/* Flow residual of flow slot n on a rectangular patch seeded at (b1, b2).
 * nx/ns = 0 pick the default step 1e-3. convergence != 0 adds a
 * step-halving record; with_samples != 0 appends one record per interior
 * node. o->jobs parallelizes the grid. */
HODO_API hodo_status hodo_flow_residual(const hodo_times* t, int n, double b1,
                                        double b2, double x_lo, double x_hi,
                                        double s_lo, double s_hi, int nx,
                                        int ns, int convergence,
                                        int with_samples, const hodo_opts* o,
                                        hodo_records** out);

/* Exact operator battery: annihilation, commutation, index shift, duality,
 * and a float spot check, on `trials` randomized inputs. */
HODO_API hodo_status hodo_verify_identities(unsigned seed, int trials,
                                            int max_n, hodo_records** out);

/* Potential at one point; the imaginary parts select the elliptic branch
 * when b1 = conj(b2). */
HODO_API hodo_status hodo_eval_w(const hodo_times* t, double b1_re,
                                 double b1_im, double b2_re, double b2_im,
                                 double* w);

#ifdef __cplusplus
}
#endif

#endif /* HODO_H */
