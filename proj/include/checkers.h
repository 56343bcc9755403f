#ifndef CHECKERS_H
#define CHECKERS_H

/* C interface to the checkers library. Every function returns an fc_status;
 * results are written through out-pointers. On failure a message is kept in
 * thread-local storage and returned by fc_last_error(). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_INVALID_ARGUMENT = 1,
  FC_OUT_OF_DOMAIN = 2,
  FC_NOT_CONVERGED = 3,
  FC_INFEASIBLE = 4,
  FC_SIZE_LIMIT = 5,
  FC_ZERO_DENOMINATOR = 6,
  FC_BUFFER_TOO_SMALL = 7,
  FC_INTERNAL = 8
} fc_status;

FC_API const char* fc_status_string(fc_status status);
FC_API const char* fc_last_error(void);
FC_API const char* fc_version(void);

typedef enum fc_direction { FC_LEFT = 0, FC_RIGHT = 1 } fc_direction;

/* ------------------------------------------------------------ parameters */

typedef struct fc_params fc_params;

FC_API fc_status fc_params_create(double m, double eps, fc_params** out);
FC_API void fc_params_destroy(fc_params* p);
FC_API double fc_params_mu(const fc_params* p);

/* ------------------------------------------------------------ lattice */

FC_API fc_status fc_amplitude(const fc_params* p, long ix, long it, double* a1, double* a2);
FC_API fc_status fc_probability(const fc_params* p, long ix, long it, double* out);

/* Exact integer amplitude at m = eps = 1 by one of four methods. The
 * integers A1, A2 are written as decimal strings; a_k = A_k 2^{-(it-1)/2}. */
typedef enum fc_exact_method {
  FC_EXACT_DP = 0,
  FC_EXACT_EXPLICIT = 1,
  FC_EXACT_ALT_A = 2,
  FC_EXACT_ALT_B = 3
} fc_exact_method;

FC_API fc_status fc_amplitude_exact(fc_exact_method method, long ix, long it, char* A1, size_t A1_size, char* A2,
                                    size_t A2_size, double* a1, double* a2);

/* Full grid of rows 1..it_max. Row it holds it+1 black sites ix = -it + 2j. */
typedef struct fc_grid fc_grid;

FC_API fc_status fc_grid_create(const fc_params* p, long it_max, fc_grid** out);
FC_API void fc_grid_destroy(fc_grid* g);
FC_API long fc_grid_rows(const fc_grid* g);
FC_API fc_status fc_grid_entry(const fc_grid* g, long it, long j, long* ix, double* a1, double* a2);

typedef struct fc_absorption fc_absorption;

FC_API fc_status fc_absorption_create(fc_absorption** out);
FC_API void fc_absorption_destroy(fc_absorption* b);
FC_API fc_status fc_absorption_add_site(fc_absorption* b, long ix, long it);
FC_API fc_status fc_absorption_add_line(fc_absorption* b, long ix);
FC_API fc_status fc_amplitude_bypass(const fc_params* p, const fc_absorption* b, long ix, long it, double* a1,
                                     double* a2);
/* Partial sums of P(0, t bypass B) for t = 1..t_max written to out[0..t_max-1]. */
FC_API fc_status fc_absorption_partial_sums(const fc_params* p, const fc_absorption* b, long t_max, double* out);

typedef struct fc_gauge fc_gauge;

FC_API fc_status fc_gauge_create(fc_gauge** out);
FC_API fc_status fc_gauge_create_homogeneous(fc_gauge** out);
FC_API void fc_gauge_destroy(fc_gauge* u);
FC_API fc_status fc_gauge_set(fc_gauge* u, long x2, long t2, double re, double im);
/* out = {Re a1, Im a1, Re a2, Im a2}. */
FC_API fc_status fc_amplitude_field(const fc_gauge* u, long ix, long it, double out[4]);
/* sum_x |a1(x,t,u)|^2 for t = 1..t_max written to out[0..t_max-1]. */
FC_API fc_status fc_field_chirality_series(const fc_gauge* u, long t_max, double* out);

FC_API fc_status fc_restricted_amplitude(const fc_params* p, long dx, long dt, fc_direction end, double* out);
FC_API fc_status fc_chirality_flip_sum(long t, double* out);

typedef struct fc_pair_query {
  long x0;
  long x;
  long x2;
  long t;
  fc_direction end;
  fc_direction end2;
} fc_pair_query;

FC_API fc_status fc_pair_amplitude(const fc_params* p, const fc_pair_query* q, double* re, double* im);
FC_API fc_status fc_pair_probability(const fc_params* p, const fc_pair_query* q, double* out);

/* ------------------------------------------------------------ closed forms */

FC_API fc_status fc_explicit_amplitude(long ix, long it, double mu, double* a1, double* a2);
FC_API fc_status fc_particular_values(long k, long t, double* a1, double* a2);
/* Diagram counts by step parity as decimal strings, and their difference. */
FC_API fc_status fc_young_counts(long h, long w, char* n_even, size_t even_size, char* n_odd, size_t odd_size);
FC_API fc_status fc_young_delta(long h, long w, long long* out);

/* ------------------------------------------------------------ special functions */

FC_API fc_status fc_airy(double x, double* value, double* est_error);
FC_API fc_status fc_bessel_j(int n, double z, double* value, double* est_error);
FC_API fc_status fc_bessel_y(int n, double z, double* value, double* est_error);
FC_API fc_status fc_bessel_k(int n, double z, double* value, double* est_error);

/* ------------------------------------------------------------ spectral */

FC_API fc_status fc_omega(const fc_params* p, double momentum, double* out);
FC_API fc_status fc_fourier_amplitude(const fc_params* p, long ix, long it, double* a1, double* a2);

typedef struct fc_anti {
  int odd; /* 1 on white sites */
  double A1[2];
  double A2[2];
  double b1;
  double b2;
  double residue;
} fc_anti;

FC_API fc_status fc_anti_amplitude(const fc_params* p, long ix, long it, fc_anti* out);
FC_API double fc_gauss_constant(void);
FC_API double fc_inverse_lemniscate_constant(void);

typedef struct fc_dispersion {
  double lambda;
  double period;
  double alpha;
  double a[2];
  double b[2];
  double m;
  double eps;
} fc_dispersion;

FC_API fc_status fc_dispersion_solve(const fc_params* p, double lambda, const double a1_0[2], const double a2_0[2],
                                     fc_dispersion* out);
/* out = {Re a1, Im a1, Re a2, Im a2}. */
FC_API fc_status fc_wave_eval(const fc_dispersion* d, long ix, long it, double out[4]);
FC_API fc_status fc_wave_residual(const fc_dispersion* d, long x0, long t0, long nx, long nt, double* out);

/* ------------------------------------------------------------ asymptotics */

FC_API fc_status fc_theta(const fc_params* p, double x, double t, double* out);
FC_API fc_status fc_approx_between_peaks(const fc_params* p, long ix, long it, double* a1, double* a2);
FC_API fc_status fc_approx_airy(const fc_params* p, long ix, long it, double* a1, double* a2);
FC_API fc_status fc_approx_outside(const fc_params* p, long ix, long it, double* a1, double* a2);
FC_API fc_status fc_anti_asymptotic(const fc_params* p, long ix, long it, double* b1, double* b2);
FC_API fc_status fc_simple_asymptotic(const fc_params* p, double x, double t, double* re, double* im);
FC_API fc_status fc_rate_H(const fc_params* p, double v, double* out);
FC_API fc_status fc_free_energy(const fc_params* p, double v, double t, double* out);

FC_API fc_status fc_limiting_F(const fc_params* p, double v, double* out);
FC_API fc_status fc_limiting_density(const fc_params* p, double v, double* out);
FC_API fc_status fc_limiting_moment(const fc_params* p, int r, double* out);
FC_API fc_status fc_empirical_cdf(const fc_params* p, double v, long it, double* out);
FC_API fc_status fc_moment(const fc_params* p, int r, long it, double* out);

/* Distribution of x/t over one row, reusable for many v. */
typedef struct fc_distribution fc_distribution;

FC_API fc_status fc_distribution_create(const fc_params* p, long it, fc_distribution** out);
FC_API void fc_distribution_destroy(fc_distribution* d);
FC_API fc_status fc_distribution_cdf(const fc_distribution* d, double v, double* out);
FC_API fc_status fc_distribution_moment(const fc_distribution* d, int r, double* out);

/* 2x2 matrices as {Re g11, Im g11, Re g12, Im g12, Re g21, Im g21, Re g22, Im g22}. */
FC_API fc_status fc_continuum_approx(const fc_params* p, double x, double t, double* re, double* im);
FC_API fc_status fc_retarded_G(double x, double t, double m, double out[8]);
FC_API fc_status fc_feynman_G(double x, double t, double m, double out[8]);
FC_API fc_status fc_feynman_kernel(double x, double t, double m, double* re, double* im);
FC_API fc_status fc_continuum_sup_error(double m, double t, double eps, double delta, double* out);
FC_API fc_status fc_concentration_mass(double m, double t, double eps, double delta, double* out);

typedef struct fc_algorithm1 {
  double eps;
  double prescribed;
  int feasible;
  int ran;
  long rows;
  double approx[8];
  double exact[8];
  double error;
} fc_algorithm1;

FC_API fc_status fc_algorithm1_eps(double m, double x, double t, double delta, double* out);
/* eps_override <= 0 means none. An infeasible prescribed step without an
 * override is reported through feasible = 0, not as an error. */
FC_API fc_status fc_algorithm1_run(double m, double x, double t, double delta, double eps_override,
                                   fc_algorithm1* out);

typedef enum fc_triple_sequence {
  FC_TRIPLE_SHRINKING = 0, /* (0, 4n^2, 1/2n) */
  FC_TRIPLE_FIXED = 1,     /* (0, 2n eps, eps) */
  FC_TRIPLE_ADMISSIBLE = 2 /* (0, n, ~n^-0.6) */
} fc_triple_sequence;

/* For n = n_min..n_max (admissible: n in {n_min, 2 n_min, 4 n_min, ...} up to
 * n_max) writes up to capacity records {x, t, eps, Re r, Im r}; *count gets
 * the number written. */
FC_API fc_status fc_triple_limit(fc_triple_sequence kind, double m, double eps, long n_min, long n_max,
                                 double* records, size_t capacity, size_t* count);

/* ------------------------------------------------------------ combinatorics */

typedef struct fc_torus fc_torus;

FC_API fc_status fc_torus_create(long T, double m, double eps, double delta, fc_torus** out);
FC_API void fc_torus_destroy(fc_torus* lat);
FC_API long fc_torus_num_edges(const fc_torus* lat);
FC_API fc_status fc_torus_source_edge(const fc_torus* lat, long* out);
FC_API fc_status fc_torus_sink_edge(const fc_torus* lat, long ix, long it, int k, long* out);
/* Edge e runs from half-unit point (X, Y) to (X +- 1, Y + 1). */
FC_API fc_status fc_torus_edge(const fc_torus* lat, long e, long* X, long* Y, fc_direction* dir);
/* source = sink = -1 for the configuration sum without a path. */
FC_API fc_status fc_torus_enumerate(const fc_torus* lat, long source, long sink, double* re, double* im, long* count);
FC_API fc_status fc_finite_propagator(const fc_torus* lat, long source, long sink, double* re, double* im);

typedef struct fc_config_list fc_config_list;

FC_API fc_status fc_config_list_create(const fc_torus* lat, long source, long sink, fc_config_list** out);
FC_API void fc_config_list_destroy(fc_config_list* l);
FC_API long fc_config_list_size(const fc_config_list* l);
FC_API fc_status fc_config_arrow(const fc_config_list* l, long i, double* re, double* im);
/* Text form "loops=[e e ...][...] path=[e ...]" with edge ids. */
FC_API fc_status fc_config_describe(const fc_config_list* l, long i, char* buf, size_t size);

typedef struct fc_anti_checker {
  double deltas[3];
  double ladder[2][3][2]; /* [k-1][delta][re/im] */
  double extrapolated[2][2];
  double fourier[2][2];
} fc_anti_checker;

FC_API fc_status fc_anti_checker_estimate(long ix, long it, double m, double eps, long T, fc_anti_checker* out);

/* ------------------------------------------------------------ verification */

typedef struct fc_verify_options {
  long t_max;
  long exact_t_max;
  long b_t_max;
  double m;
  double eps;
  double tol;
} fc_verify_options;

typedef struct fc_suite_result {
  char name[32];
  int pass;
  long checks;
  long exact_failures;
  double max_residual;
} fc_suite_result;

FC_API void fc_verify_default_options(fc_verify_options* out);
FC_API long fc_verify_suite_count(void);
FC_API const char* fc_verify_suite_name(long i);
FC_API fc_status fc_verify_suite(const char* name, const fc_verify_options* opt, fc_suite_result* out);

#ifdef __cplusplus
}
#endif

#endif
