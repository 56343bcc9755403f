#include "checkers.h"

#include <algorithm>
#include <array>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "checkers/asymptotics.hpp"
#include "checkers/closed_forms.hpp"
#include "checkers/combinatorics.hpp"
#include "checkers/error.hpp"
#include "checkers/lattice.hpp"
#include "checkers/specfun.hpp"
#include "checkers/spectral.hpp"
#include "checkers/verify.hpp"

using namespace checkers;

struct fc_params {
  LatticeParams p;
};
struct fc_grid {
  std::vector<lattice::Row> rows;
};
struct fc_absorption {
  lattice::AbsorptionSet set;
};
struct fc_gauge {
  lattice::GaugeField field;
};
struct fc_distribution {
  asymptotics::EmpiricalDistribution dist;
};
struct fc_torus {
  combinatorics::TorusLattice lat;
};
struct fc_config_list {
  std::vector<combinatorics::LoopConfiguration> configs;
};

namespace {

thread_local std::string g_last_error;

fc_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return FC_INVALID_ARGUMENT;
    case ErrorCode::OutOfDomain: return FC_OUT_OF_DOMAIN;
    case ErrorCode::NotConverged: return FC_NOT_CONVERGED;
    case ErrorCode::Infeasible: return FC_INFEASIBLE;
    case ErrorCode::SizeLimit: return FC_SIZE_LIMIT;
    case ErrorCode::ZeroDenominator: return FC_ZERO_DENOMINATOR;
  }
  return FC_INTERNAL;
}

fc_status set_error(fc_status s, const char* what) {
  g_last_error = what;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
fc_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return FC_OK;
  } catch (const Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FC_INTERNAL, e.what());
  }
}

void need(const void* p) { require(p != nullptr, ErrorCode::InvalidArgument, "null pointer argument"); }

template <class... P>
void need(const void* p, P... rest) {
  need(p);
  need(rest...);
}

void put_pair(const AmplitudePair& v, double* a1, double* a2) {
  *a1 = v.a1;
  *a2 = v.a2;
}

void put_cplx(cplx v, double* out) {
  out[0] = v.real();
  out[1] = v.imag();
}

void put_matrix(const asymptotics::PropagatorMatrix& g, double* out) {
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) put_cplx(g(k, l), out + 2 * (2 * (k - 1) + (l - 1)));
}

Direction dir(fc_direction d) { return d == FC_RIGHT ? Direction::Right : Direction::Left; }

std::optional<long> edge_arg(long e) { return e < 0 ? std::nullopt : std::optional<long>(e); }

}  // namespace

extern "C" {

const char* fc_status_string(fc_status status) {
  switch (status) {
    case FC_OK: return "ok";
    case FC_INVALID_ARGUMENT: return "invalid argument";
    case FC_OUT_OF_DOMAIN: return "out of domain";
    case FC_NOT_CONVERGED: return "not converged";
    case FC_INFEASIBLE: return "infeasible";
    case FC_SIZE_LIMIT: return "size limit exceeded";
    case FC_ZERO_DENOMINATOR: return "zero denominator";
    case FC_BUFFER_TOO_SMALL: return "buffer too small";
    case FC_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* fc_last_error(void) { return g_last_error.c_str(); }

const char* fc_version(void) { return "0.1.0"; }

// ---------------------------------------------------------------- parameters

fc_status fc_params_create(double m, double eps, fc_params** out) {
  return guard([&] {
    need(out);
    *out = new fc_params{LatticeParams(m, eps)};
  });
}

void fc_params_destroy(fc_params* p) { delete p; }

double fc_params_mu(const fc_params* p) { return p ? p->p.mu() : 0.0; }

// ---------------------------------------------------------------- lattice

fc_status fc_amplitude(const fc_params* p, long ix, long it, double* a1, double* a2) {
  return guard([&] {
    need(p, a1, a2);
    put_pair(lattice::amplitude_dp(ix, it, p->p), a1, a2);
  });
}

fc_status fc_probability(const fc_params* p, long ix, long it, double* out) {
  return guard([&] {
    need(p, out);
    *out = lattice::probability(ix, it, p->p);
  });
}

fc_status fc_amplitude_exact(fc_exact_method method, long ix, long it, char* A1, size_t A1_size, char* A2,
                             size_t A2_size, double* a1, double* a2) {
  lattice::ExactAmplitude e;
  const fc_status s = guard([&] {
    switch (method) {
      case FC_EXACT_DP: e = lattice::amplitude_exact(ix, it); break;
      case FC_EXACT_EXPLICIT: e = closed_forms::explicit_exact(ix, it); break;
      case FC_EXACT_ALT_A: e = closed_forms::alt_explicit_basic(ix, it, closed_forms::AltVariant::A); break;
      case FC_EXACT_ALT_B: e = closed_forms::alt_explicit_basic(ix, it, closed_forms::AltVariant::B); break;
      default: fail(ErrorCode::InvalidArgument, "unknown exact method");
    }
    if (a1 && a2) put_pair(e.to_pair(), a1, a2);
  });
  if (s != FC_OK) return s;
  const std::string s1 = e.A1.get_str(), s2 = e.A2.get_str();
  if (A1 && (s1.size() + 1 > A1_size)) return set_error(FC_BUFFER_TOO_SMALL, "A1 buffer too small");
  if (A2 && (s2.size() + 1 > A2_size)) return set_error(FC_BUFFER_TOO_SMALL, "A2 buffer too small");
  if (A1) std::memcpy(A1, s1.c_str(), s1.size() + 1);
  if (A2) std::memcpy(A2, s2.c_str(), s2.size() + 1);
  return FC_OK;
}

fc_status fc_grid_create(const fc_params* p, long it_max, fc_grid** out) {
  return guard([&] {
    need(p, out);
    *out = new fc_grid{lattice::amplitude_grid(it_max, p->p)};
  });
}

void fc_grid_destroy(fc_grid* g) { delete g; }

long fc_grid_rows(const fc_grid* g) { return g ? static_cast<long>(g->rows.size()) : 0; }

fc_status fc_grid_entry(const fc_grid* g, long it, long j, long* ix, double* a1, double* a2) {
  return guard([&] {
    need(g, ix, a1, a2);
    require(it >= 1 && it <= static_cast<long>(g->rows.size()), ErrorCode::InvalidArgument, "row out of range");
    const auto& row = g->rows[it - 1];
    require(j >= 0 && j < static_cast<long>(row.size()), ErrorCode::InvalidArgument, "column out of range");
    *ix = row.ix_at(j);
    put_pair(row[j], a1, a2);
  });
}

fc_status fc_absorption_create(fc_absorption** out) {
  return guard([&] {
    need(out);
    *out = new fc_absorption{};
  });
}

void fc_absorption_destroy(fc_absorption* b) { delete b; }

fc_status fc_absorption_add_site(fc_absorption* b, long ix, long it) {
  return guard([&] {
    need(b);
    b->set.add_site(ix, it);
  });
}

fc_status fc_absorption_add_line(fc_absorption* b, long ix) {
  return guard([&] {
    need(b);
    b->set.add_line(ix);
  });
}

fc_status fc_amplitude_bypass(const fc_params* p, const fc_absorption* b, long ix, long it, double* a1, double* a2) {
  return guard([&] {
    need(p, b, a1, a2);
    put_pair(lattice::amplitude_bypass(ix, it, p->p, b->set), a1, a2);
  });
}

fc_status fc_absorption_partial_sums(const fc_params* p, const fc_absorption* b, long t_max, double* out) {
  return guard([&] {
    need(p, b, out);
    const auto sums = lattice::absorption_partial_sums(t_max, b->set, p->p);
    std::copy(sums.begin(), sums.end(), out);
  });
}

fc_status fc_gauge_create(fc_gauge** out) {
  return guard([&] {
    need(out);
    *out = new fc_gauge{};
  });
}

fc_status fc_gauge_create_homogeneous(fc_gauge** out) {
  return guard([&] {
    need(out);
    *out = new fc_gauge{lattice::GaugeField::homogeneous()};
  });
}

void fc_gauge_destroy(fc_gauge* u) { delete u; }

fc_status fc_gauge_set(fc_gauge* u, long x2, long t2, double re, double im) {
  return guard([&] {
    need(u);
    u->field.set(x2, t2, cplx(re, im));
  });
}

fc_status fc_amplitude_field(const fc_gauge* u, long ix, long it, double out[4]) {
  return guard([&] {
    need(u, out);
    const auto v = lattice::amplitude_field(ix, it, u->field);
    put_cplx(v.a1, out);
    put_cplx(v.a2, out + 2);
  });
}

fc_status fc_field_chirality_series(const fc_gauge* u, long t_max, double* out) {
  return guard([&] {
    need(u, out);
    const auto s = lattice::field_chirality_series(t_max, u->field);
    std::copy(s.begin(), s.end(), out);
  });
}

fc_status fc_restricted_amplitude(const fc_params* p, long dx, long dt, fc_direction end, double* out) {
  return guard([&] {
    need(p, out);
    *out = lattice::restricted_amplitude(dx, dt, dir(end), p->p);
  });
}

fc_status fc_chirality_flip_sum(long t, double* out) {
  return guard([&] {
    need(out);
    *out = lattice::chirality_flip_sum(t);
  });
}

static lattice::PairQuery to_query(const fc_pair_query* q) {
  lattice::PairQuery r;
  r.x0 = q->x0;
  r.x = q->x;
  r.x2 = q->x2;
  r.t = q->t;
  r.end = dir(q->end);
  r.end2 = dir(q->end2);
  return r;
}

fc_status fc_pair_amplitude(const fc_params* p, const fc_pair_query* q, double* re, double* im) {
  return guard([&] {
    need(p, q, re, im);
    const cplx v = lattice::pair_amplitude(to_query(q), p->p);
    *re = v.real();
    *im = v.imag();
  });
}

fc_status fc_pair_probability(const fc_params* p, const fc_pair_query* q, double* out) {
  return guard([&] {
    need(p, q, out);
    *out = lattice::pair_probability(to_query(q), p->p);
  });
}

// ---------------------------------------------------------------- closed forms

fc_status fc_explicit_amplitude(long ix, long it, double mu, double* a1, double* a2) {
  return guard([&] {
    need(a1, a2);
    put_pair(closed_forms::explicit_amplitude(ix, it, mu), a1, a2);
  });
}

fc_status fc_particular_values(long k, long t, double* a1, double* a2) {
  return guard([&] {
    need(a1, a2);
    put_pair(closed_forms::particular_values_poly(k, t).to_pair(), a1, a2);
  });
}

fc_status fc_young_counts(long h, long w, char* n_even, size_t even_size, char* n_odd, size_t odd_size) {
  closed_forms::YoungCount c;
  const fc_status s = guard([&] { c = closed_forms::young_counts(h, w); });
  if (s != FC_OK) return s;
  const std::string e = c.n_even.get_str(), o = c.n_odd.get_str();
  if (!n_even || !n_odd) return set_error(FC_INVALID_ARGUMENT, "null pointer argument");
  if (e.size() + 1 > even_size || o.size() + 1 > odd_size) return set_error(FC_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(n_even, e.c_str(), e.size() + 1);
  std::memcpy(n_odd, o.c_str(), o.size() + 1);
  return FC_OK;
}

fc_status fc_young_delta(long h, long w, long long* out) {
  return guard([&] {
    need(out);
    const mpz_class d = closed_forms::young_delta(h, w);
    require(d.fits_slong_p(), ErrorCode::SizeLimit, "difference does not fit in 64 bits");
    *out = d.get_si();
  });
}

// ---------------------------------------------------------------- special functions

static fc_status specfun_out(const specfun::SpecfunResult& r, double* value, double* est_error) {
  *value = r.value;
  if (est_error) *est_error = r.est_error;
  return FC_OK;
}

fc_status fc_airy(double x, double* value, double* est_error) {
  return guard([&] {
    need(value);
    specfun_out(specfun::airy(x), value, est_error);
  });
}

fc_status fc_bessel_j(int n, double z, double* value, double* est_error) {
  return guard([&] {
    need(value);
    specfun_out(specfun::bessel_j(n, z), value, est_error);
  });
}

fc_status fc_bessel_y(int n, double z, double* value, double* est_error) {
  return guard([&] {
    need(value);
    specfun_out(specfun::bessel_y(n, z), value, est_error);
  });
}

fc_status fc_bessel_k(int n, double z, double* value, double* est_error) {
  return guard([&] {
    need(value);
    specfun_out(specfun::bessel_k(n, z), value, est_error);
  });
}

// ---------------------------------------------------------------- spectral

fc_status fc_omega(const fc_params* p, double momentum, double* out) {
  return guard([&] {
    need(p, out);
    *out = spectral::omega(momentum, p->p);
  });
}

fc_status fc_fourier_amplitude(const fc_params* p, long ix, long it, double* a1, double* a2) {
  return guard([&] {
    need(p, a1, a2);
    put_pair(spectral::fourier_amplitude(ix, it, p->p), a1, a2);
  });
}

fc_status fc_anti_amplitude(const fc_params* p, long ix, long it, fc_anti* out) {
  return guard([&] {
    need(p, out);
    const auto v = spectral::anti_amplitude(ix, it, p->p);
    out->odd = v.parity == spectral::Parity::Odd ? 1 : 0;
    put_cplx(v.A1, out->A1);
    put_cplx(v.A2, out->A2);
    out->b1 = v.b1;
    out->b2 = v.b2;
    out->residue = v.residue;
  });
}

double fc_gauss_constant(void) { return spectral::gauss_constant(); }

double fc_inverse_lemniscate_constant(void) { return spectral::inverse_lemniscate_constant(); }

static spectral::Dispersion from_c(const fc_dispersion* d) {
  spectral::Dispersion r;
  r.lambda = d->lambda;
  r.period = d->period;
  r.alpha = d->alpha;
  r.a = cplx(d->a[0], d->a[1]);
  r.b = cplx(d->b[0], d->b[1]);
  r.params = LatticeParams(d->m, d->eps);
  return r;
}

fc_status fc_dispersion_solve(const fc_params* p, double lambda, const double a1_0[2], const double a2_0[2],
                              fc_dispersion* out) {
  return guard([&] {
    need(p, a1_0, a2_0, out);
    const auto d = spectral::dispersion_solve(lambda, p->p, cplx(a1_0[0], a1_0[1]), cplx(a2_0[0], a2_0[1]));
    out->lambda = d.lambda;
    out->period = d.period;
    out->alpha = d.alpha;
    put_cplx(d.a, out->a);
    put_cplx(d.b, out->b);
    out->m = d.params.m();
    out->eps = d.params.eps();
  });
}

fc_status fc_wave_eval(const fc_dispersion* d, long ix, long it, double out[4]) {
  return guard([&] {
    need(d, out);
    const auto v = spectral::wave_eval(from_c(d), ix, it);
    put_cplx(v.first, out);
    put_cplx(v.second, out + 2);
  });
}

fc_status fc_wave_residual(const fc_dispersion* d, long x0, long t0, long nx, long nt, double* out) {
  return guard([&] {
    need(d, out);
    *out = spectral::wave_residual(from_c(d), x0, t0, nx, nt);
  });
}

// ---------------------------------------------------------------- asymptotics

fc_status fc_theta(const fc_params* p, double x, double t, double* out) {
  return guard([&] {
    need(p, out);
    *out = asymptotics::theta(x, t, p->p);
  });
}

fc_status fc_approx_between_peaks(const fc_params* p, long ix, long it, double* a1, double* a2) {
  return guard([&] {
    need(p, a1, a2);
    put_pair(asymptotics::approx_between_peaks(ix, it, p->p), a1, a2);
  });
}

fc_status fc_approx_airy(const fc_params* p, long ix, long it, double* a1, double* a2) {
  return guard([&] {
    need(p, a1, a2);
    put_pair(asymptotics::approx_airy(ix, it, p->p), a1, a2);
  });
}

fc_status fc_approx_outside(const fc_params* p, long ix, long it, double* a1, double* a2) {
  return guard([&] {
    need(p, a1, a2);
    put_pair(asymptotics::approx_outside(ix, it, p->p), a1, a2);
  });
}

fc_status fc_anti_asymptotic(const fc_params* p, long ix, long it, double* b1, double* b2) {
  return guard([&] {
    need(p, b1, b2);
    put_pair(asymptotics::anti_asymptotic(ix, it, p->p), b1, b2);
  });
}

fc_status fc_simple_asymptotic(const fc_params* p, double x, double t, double* re, double* im) {
  return guard([&] {
    need(p, re, im);
    const cplx v = asymptotics::simple_asymptotic(x, t, p->p);
    *re = v.real();
    *im = v.imag();
  });
}

fc_status fc_rate_H(const fc_params* p, double v, double* out) {
  return guard([&] {
    need(p, out);
    *out = asymptotics::rate_H(v, p->p);
  });
}

fc_status fc_free_energy(const fc_params* p, double v, double t, double* out) {
  return guard([&] {
    need(p, out);
    *out = asymptotics::free_energy(v, t, p->p);
  });
}

fc_status fc_limiting_F(const fc_params* p, double v, double* out) {
  return guard([&] {
    need(p, out);
    *out = asymptotics::limiting_F(v, p->p);
  });
}

fc_status fc_limiting_density(const fc_params* p, double v, double* out) {
  return guard([&] {
    need(p, out);
    *out = asymptotics::limiting_density(v, p->p);
  });
}

fc_status fc_limiting_moment(const fc_params* p, int r, double* out) {
  return guard([&] {
    need(p, out);
    *out = asymptotics::limiting_moment(r, p->p);
  });
}

fc_status fc_empirical_cdf(const fc_params* p, double v, long it, double* out) {
  return guard([&] {
    need(p, out);
    *out = asymptotics::empirical_cdf(v, it, p->p);
  });
}

fc_status fc_moment(const fc_params* p, int r, long it, double* out) {
  return guard([&] {
    need(p, out);
    *out = asymptotics::moment(r, it, p->p);
  });
}

fc_status fc_distribution_create(const fc_params* p, long it, fc_distribution** out) {
  return guard([&] {
    need(p, out);
    *out = new fc_distribution{asymptotics::EmpiricalDistribution(lattice::amplitude_row(it, p->p))};
  });
}

void fc_distribution_destroy(fc_distribution* d) { delete d; }

fc_status fc_distribution_cdf(const fc_distribution* d, double v, double* out) {
  return guard([&] {
    need(d, out);
    *out = d->dist.cdf(v);
  });
}

fc_status fc_distribution_moment(const fc_distribution* d, int r, double* out) {
  return guard([&] {
    need(d, out);
    *out = d->dist.moment(r);
  });
}

fc_status fc_continuum_approx(const fc_params* p, double x, double t, double* re, double* im) {
  return guard([&] {
    need(p, re, im);
    const cplx v = asymptotics::continuum_approx(x, t, p->p);
    *re = v.real();
    *im = v.imag();
  });
}

fc_status fc_retarded_G(double x, double t, double m, double out[8]) {
  return guard([&] {
    need(out);
    put_matrix(asymptotics::retarded_G(x, t, m), out);
  });
}

fc_status fc_feynman_G(double x, double t, double m, double out[8]) {
  return guard([&] {
    need(out);
    put_matrix(asymptotics::feynman_G(x, t, m), out);
  });
}

fc_status fc_feynman_kernel(double x, double t, double m, double* re, double* im) {
  return guard([&] {
    need(re, im);
    const cplx v = asymptotics::feynman_kernel(x, t, m);
    *re = v.real();
    *im = v.imag();
  });
}

fc_status fc_continuum_sup_error(double m, double t, double eps, double delta, double* out) {
  return guard([&] {
    need(out);
    *out = asymptotics::continuum_sup_error(m, t, eps, delta);
  });
}

fc_status fc_concentration_mass(double m, double t, double eps, double delta, double* out) {
  return guard([&] {
    need(out);
    *out = asymptotics::concentration_mass(m, t, eps, delta);
  });
}

fc_status fc_algorithm1_eps(double m, double x, double t, double delta, double* out) {
  return guard([&] {
    need(out);
    *out = asymptotics::algorithm1_eps(m, x, t, delta);
  });
}

fc_status fc_algorithm1_run(double m, double x, double t, double delta, double eps_override, fc_algorithm1* out) {
  return guard([&] {
    need(out);
    const auto r = asymptotics::algorithm1_run(
        m, x, t, delta, eps_override > 0.0 ? std::optional<double>(eps_override) : std::nullopt);
    out->eps = r.eps;
    out->prescribed = r.prescribed;
    out->feasible = r.feasible ? 1 : 0;
    out->ran = r.ran ? 1 : 0;
    out->rows = r.rows;
    put_matrix(r.approx, out->approx);
    put_matrix(r.exact, out->exact);
    out->error = r.error;
  });
}

fc_status fc_triple_limit(fc_triple_sequence kind, double m, double eps, long n_min, long n_max, double* records,
                          size_t capacity, size_t* count) {
  return guard([&] {
    need(records, count);
    require(n_min >= 1 && n_max >= n_min, ErrorCode::InvalidArgument, "need 1 <= n_min <= n_max");
    std::vector<std::array<double, 3>> seq;
    switch (kind) {
      case FC_TRIPLE_SHRINKING: seq = asymptotics::counterexample_shrinking(n_min, n_max); break;
      case FC_TRIPLE_FIXED: seq = asymptotics::counterexample_fixed(eps, n_min, n_max); break;
      case FC_TRIPLE_ADMISSIBLE: {
        std::vector<long> ns;
        for (long n = n_min; n <= n_max; n *= 2) ns.push_back(n);
        seq = asymptotics::admissible_sequence(ns);
        break;
      }
      default: fail(ErrorCode::InvalidArgument, "unknown sequence kind");
    }
    if (seq.size() > capacity) seq.resize(capacity);
    const auto samples = asymptotics::triple_limit_check(seq, m);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      double* r = records + 5 * i;
      r[0] = samples[i].x;
      r[1] = samples[i].t;
      r[2] = samples[i].eps;
      r[3] = samples[i].ratio.real();
      r[4] = samples[i].ratio.imag();
    }
    *count = samples.size();
  });
}

// ---------------------------------------------------------------- combinatorics

fc_status fc_torus_create(long T, double m, double eps, double delta, fc_torus** out) {
  return guard([&] {
    need(out);
    *out = new fc_torus{combinatorics::TorusLattice(T, m, eps, delta)};
  });
}

void fc_torus_destroy(fc_torus* lat) { delete lat; }

long fc_torus_num_edges(const fc_torus* lat) { return lat ? lat->lat.num_edges() : 0; }

fc_status fc_torus_source_edge(const fc_torus* lat, long* out) {
  return guard([&] {
    need(lat, out);
    *out = combinatorics::source_edge(lat->lat);
  });
}

fc_status fc_torus_sink_edge(const fc_torus* lat, long ix, long it, int k, long* out) {
  return guard([&] {
    need(lat, out);
    *out = combinatorics::sink_edge(lat->lat, ix, it, k);
  });
}

fc_status fc_torus_edge(const fc_torus* lat, long e, long* X, long* Y, fc_direction* d) {
  return guard([&] {
    need(lat, X, Y, d);
    require(e >= 0 && e < lat->lat.num_edges(), ErrorCode::InvalidArgument, "edge id out of range");
    const long p = lat->lat.edge_start(e);
    *X = lat->lat.point_x(p);
    *Y = lat->lat.point_y(p);
    *d = lat->lat.edge_dir(e) == Direction::Right ? FC_RIGHT : FC_LEFT;
  });
}

fc_status fc_torus_enumerate(const fc_torus* lat, long source, long sink, double* re, double* im, long* count) {
  return guard([&] {
    need(lat, re, im);
    const auto r = combinatorics::enumerate_configs(lat->lat, edge_arg(source), edge_arg(sink));
    *re = r.sum.real();
    *im = r.sum.imag();
    if (count) *count = r.count;
  });
}

fc_status fc_finite_propagator(const fc_torus* lat, long source, long sink, double* re, double* im) {
  return guard([&] {
    need(lat, re, im);
    const cplx v = combinatorics::finite_propagator(lat->lat, source, sink);
    *re = v.real();
    *im = v.imag();
  });
}

fc_status fc_config_list_create(const fc_torus* lat, long source, long sink, fc_config_list** out) {
  return guard([&] {
    need(lat, out);
    *out = new fc_config_list{combinatorics::list_configs(lat->lat, edge_arg(source), edge_arg(sink))};
  });
}

void fc_config_list_destroy(fc_config_list* l) { delete l; }

long fc_config_list_size(const fc_config_list* l) { return l ? static_cast<long>(l->configs.size()) : 0; }

fc_status fc_config_arrow(const fc_config_list* l, long i, double* re, double* im) {
  return guard([&] {
    need(l, re, im);
    require(i >= 0 && i < static_cast<long>(l->configs.size()), ErrorCode::InvalidArgument, "index out of range");
    *re = l->configs[i].arrow.real();
    *im = l->configs[i].arrow.imag();
  });
}

fc_status fc_config_describe(const fc_config_list* l, long i, char* buf, size_t size) {
  std::string text;
  const fc_status s = guard([&] {
    need(l);
    require(i >= 0 && i < static_cast<long>(l->configs.size()), ErrorCode::InvalidArgument, "index out of range");
    const auto& c = l->configs[i];
    std::ostringstream os;
    auto list = [&](const std::vector<long>& es) {
      os << '[';
      for (std::size_t k = 0; k < es.size(); ++k) os << (k ? " " : "") << es[k];
      os << ']';
    };
    os << "loops=";
    for (const auto& loop : c.loops) list(loop);
    if (c.path) {
      os << " path=";
      list(*c.path);
    }
    text = os.str();
  });
  if (s != FC_OK) return s;
  if (!buf) return set_error(FC_INVALID_ARGUMENT, "null pointer argument");
  if (text.size() + 1 > size) return set_error(FC_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return FC_OK;
}

fc_status fc_anti_checker_estimate(long ix, long it, double m, double eps, long T, fc_anti_checker* out) {
  return guard([&] {
    need(out);
    const auto e = combinatorics::anti_checker_estimate(ix, it, m, eps, T);
    for (int k = 0; k < 2; ++k) {
      for (int i = 0; i < 3; ++i) put_cplx(e.ladder[k][i], out->ladder[k][i]);
      put_cplx(e.extrapolated[k], out->extrapolated[k]);
      put_cplx(e.fourier[k], out->fourier[k]);
    }
    for (int i = 0; i < 3; ++i) out->deltas[i] = e.deltas[i];
  });
}

// ---------------------------------------------------------------- verification

void fc_verify_default_options(fc_verify_options* out) {
  if (!out) return;
  const verify::SuiteOptions d;
  out->t_max = d.t_max;
  out->exact_t_max = d.exact_t_max;
  out->b_t_max = d.b_t_max;
  out->m = d.params.m();
  out->eps = d.params.eps();
  out->tol = d.tol;
}

long fc_verify_suite_count(void) { return static_cast<long>(verify::all_suites().size()); }

const char* fc_verify_suite_name(long i) {
  const auto all = verify::all_suites();
  if (i < 0 || i >= static_cast<long>(all.size())) return nullptr;
  return verify::suite_name(all[i]);
}

fc_status fc_verify_suite(const char* name, const fc_verify_options* opt, fc_suite_result* out) {
  return guard([&] {
    need(name, opt, out);
    verify::SuiteOptions o;
    o.t_max = opt->t_max;
    o.exact_t_max = opt->exact_t_max;
    o.b_t_max = opt->b_t_max;
    o.params = LatticeParams(opt->m, opt->eps);
    o.tol = opt->tol;
    const auto r = verify::run_suite(verify::parse_suite(name), o);
    std::memset(out->name, 0, sizeof out->name);
    std::strncpy(out->name, r.name.c_str(), sizeof out->name - 1);
    out->pass = r.pass ? 1 : 0;
    out->checks = r.checks;
    out->exact_failures = r.exact_failures;
    out->max_residual = r.max_residual;
  });
}

}  // extern "C"
