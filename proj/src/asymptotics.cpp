#include "checkers/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>

#include "checkers/specfun.hpp"

namespace checkers::asymptotics {

namespace {

bool is_black(long ix, long it) { return ((ix + it) % 2 + 2) % 2 == 0; }

double clamp_unit(double v, const char* what) {
  require(std::fabs(v) <= 1.0 + kDomainSlack, ErrorCode::OutOfDomain, what);
  return std::clamp(v, -1.0, 1.0);
}

void require_between(double x, double t, const LatticeParams& p) {
  require(t > 0.0, ErrorCode::OutOfDomain, "between-peaks formula needs t > 0");
  require(std::fabs(x) / t < 1.0 / p.norm(), ErrorCode::OutOfDomain,
          "site lies outside the region between the peaks (|x|/t < 1/sqrt(1+mu^2))");
}

void require_massive_fine(const LatticeParams& p) {
  require(p.m() > 0.0, ErrorCode::InvalidArgument, "asymptotic formulas need m > 0");
  require(p.mu() <= 1.0 + kDomainSlack, ErrorCode::OutOfDomain, "asymptotic formulas need eps <= 1/m");
}

// eps sqrt(2m/pi) (t^2 - (1+mu^2) x^2)^{-1/4}
double envelope(double x, double t, const LatticeParams& p) {
  const double n2 = 1.0 + p.mu() * p.mu();
  return p.eps() * std::sqrt(2.0 * p.m() / M_PI) * std::pow(t * t - n2 * x * x, -0.25);
}

// Long-double DP for values that underflow double far outside the peaks.
long double log_probability(long ix, long it, const LatticeParams& p) {
  using ld = long double;
  const ld mu = p.mu();
  const ld c = 1.0L / std::sqrt(1.0L + mu * mu);
  std::vector<ld> a1{0.0L, 0.0L}, a2{0.0L, 1.0L};
  for (long t = 1; t < it; ++t) {
    const auto n = static_cast<std::size_t>(t);
    std::vector<ld> b1(n + 2, 0.0L), b2(n + 2, 0.0L);
    for (std::size_t j = 0; j <= n + 1; ++j) {
      if (j <= n) b1[j] = c * (a1[j] + mu * a2[j]);
      if (j >= 1) b2[j] = c * (a2[j - 1] - mu * a1[j - 1]);
    }
    a1.swap(b1);
    a2.swap(b2);
  }
  require(std::labs(ix) <= it && is_black(ix, it), ErrorCode::OutOfDomain, "site must be a black in-cone site");
  const auto j = static_cast<std::size_t>((ix + it) / 2);
  return std::log(a1[j] * a1[j] + a2[j] * a2[j]);
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

long lattice_round(double v) { return std::lround(v); }

long lattice_ceil(double v) { return static_cast<long>(std::ceil(v - 1e-9 * std::max(1.0, std::fabs(v)))); }

// ---------------------------------------------------------------------------

double theta(double x, double t, const LatticeParams& params) {
  require(t > 0.0 && std::fabs(x) < t, ErrorCode::OutOfDomain, "theta needs |x| < t");
  const double mu = params.mu();
  const double eps = params.eps();
  const double s = std::sqrt(t * t - x * x);
  const double u1 = clamp_unit(mu * t / (params.norm() * s), "theta is defined only between the peaks");
  const double u2 = clamp_unit(mu * x / s, "theta is defined only between the peaks");
  return (t / eps) * std::asin(u1) - (x / eps) * std::asin(u2) + M_PI / 4.0;
}

AmplitudePair approx_between_peaks(long ix, long it, const LatticeParams& params) {
  require_massive_fine(params);
  require(is_black(ix, it), ErrorCode::OutOfDomain, "query site must be black");
  const double eps = params.eps();
  const double t = static_cast<double>(it - 1) * eps;
  const double x1 = static_cast<double>(ix) * eps;
  const double x2 = static_cast<double>(ix - 1) * eps;
  require_between(x1, t, params);
  require_between(x2, t, params);
  AmplitudePair out;
  out.a1 = envelope(x1, t, params) * std::sin(theta(x1, t, params));
  out.a2 = envelope(x2, t, params) * std::sqrt((t + x2) / (t - x2)) * std::cos(theta(x2, t, params));
  return out;
}

// ---------------------------------------------------------------------------

double airy_delta(double x, double t, const LatticeParams& params) {
  require(params.m() > 0.0 && t > 0.0, ErrorCode::InvalidArgument, "Airy argument needs m > 0 and t > 0");
  const double eps = params.eps();
  const double scale = std::cbrt(2.0 / (params.m() * params.m() * eps * t));
  return scale * (params.norm() * x - t) / eps;
}

AmplitudePair approx_airy(long ix, long it, const LatticeParams& params, double window) {
  require(params.m() > 0.0, ErrorCode::InvalidArgument, "Airy formula needs m > 0");
  require(is_black(ix, it) && it >= 2, ErrorCode::OutOfDomain, "query site must be black with it >= 2");
  const double eps = params.eps();
  const double m = params.m();
  const double tn = static_cast<double>(it - 1) * eps;
  const double scale = std::cbrt(2.0 / (m * m * eps * tn));

  auto in_window = [&](double xn) {
    return std::fabs(xn / tn - 1.0 / params.norm()) < window * std::pow(tn, -2.0 / 3.0);
  };

  AmplitudePair out;
  // a1(+-x_n, t_n + eps) with x_n = |ix| eps.
  {
    const long xn_i = std::labs(ix);
    const double xn = static_cast<double>(xn_i) * eps;
    require(in_window(xn), ErrorCode::OutOfDomain, "site lies outside the Airy window around the peaks");
    const long k = (it - 1 - xn_i - 1) / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out.a1 = sign * m * eps * scale * specfun::airy(airy_delta(xn, tn, params)).value;
  }
  // a2(+-x_n + eps, t_n + eps) with +-x_n = (ix - 1) eps.
  {
    const long shifted = ix - 1;
    const long xn_i = std::labs(shifted);
    const double xn = static_cast<double>(xn_i) * eps;
    require(in_window(xn), ErrorCode::OutOfDomain, "site lies outside the Airy window around the peaks");
    const long k = (it - 1 - xn_i) / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double pm = shifted >= 0 ? 1.0 : -1.0;
    out.a2 = sign * (params.norm() + pm) * scale * specfun::airy(airy_delta(xn, tn, params)).value;
  }
  return out;
}

// ---------------------------------------------------------------------------

double rate_H(double v, const LatticeParams& params) {
  require(params.m() > 0.0, ErrorCode::InvalidArgument, "rate function needs m > 0");
  const double av = std::fabs(v);
  require(av < 1.0, ErrorCode::OutOfDomain, "rate function needs |v| < 1");
  require(av >= 1.0 / params.norm() - kDomainSlack, ErrorCode::OutOfDomain,
          "rate function is defined outside the peaks only (|v| > 1/sqrt(1+mu^2))");
  const double mu = params.mu();
  const double w = std::sqrt(1.0 - v * v);
  return -2.0 * specfun::arcosh(mu / (params.norm() * w)) + 2.0 * av * specfun::arcosh(mu * av / w);
}

AmplitudePair approx_outside(long ix, long it, const LatticeParams& params) {
  require(params.m() > 0.0, ErrorCode::InvalidArgument, "outside formula needs m > 0");
  require(is_black(ix, it) && it >= 2, ErrorCode::OutOfDomain, "query site must be black with it >= 2");
  const double eps = params.eps();
  const double m = params.m();
  const double n2 = 1.0 + params.mu() * params.mu();
  const double tn = static_cast<double>(it - 1) * eps;
  auto core = [&](double xn, long parity_exp, bool second) {
    const double v = xn / tn;
    require(std::fabs(v) > 1.0 / std::sqrt(n2) && std::fabs(v) < 1.0, ErrorCode::OutOfDomain,
            "site lies outside the region beyond the peaks");
    const double sign = (parity_exp % 2 == 0) ? 1.0 : -1.0;
    double val = eps * std::sqrt(m / (2.0 * M_PI * tn)) * sign * std::pow(n2 * v * v - 1.0, -0.25) *
                 std::exp(-tn * rate_H(v, params) / (2.0 * eps));
    if (second) val *= std::sqrt((1.0 + v) / (1.0 - v));
    return val;
  };
  AmplitudePair out;
  out.a1 = core(static_cast<double>(ix) * eps, (it - 1 - std::labs(ix) - 1) / 2, false);
  out.a2 = core(static_cast<double>(ix - 1) * eps, (it - 1 - std::labs(ix - 1)) / 2, true);
  return out;
}

double free_energy(double v, double t, const LatticeParams& params) {
  const double eps = params.eps();
  const long half = lattice_round(t / (2.0 * eps));
  require(half >= 1 && std::fabs(2.0 * eps * half - t) < 1e-9 * std::max(1.0, t), ErrorCode::InvalidArgument,
          "free energy needs t/(2 eps) to be a positive integer");
  const long it = 2 * half;
  const long ix = 2 * lattice_ceil(v * t / (2.0 * eps));
  require(std::labs(ix) <= it, ErrorCode::OutOfDomain, "rounded site lies outside the light cone");
  return static_cast<double>(log_probability(ix, it, params)) / t;
}

// ---------------------------------------------------------------------------

double limiting_F(double v, const LatticeParams& params) {
  const double n = params.norm();
  if (v <= -1.0 / n) return 0.0;
  if (v >= 1.0 / n) return 1.0;
  const double arg = (1.0 - n * n * v) / (n * (1.0 - v));
  return std::acos(std::clamp(arg, -1.0, 1.0)) / M_PI;
}

double limiting_density(double v, const LatticeParams& params) {
  const double n = params.norm();
  if (std::fabs(v) >= 1.0 / n) return 0.0;
  return params.mu() / (M_PI * (1.0 - v) * std::sqrt(1.0 - n * n * v * v));
}

double limiting_moment(int r, const LatticeParams& params) {
  require(r >= 0, ErrorCode::InvalidArgument, "moment order must be >= 0");
  const double n = params.norm();
  const double mu = params.mu();
  // v = sin(phi)/n removes the inverse square-root singularities at the edges.
  auto f = [&](double phi) {
    const double v = std::sin(phi) / n;
    return std::pow(v, r) * mu / (M_PI * n * (1.0 - v));
  };
  return simpson(f, -M_PI / 2.0, M_PI / 2.0, 4096);
}

EmpiricalDistribution::EmpiricalDistribution(const lattice::Row& row) : it_(row.it()) {
  double acc = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double p = row[j].probability();
    acc += p;
    v_.push_back(static_cast<double>(row.ix_at(j)) / static_cast<double>(it_));
    p_.push_back(p);
    cum_.push_back(acc);
  }
}

double EmpiricalDistribution::cdf(double v) const {
  auto pos = std::upper_bound(v_.begin(), v_.end(), v + 1e-12);
  if (pos == v_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(pos - v_.begin()) - 1];
}

double EmpiricalDistribution::moment(int r) const {
  double s = 0.0;
  for (std::size_t j = 0; j < v_.size(); ++j) s += std::pow(v_[j], r) * p_[j];
  return s;
}

double empirical_cdf(double v, long it, const LatticeParams& params) {
  return EmpiricalDistribution(lattice::amplitude_row(it, params)).cdf(v);
}

double moment(int r, long it, const LatticeParams& params) {
  return EmpiricalDistribution(lattice::amplitude_row(it, params)).moment(r);
}

// ---------------------------------------------------------------------------

cplx continuum_approx(double x, double t, const LatticeParams& params) {
  require(std::fabs(x) < t, ErrorCode::OutOfDomain, "continuum formula needs |x| < t");
  const double m = params.m();
  const double s = std::sqrt(t * t - x * x);
  const double j0 = specfun::bessel_j(0, m * s).value;
  const double j1 = specfun::bessel_j(1, m * s).value;
  return m * params.eps() * cplx(j0, -((t + x) / s) * j1);
}

PropagatorMatrix retarded_G(double x, double t, double m) {
  require(m >= 0.0, ErrorCode::InvalidArgument, "mass must be >= 0");
  require(std::fabs(x) != t, ErrorCode::OutOfDomain, "propagator is singular on the light cone");
  PropagatorMatrix g;
  if (t < std::fabs(x)) return g;
  const double s = std::sqrt(t * t - x * x);
  const double j0 = specfun::bessel_j(0, m * s).value;
  const double j1 = specfun::bessel_j(1, m * s).value;
  g(1, 1) = 0.5 * m * j0;
  g(2, 2) = 0.5 * m * j0;
  g(1, 2) = -0.5 * m * std::sqrt((t + x) / (t - x)) * j1;
  g(2, 1) = 0.5 * m * std::sqrt((t - x) / (t + x)) * j1;
  return g;
}

PropagatorMatrix feynman_G(double x, double t, double m) {
  require(m > 0.0, ErrorCode::InvalidArgument, "Feynman propagator needs m > 0");
  require(std::fabs(x) != std::fabs(t), ErrorCode::OutOfDomain, "propagator is singular on the light cone");
  const double s = std::sqrt(std::fabs(t * t - x * x));
  PropagatorMatrix g;
  if (std::fabs(x) < std::fabs(t)) {
    const cplx h0(specfun::bessel_j(0, m * s).value, -specfun::bessel_y(0, m * s).value);
    const cplx h1(specfun::bessel_j(1, m * s).value, -specfun::bessel_y(1, m * s).value);
    g(1, 1) = 0.25 * m * h0;
    g(2, 2) = 0.25 * m * h0;
    g(1, 2) = -0.25 * m * ((t + x) / s) * h1;
    g(2, 1) = 0.25 * m * ((t - x) / s) * h1;
  } else {
    const cplx pre(0.0, m / (2.0 * M_PI));
    const double k0 = specfun::bessel_k(0, m * s).value;
    const double k1 = specfun::bessel_k(1, m * s).value;
    g(1, 1) = pre * k0;
    g(2, 2) = pre * k0;
    g(1, 2) = pre * ((t + x) / s) * k1;
    g(2, 1) = pre * ((x - t) / s) * k1;
  }
  return g;
}

cplx feynman_kernel(double x, double t, double m) {
  require(t > 0.0 && m > 0.0, ErrorCode::InvalidArgument, "free-particle kernel needs t > 0 and m > 0");
  return std::sqrt(m / (2.0 * M_PI * t)) * std::polar(1.0, m * x * x / (2.0 * t) - M_PI / 4.0);
}

double continuum_sup_error(double m, double t, double eps, double delta) {
  const LatticeParams p(m, eps);
  const long it = lattice_round(t / eps);
  require(it >= 1 && it % 2 == 0, ErrorCode::InvalidArgument, "t/eps must be an even integer");
  const auto row = lattice::amplitude_row(it, p);
  const double lim = t - delta;
  double worst = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const long ix = row.ix_at(j);
    const double x = static_cast<double>(ix) * eps;
    if (ix % 2 != 0 || !(std::fabs(x) < lim)) continue;
    const auto g = retarded_G(x, t, m);
    const cplx approx = row[j].value() / (2.0 * eps);
    worst = std::max(worst, std::abs(approx - g(1, 1) - cplx(0.0, 1.0) * g(1, 2)));
  }
  return worst;
}

double concentration_mass(double m, double t, double eps, double delta) {
  const LatticeParams p(m, eps);
  const long half = lattice_round(t / (2.0 * eps));
  require(half >= 1, ErrorCode::InvalidArgument, "t/(2 eps) must be a positive integer");
  const auto row = lattice::amplitude_row(2 * half, p);
  const double tt = 2.0 * half * eps;
  double mass = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double x = static_cast<double>(row.ix_at(j)) * eps;
    if (tt - std::fabs(x) <= delta + 1e-12) mass += row[j].probability();
  }
  return mass;
}

// ---------------------------------------------------------------------------

double algorithm1_eps(double m, double x, double t, double delta) {
  require(m > 0.0, ErrorCode::InvalidArgument, "Algorithm 1 needs m > 0");
  require(std::fabs(x) < t, ErrorCode::OutOfDomain, "Algorithm 1 needs |x| < t");
  require(delta > 0.0, ErrorCode::InvalidArgument, "accuracy level must be > 0");
  const double first = 1.0 / (16.0 * std::exp(3.0 * m * t));
  const double second = std::pow(delta / (9.0 * kAlgorithmC * m * std::exp(m * m * t * t)), 3.0);
  return (t - std::fabs(x)) * std::min(first, second);
}

Algorithm1Result algorithm1_run(double m, double x, double t, double delta, std::optional<double> eps_override) {
  Algorithm1Result r;
  r.prescribed = algorithm1_eps(m, x, t, delta);
  r.eps = eps_override.value_or(r.prescribed);
  require(r.eps > 0.0 && std::isfinite(r.eps), ErrorCode::InvalidArgument, "lattice step must be > 0");
  r.feasible = t / r.prescribed <= kFeasibleRows;
  r.exact = retarded_G(x, t, m);
  if (!eps_override && !r.feasible) return r;
  require(t / r.eps <= kFeasibleRows, ErrorCode::SizeLimit, "override step needs more than 1e7 rows");

  const double eps = r.eps;
  const LatticeParams p(m, eps);
  const long it = 2 * lattice_ceil(t / (2.0 * eps));
  const auto row = lattice::amplitude_row(it, p);
  const long ix_plus = 2 * lattice_ceil(x / (2.0 * eps));
  const long ix_minus = 2 * lattice_ceil(-x / (2.0 * eps));
  const auto ap = row.at(ix_plus);
  const auto am = row.at(ix_minus);
  const double scale = 1.0 / (2.0 * eps);
  r.approx(1, 1) = scale * ap.a1;
  r.approx(1, 2) = scale * ap.a2;
  r.approx(2, 1) = -scale * am.a2;
  r.approx(2, 2) = scale * ap.a1;
  r.rows = it;
  r.ran = true;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) r.error = std::max(r.error, std::abs(r.approx(k, l) - r.exact(k, l)));
  return r;
}

// ---------------------------------------------------------------------------

std::vector<TripleSample> triple_limit_check(const std::vector<std::array<double, 3>>& sequence, double m) {
  require(m > 0.0, ErrorCode::InvalidArgument, "triple limit needs m > 0");
  std::vector<TripleSample> out(sequence.size());
  // Samples sharing a step reuse one DP sweep.
  std::map<double, std::vector<std::size_t>> by_eps;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& [x, t, eps] = sequence[i];
    require(eps > 0.0 && t > 0.0, ErrorCode::InvalidArgument, "sequence needs t > 0 and eps > 0");
    by_eps[eps].push_back(i);
  }
  for (const auto& [eps, idx] : by_eps) {
    const LatticeParams p(m, eps);
    std::map<long, std::vector<std::size_t>> by_row;
    for (auto i : idx) by_row[lattice_round(sequence[i][1] / eps)].push_back(i);
    lattice::DiracStepper s(p);
    for (const auto& [it, members] : by_row) {
      while (s.it() < it) s.step();
      for (auto i : members) {
        const auto& [x, t, e] = sequence[i];
        const long ix = lattice_round(x / eps);
        require(is_black(ix, it), ErrorCode::InvalidArgument, "sequence points must be black lattice sites");
        const cplx a = s.row().at(ix).value();
        const cplx lhs = a / (2.0 * cplx(0.0, 1.0) * eps);
        const cplx rhs = std::sqrt(m / (2.0 * M_PI * t)) * std::polar(1.0, -m * t - M_PI / 4.0 + m * x * x / (2.0 * t));
        out[i] = {x, t, eps, lhs / rhs};
      }
    }
  }
  return out;
}

std::vector<std::array<double, 3>> counterexample_shrinking(long n_min, long n_max) {
  std::vector<std::array<double, 3>> seq;
  for (long n = n_min; n <= n_max; ++n) seq.push_back({0.0, 4.0 * n * n, 1.0 / (2.0 * n)});
  return seq;
}

std::vector<std::array<double, 3>> counterexample_fixed(double eps, long n_min, long n_max) {
  std::vector<std::array<double, 3>> seq;
  for (long n = n_min; n <= n_max; ++n) seq.push_back({0.0, 2.0 * n * eps, eps});
  return seq;
}

std::vector<std::array<double, 3>> admissible_sequence(const std::vector<long>& ns) {
  std::vector<std::array<double, 3>> seq;
  for (long n : ns) {
    // t/eps = N must be even so that (0, n) is a black site.
    const long N = 2 * std::lround(std::pow(static_cast<double>(n), 1.6) / 2.0);
    seq.push_back({0.0, static_cast<double>(n), static_cast<double>(n) / static_cast<double>(N)});
  }
  return seq;
}

cplx simple_asymptotic(double x, double t, const LatticeParams& params) {
  require(params.m() > 0.0, ErrorCode::InvalidArgument, "formula needs m > 0");
  require_between(x, t, params);
  const double m = params.m();
  return params.eps() * std::sqrt(2.0 * m / (M_PI * t)) * std::polar(1.0, -m * std::sqrt(t * t - x * x) + M_PI / 4.0);
}

AmplitudePair anti_asymptotic(long ix, long it, const LatticeParams& params) {
  require_massive_fine(params);
  require(!is_black(ix, it), ErrorCode::OutOfDomain, "query site must be white");
  const double eps = params.eps();
  const double t = static_cast<double>(it - 1) * eps;
  const double x1 = static_cast<double>(ix) * eps;
  const double x2 = static_cast<double>(ix - 1) * eps;
  require_between(x1, t, params);
  require_between(x2, t, params);
  AmplitudePair out;
  out.a1 = envelope(x1, t, params) * std::cos(theta(x1, t, params));
  out.a2 = -envelope(x2, t, params) * std::sqrt((t + x2) / (t - x2)) * std::sin(theta(x2, t, params));
  return out;
}

}  // namespace checkers::asymptotics
