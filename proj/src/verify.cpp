#include "checkers/verify.hpp"

#include <algorithm>
#include <cmath>
#include <array>

#include "checkers/error.hpp"
#include "checkers/lattice.hpp"
#include "checkers/spectral.hpp"

namespace checkers::verify {

namespace {

using lattice::ExactPair;
using lattice::ExactRow;
using lattice::Row;

// Grids indexed by it, zero outside the stored rows and off black sites.
struct FloatGrid {
  std::vector<Row> rows;
  AmplitudePair at(long ix, long it) const {
    if (it < 1 || it > static_cast<long>(rows.size())) return {};
    return rows[it - 1].at(ix);
  }
};

struct ExactGrid {
  std::vector<ExactRow> rows;
  ExactPair at(long ix, long it) const {
    if (it < 1 || it > static_cast<long>(rows.size())) return {0, 0};
    return rows[it - 1].at(ix);
  }
};

void exact_check(SuiteResult& r, const mpz_class& residual) {
  ++r.checks;
  if (residual != 0) {
    ++r.exact_failures;
    r.pass = false;
  }
}

void float_check(SuiteResult& r, double residual, double tol) {
  ++r.checks;
  r.max_residual = std::max(r.max_residual, residual);
  if (!(residual <= tol)) r.pass = false;
}

// Sum of P over each row; integer mode checks sum (A1^2 + A2^2) = 2^{t-1}.
void conservation(SuiteResult& r, const SuiteOptions& opt) {
  for (const auto& row : lattice::exact_rows(opt.exact_t_max)) {
    mpz_class s = 0;
    for (const auto& v : row) s += v.A1 * v.A1 + v.A2 * v.A2;
    mpz_class target = 1;
    mpz_mul_2exp(target.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(row.it() - 1));
    exact_check(r, s - target);
  }
  lattice::DiracStepper s(opt.params);
  for (;;) {
    double sum = 0.0;
    for (const auto& v : s.row()) sum += v.probability();
    float_check(r, std::fabs(sum - 1.0), opt.tol);
    if (s.it() >= opt.t_max) break;
    s.step();
  }
}

// Integer form at m = eps = 1: A(x,t+1) + 2 A(x,t-1) - A(x+1,t) - A(x-1,t) = 0.
void klein_gordon(SuiteResult& r, const SuiteOptions& opt) {
  const ExactGrid g{lattice::exact_rows(opt.exact_t_max)};
  for (long it = 2; it < opt.exact_t_max; ++it)
    for (long ix = -it - 1; ix <= it + 1; ++ix) {
      if ((ix + it) % 2 == 0) continue;
      const auto up = g.at(ix, it + 1), down = g.at(ix, it - 1), l = g.at(ix - 1, it), rr = g.at(ix + 1, it);
      exact_check(r, up.A1 + 2 * down.A1 - l.A1 - rr.A1);
      exact_check(r, up.A2 + 2 * down.A2 - l.A2 - rr.A2);
    }
  const FloatGrid f{lattice::amplitude_grid(opt.t_max, opt.params)};
  const double n = opt.params.norm();
  for (long it = 2; it < opt.t_max; ++it)
    for (long ix = -it - 1; ix <= it + 1; ++ix) {
      if ((ix + it) % 2 == 0) continue;
      const cplx res = n * f.at(ix, it + 1).value() + n * f.at(ix, it - 1).value() - f.at(ix + 1, it).value() -
                       f.at(ix - 1, it).value();
      float_check(r, std::abs(res), opt.tol);
    }
}

// All three symmetry identities; the float residual of the second one is
// divided by t so that it is comparable to an amplitude.
void symmetry(SuiteResult& r, const SuiteOptions& opt) {
  const ExactGrid g{lattice::exact_rows(opt.exact_t_max)};
  for (long it = 1; it <= opt.exact_t_max; ++it)
    for (long ix = -it; ix <= it + 2; ix += 2) {
      const auto a = g.at(ix, it), neg = g.at(-ix, it), refl = g.at(2 - ix, it);
      exact_check(r, a.A1 - neg.A1);
      exact_check(r, (it - ix) * a.A2 - (it + ix - 2) * refl.A2);
      exact_check(r, (a.A1 + a.A2) - (refl.A1 + refl.A2));
    }
  const FloatGrid f{lattice::amplitude_grid(opt.t_max, opt.params)};
  const double mu = opt.params.mu();
  for (long it = 1; it <= opt.t_max; ++it)
    for (long ix = -it; ix <= it + 2; ix += 2) {
      const auto a = f.at(ix, it), neg = f.at(-ix, it), refl = f.at(2 - ix, it);
      float_check(r, std::fabs(a.a1 - neg.a1), opt.tol);
      float_check(r, std::fabs((it - ix) * a.a2 - (it + ix - 2) * refl.a2) / it, opt.tol);
      float_check(r, std::fabs((a.a1 + mu * a.a2) - (refl.a1 + mu * refl.a2)), opt.tol);
    }
}

// Both convolution identities at t' in {1, t/2, t-1} for the last row.
void huygens(SuiteResult& r, const SuiteOptions& opt) {
  auto times = [](long t) {
    std::vector<long> ts{1, std::max(1L, t / 2), t - 1};
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
  };
  {
    const long t = opt.exact_t_max;
    const ExactGrid g{lattice::exact_rows(t)};
    for (long tp : times(t)) {
      const long dt = t - tp + 1;
      for (long ix = -t; ix <= t; ix += 2) {
        mpz_class s1 = 0, s2 = 0;
        for (long xp = -tp; xp <= tp; xp += 2) {
          const auto a = g.at(xp, tp);
          s1 += a.A2 * g.at(ix - xp + 1, dt).A1 + a.A1 * g.at(xp - ix + 1, dt).A2;
          s2 += a.A2 * g.at(ix - xp + 1, dt).A2 - a.A1 * g.at(xp - ix + 1, dt).A1;
        }
        const auto lhs = g.at(ix, t);
        exact_check(r, lhs.A1 - s1);
        exact_check(r, lhs.A2 - s2);
      }
    }
  }
  const long t = opt.t_max;
  const FloatGrid f{lattice::amplitude_grid(t, opt.params)};
  for (long tp : times(t)) {
    const long dt = t - tp + 1;
    for (long ix = -t; ix <= t; ix += 2) {
      double s1 = 0.0, s2 = 0.0;
      for (long xp = -tp; xp <= tp; xp += 2) {
        const auto a = f.at(xp, tp);
        s1 += a.a2 * f.at(ix - xp + 1, dt).a1 + a.a1 * f.at(xp - ix + 1, dt).a2;
        s2 += a.a2 * f.at(ix - xp + 1, dt).a2 - a.a1 * f.at(xp - ix + 1, dt).a1;
      }
      const auto lhs = f.at(ix, t);
      float_check(r, std::fabs(lhs.a1 - s1), opt.tol);
      float_check(r, std::fabs(lhs.a2 - s2), opt.tol);
    }
  }
}

// Three-term relations in x at fixed t in eps units, c = 1 + 2 mu^2.
// Coefficients of a_k(x-2), a_k(x+2), a_k(x) for k = 1 and k = 2.
template <class V>
std::array<std::array<V, 3>, 2> equal_time_coeffs(long ix, long it, const V& c) {
  const V x = ix, t = it;
  return {{{(x + 1) * ((x - 1) * (x - 1) - (t - 1) * (t - 1)), (x - 1) * ((x + 1) * (x + 1) - (t - 1) * (t - 1)),
            -2 * x * (c * (x * x - 1) - (t - 1) * (t - 1))},
           {x * ((x - 2) * (x - 2) - t * t), (x - 2) * (x * x - (t - 2) * (t - 2)),
            -2 * (x - 1) * (c * (x * x - 2 * x) - t * t + 2 * t)}}};
}

void equal_time(SuiteResult& r, const SuiteOptions& opt) {
  const ExactGrid g{lattice::exact_rows(opt.exact_t_max)};
  for (long it = 1; it <= opt.exact_t_max; ++it)
    for (long ix = -it - 2; ix <= it + 2; ix += 2) {
      const auto k = equal_time_coeffs<mpz_class>(ix, it, mpz_class(3));
      const auto m2 = g.at(ix - 2, it), p2 = g.at(ix + 2, it), z = g.at(ix, it);
      exact_check(r, k[0][0] * m2.A1 + k[0][1] * p2.A1 + k[0][2] * z.A1);
      exact_check(r, k[1][0] * m2.A2 + k[1][1] * p2.A2 + k[1][2] * z.A2);
    }
  // Float residuals are relative to (sum of |coefficients|) * (largest |a_k| in the row).
  const FloatGrid f{lattice::amplitude_grid(opt.t_max, opt.params)};
  const double c = 1.0 + 2.0 * opt.params.mu() * opt.params.mu();
  for (long it = 1; it <= opt.t_max; ++it) {
    double amax = 0.0;
    for (const auto& v : f.rows[it - 1]) amax = std::max({amax, std::fabs(v.a1), std::fabs(v.a2)});
    for (long ix = -it - 2; ix <= it + 2; ix += 2) {
      const auto k = equal_time_coeffs<double>(ix, it, c);
      const auto m2 = f.at(ix - 2, it), p2 = f.at(ix + 2, it), z = f.at(ix, it);
      const double r1 = k[0][0] * m2.a1 + k[0][1] * p2.a1 + k[0][2] * z.a1;
      const double r2 = k[1][0] * m2.a2 + k[1][1] * p2.a2 + k[1][2] * z.a2;
      const double s1 = (std::fabs(k[0][0]) + std::fabs(k[0][1]) + std::fabs(k[0][2])) * amax + 1e-300;
      const double s2 = (std::fabs(k[1][0]) + std::fabs(k[1][1]) + std::fabs(k[1][2])) * amax + 1e-300;
      float_check(r, std::fabs(r1) / s1, opt.tol);
      float_check(r, std::fabs(r2) / s2, opt.tol);
    }
  }
}

void field_conservation(SuiteResult& r, const SuiteOptions& opt) {
  lattice::FieldStepper s(lattice::GaugeField::homogeneous());
  for (;;) {
    double sum = 0.0;
    for (const auto& v : s.row()) sum += v.probability();
    float_check(r, std::fabs(sum - 1.0), opt.tol);
    if (s.it() >= opt.t_max) break;
    s.step();
  }
}

// Lattice Dirac equation for b_k on white sites with t >= 1, from quadrature.
void b_recurrence(SuiteResult& r, const SuiteOptions& opt) {
  const auto& p = opt.params;
  require(p.m() > 0.0, ErrorCode::InvalidArgument, "b values need m > 0");
  const long T = opt.b_t_max;
  std::vector<std::vector<spectral::AntiAmplitude>> rows;
  for (long it = 1; it <= T; ++it) {
    std::vector<spectral::AntiAmplitude> row;
    for (long ix = -T - 2; ix <= T + 2; ++ix) row.push_back(spectral::anti_amplitude(ix, it, p));
    rows.push_back(std::move(row));
  }
  auto b = [&](long ix, long it) { return rows[it - 1][ix + T + 2]; };
  const double n = p.norm(), mu = p.mu();
  for (long it = 1; it < T; ++it)
    for (long ix = -T - 1; ix <= T + 1; ++ix) {
      if ((ix + it) % 2 != 0) continue;  // (ix, it + 1) and (ix +- 1, it) white
      const auto up = b(ix, it + 1), right = b(ix + 1, it), left = b(ix - 1, it);
      float_check(r, std::fabs(n * up.b1 - (right.b1 + mu * right.b2)), 1e-8);
      float_check(r, std::fabs(n * up.b2 - (left.b2 - mu * left.b1)), 1e-8);
    }
}

}  // namespace

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::Conservation: return "conservation";
    case Suite::KleinGordon: return "klein-gordon";
    case Suite::Symmetry: return "symmetry";
    case Suite::Huygens: return "huygens";
    case Suite::EqualTime: return "equal-time";
    case Suite::FieldConservation: return "field-conservation";
    case Suite::BRecurrence: return "b-recurrence";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  return {Suite::Conservation, Suite::KleinGordon,       Suite::Symmetry,   Suite::Huygens,
          Suite::EqualTime,    Suite::FieldConservation, Suite::BRecurrence};
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites())
    if (name == suite_name(s)) return s;
  fail(ErrorCode::InvalidArgument, "unknown suite: " + name);
}

SuiteResult run_suite(Suite suite, const SuiteOptions& opt) {
  require(opt.t_max >= 2 && opt.exact_t_max >= 2, ErrorCode::InvalidArgument, "suites need at least two rows");
  require(opt.b_t_max >= 2, ErrorCode::InvalidArgument, "b check needs at least two rows");
  SuiteResult r;
  r.name = suite_name(suite);
  switch (suite) {
    case Suite::Conservation: conservation(r, opt); break;
    case Suite::KleinGordon: klein_gordon(r, opt); break;
    case Suite::Symmetry: symmetry(r, opt); break;
    case Suite::Huygens: huygens(r, opt); break;
    case Suite::EqualTime: equal_time(r, opt); break;
    case Suite::FieldConservation: field_conservation(r, opt); break;
    case Suite::BRecurrence: b_recurrence(r, opt); break;
  }
  return r;
}

std::vector<SuiteResult> run_all(const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  for (Suite s : all_suites()) out.push_back(run_suite(s, opt));
  return out;
}

}  // namespace checkers::verify
