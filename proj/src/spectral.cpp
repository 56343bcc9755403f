#include "checkers/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "checkers/specfun.hpp"

namespace checkers::spectral {

namespace {

struct Integrand {
  long ix;
  long it;
  double mu;
  double c;

  // Returns the two integrands at q = p*eps, normalized so that the integral
  // equals the mean over a period.
  std::pair<cplx, cplx> operator()(double q) const {
    const double s = std::sin(q);
    const double w = std::acos(std::clamp(std::cos(q) * c, -1.0, 1.0));
    const double root = std::sqrt(mu * mu + s * s);
    const double ph1 = q * static_cast<double>(ix) - w * static_cast<double>(it - 1);
    const double ph2 = q * static_cast<double>(ix - 1) - w * static_cast<double>(it - 1);
    cplx f1 = cplx(0.0, mu) * std::polar(1.0, ph1) / root;
    cplx f2 = (1.0 + s / root) * std::polar(1.0, ph2);
    return {f1, f2};
  }
};

bool anti_sign_flip(long ix, long it) { return it <= 0 && ((ix + it) % 2 + 2) % 2 == 0; }

FourierIntegrals massless(long ix, long it) {
  // A2 = (1/pi) int_0^pi e^{i q d} dq with d = ix - it; A1 := 0.
  const long d = ix - it;
  cplx a2;
  if (d == 0)
    a2 = 1.0;
  else if (std::labs(d) % 2 == 1)
    a2 = cplx(0.0, 2.0 / (M_PI * static_cast<double>(d)));
  return {0.0, a2, 0};
}

}  // namespace

double omega(double p, const LatticeParams& params) {
  const double eps = params.eps();
  return std::acos(std::clamp(std::cos(p * eps) / params.norm(), -1.0, 1.0)) / eps;
}

FourierIntegrals fourier_integrals(long ix, long it, const LatticeParams& params, const QuadratureOptions& opt) {
  if (params.mu() == 0.0) return massless(ix, it);
  Integrand f{ix, it, params.mu(), 1.0 / params.norm()};

  long n = std::max<long>(opt.min_nodes, 4);
  cplx s1;
  cplx s2;
  for (long j = 0; j < n; ++j) {
    auto [u, v] = f(-M_PI + 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n));
    s1 += u;
    s2 += v;
  }
  cplx prev1 = s1 / static_cast<double>(n);
  cplx prev2 = s2 / static_cast<double>(n);
  while (n < opt.max_nodes) {
    // Midpoints of the current grid complete the doubled grid.
    for (long j = 0; j < n; ++j) {
      auto [u, v] = f(-M_PI + M_PI * (2.0 * static_cast<double>(j) + 1.0) / static_cast<double>(n));
      s1 += u;
      s2 += v;
    }
    n *= 2;
    cplx cur1 = s1 / static_cast<double>(n);
    cplx cur2 = s2 / static_cast<double>(n);
    if (std::abs(cur1 - prev1) < opt.tol && std::abs(cur2 - prev2) < opt.tol) return {cur1, cur2, n};
    prev1 = cur1;
    prev2 = cur2;
  }
  fail(ErrorCode::NotConverged, "Fourier quadrature did not converge within the node limit");
}

AmplitudePair fourier_amplitude(long ix, long it, const LatticeParams& params, const QuadratureOptions& opt) {
  require(params.m() > 0.0, ErrorCode::InvalidArgument, "Fourier representation needs m > 0");
  require(it >= 1, ErrorCode::InvalidArgument, "it must be >= 1");
  require(((ix + it) % 2 + 2) % 2 == 0, ErrorCode::OutOfDomain, "site must be black (ix+it even)");
  auto I = fourier_integrals(ix, it, params, opt);
  return {I.A1.real(), I.A2.real()};
}

AntiAmplitude anti_amplitude(long ix, long it, const LatticeParams& params, const QuadratureOptions& opt) {
  auto I = fourier_integrals(ix, it, params, opt);
  if (anti_sign_flip(ix, it)) {
    I.A1 = -I.A1;
    I.A2 = -I.A2;
  }
  AntiAmplitude out;
  out.A1 = I.A1;
  out.A2 = I.A2;
  if (((ix + it) % 2 + 2) % 2 == 0) {
    out.parity = Parity::Even;
    out.residue = std::max(std::abs(I.A1.imag()), std::abs(I.A2.imag()));
    out.A1 = I.A1.real();
    out.A2 = I.A2.real();
  } else {
    out.parity = Parity::Odd;
    out.residue = std::max(std::abs(I.A1.real()), std::abs(I.A2.real()));
    out.b1 = I.A1.imag();
    out.b2 = I.A2.imag();
    out.A1 = cplx(0.0, out.b1);
    out.A2 = cplx(0.0, out.b2);
  }
  require(out.residue < 1e-9, ErrorCode::NotConverged, "anti-amplitude has a non-negligible residue");
  return out;
}

double gauss_constant() {
  static const double g = 1.0 / specfun::agm(1.0, std::sqrt(2.0));
  return g;
}

double inverse_lemniscate_constant() {
  static const double l = (2.0 / M_PI) * (specfun::ellip_e(-1.0) - specfun::ellip_k(-1.0));
  return l;
}

Dispersion dispersion_solve(double lambda, const LatticeParams& params, cplx a1_0, cplx a2_0) {
  require(std::isfinite(lambda) && lambda > 0.0, ErrorCode::InvalidArgument, "wavelength must be > 0");
  const double k = 2.0 * M_PI * params.eps() / lambda;
  const double big_omega = std::acos(std::clamp(std::cos(k) / params.norm(), -1.0, 1.0));
  Dispersion d;
  d.lambda = lambda;
  d.params = params;
  d.period = big_omega > 0.0 ? 2.0 * M_PI * params.eps() / big_omega : INFINITY;
  d.alpha = std::atan2(params.mu(), std::sin(k));
  const double ca = std::cos(d.alpha / 2.0);
  const double sa = std::sin(d.alpha / 2.0);
  const cplx i(0.0, 1.0);
  d.a = a1_0 * ca - i * a2_0 * sa;
  d.b = a1_0 * sa + i * a2_0 * ca;
  return d;
}

std::pair<cplx, cplx> wave_eval(const Dispersion& d, long ix, long it) {
  const double eps = d.params.eps();
  const double kx = 2.0 * M_PI * static_cast<double>(ix) * eps / d.lambda;
  const double wt = std::isfinite(d.period) ? 2.0 * M_PI * static_cast<double>(it) * eps / d.period : 0.0;
  const cplx plus = std::polar(1.0, kx + wt);
  const cplx minus = std::polar(1.0, kx - wt);
  const double ca = std::cos(d.alpha / 2.0);
  const double sa = std::sin(d.alpha / 2.0);
  const cplx i(0.0, 1.0);
  return {d.a * ca * plus + d.b * sa * minus, i * d.a * sa * plus - i * d.b * ca * minus};
}

double wave_residual(const Dispersion& d, long x0, long t0, long nx, long nt) {
  const double c = 1.0 / d.params.norm();
  const double mu = d.params.mu();
  double worst = 0.0;
  for (long t = t0 + 1; t <= t0 + nt; ++t) {
    for (long x = x0; x < x0 + nx; ++x) {
      auto [u1, u2] = wave_eval(d, x, t);
      auto r1 = u1 - c * (wave_eval(d, x + 1, t - 1).first + mu * wave_eval(d, x, t - 1).second);
      auto r2 = u2 - c * (wave_eval(d, x - 1, t - 1).second - mu * wave_eval(d, x, t - 1).first);
      worst = std::max({worst, std::abs(r1), std::abs(r2)});
    }
  }
  return worst;
}

}  // namespace checkers::spectral
