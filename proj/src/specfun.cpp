#include "checkers/specfun.hpp"

#include <cmath>
#include <limits>

#include "checkers/error.hpp"

namespace checkers::specfun {

namespace {

using ld = long double;

constexpr ld kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr ld kPi = 3.141592653589793238462643383279502884L;
constexpr ld kLdEps = std::numeric_limits<ld>::epsilon();

// Series below these thresholds, asymptotic expansions above.
constexpr double kAirySeriesMax = 8.0;
constexpr double kBesselSeriesMax = 17.0;
constexpr double kBesselKSeriesMax = 9.0;

// ---------------------------------------------------------------- Airy

SpecfunResult airy_series(double xd) {
  const ld c1 = 0.355028053887817239260063186004183176L;  // Ai(0)
  const ld c2 = 0.258819403792806798405183560189203963L;  // -Ai'(0)
  const ld x = xd;
  const ld x3 = x * x * x;
  ld f = 1.0L, g = x;
  ld tf = 1.0L, tg = x;
  ld peak = std::fabs(c1) + std::fabs(c2 * x);
  for (int k = 1; k < 200; ++k) {
    tf *= x3 / (static_cast<ld>(3 * k) * static_cast<ld>(3 * k - 1));
    tg *= x3 / (static_cast<ld>(3 * k) * static_cast<ld>(3 * k + 1));
    f += tf;
    g += tg;
    peak = std::fmax(peak, c1 * std::fabs(tf) + c2 * std::fabs(tg));
    if (std::fabs(tf) + std::fabs(tg) < 1e-24L * (std::fabs(f) + std::fabs(g) + 1.0L)) break;
  }
  const ld v = c1 * f - c2 * g;
  return {static_cast<double>(v), static_cast<double>(64.0L * kLdEps * peak)};
}

SpecfunResult airy_asymptotic(double x) {
  const ld z = std::fabs(static_cast<ld>(x));
  const ld zeta = 2.0L / 3.0L * z * std::sqrt(z);
  // u_k coefficients, summed until the terms stop decreasing.
  ld u = 1.0L;
  ld term = 1.0L;
  ld sum_alt = 1.0L;  // sum (-1)^k u_k / zeta^k
  ld p = 1.0L;        // sum (-1)^k u_{2k} / zeta^{2k}
  ld q = 0.0L;        // sum (-1)^k u_{2k+1} / zeta^{2k+1}
  ld last = 1.0L;
  for (int k = 1; k < 60; ++k) {
    u *= static_cast<ld>((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / (static_cast<ld>(2 * k - 1) * 216.0L * k);
    term = u / std::pow(zeta, static_cast<ld>(k));
    if (term > last) break;
    last = term;
    sum_alt += (k % 2 == 0 ? term : -term);
    if (k % 2 == 0)
      p += ((k / 2) % 2 == 0 ? term : -term);
    else
      q += (((k - 1) / 2) % 2 == 0 ? term : -term);
    if (term < 1e-22L) break;
  }
  if (x > 0) {
    const ld pre = std::exp(-zeta) / (2.0L * std::sqrt(kPi) * std::pow(z, 0.25L));
    return {static_cast<double>(pre * sum_alt), static_cast<double>(pre * (last + 8.0L * kLdEps))};
  }
  const ld pre = 1.0L / (std::sqrt(kPi) * std::pow(z, 0.25L));
  const ld ang = zeta - kPi / 4.0L;
  const ld v = pre * (std::cos(ang) * p + std::sin(ang) * q);
  return {static_cast<double>(v), static_cast<double>(pre * (last + 8.0L * kLdEps * zeta))};
}

// ---------------------------------------------------------------- Bessel

struct Pair {
  ld j;
  ld y;
};

// Power series for J_n and Y_n; K uses the same harmonic numbers with I_n.
Pair jy_series(int n, ld z) {
  const ld h = z / 2.0L;
  const ld q = h * h;
  const ld lg = std::log(h) + kEulerGamma;
  ld term = (n == 0) ? 1.0L : h;  // (-1)^k (z/2)^{2k+n} / (k!(k+n)!)
  ld j = 0.0L;
  ld ysum = 0.0L;
  ld hk = 0.0L;  // H_k
  for (int k = 0; k < 300; ++k) {
    if (k > 0) {
      term *= -q / (static_cast<ld>(k) * static_cast<ld>(k + n));
      hk += 1.0L / k;
    }
    j += term;
    const ld weight = (n == 0) ? hk : hk + (hk + 1.0L / (k + 1));
    ysum += weight * term;
    if (k > 4 && std::fabs(term) < 1e-24L * std::fabs(j) && std::fabs(term) * hk < 1e-24L) break;
  }
  ld y;
  if (n == 0)
    y = (2.0L / kPi) * (lg * j - ysum);
  else
    y = -2.0L / (kPi * z) + (2.0L / kPi) * lg * j - ysum / kPi;
  return {j, y};
}

Pair jy_asymptotic(int n, ld z, ld* err) {
  const ld mu = 4.0L * n * n;
  ld ak = 1.0L;  // a_k(n) / z^k
  ld p = 1.0L, q = 0.0L, last = 1.0L;
  for (int k = 1; k < 80; ++k) {
    const ld odd = 2.0L * k - 1.0L;
    ak *= (mu - odd * odd) / (static_cast<ld>(k) * 8.0L * z);
    const ld mag = std::fabs(ak);
    if (mag > last) break;
    last = mag;
    // P collects even k with sign (-1)^{k/2}, Q odd k with sign (-1)^{(k-1)/2}.
    if (k % 2 == 0)
      p += ((k / 2) % 2 == 0) ? ak : -ak;
    else
      q += (((k - 1) / 2) % 2 == 0) ? ak : -ak;
    if (mag < 1e-22L) break;
  }
  const ld chi = z - (0.5L * n + 0.25L) * kPi;
  const ld pre = std::sqrt(2.0L / (kPi * z));
  *err = pre * (last + 16.0L * kLdEps * z);
  return {pre * (p * std::cos(chi) - q * std::sin(chi)), pre * (p * std::sin(chi) + q * std::cos(chi))};
}

ld k_series(int n, ld z) {
  const ld h = z / 2.0L;
  const ld q = h * h;
  const ld lg = std::log(h) + kEulerGamma;
  ld term = (n == 0) ? 1.0L : h;  // (z/2)^{2k+n} / (k!(k+n)!)
  ld i = 0.0L;
  ld hsum = 0.0L;
  ld hk = 0.0L;
  for (int k = 0; k < 300; ++k) {
    if (k > 0) {
      term *= q / (static_cast<ld>(k) * static_cast<ld>(k + n));
      hk += 1.0L / k;
    }
    i += term;
    hsum += ((n == 0) ? hk : hk + (hk + 1.0L / (k + 1))) * term;
    if (k > 4 && term < 1e-24L * i) break;
  }
  if (n == 0) return -lg * i + hsum;
  return 1.0L / z + lg * i - 0.5L * hsum;
}

ld k_asymptotic(int n, ld z, ld* err) {
  const ld mu = 4.0L * n * n;
  ld ak = 1.0L, sum = 1.0L, last = 1.0L;
  for (int k = 1; k < 80; ++k) {
    const ld odd = 2.0L * k - 1.0L;
    ak *= (mu - odd * odd) / (static_cast<ld>(k) * 8.0L * z);
    const ld mag = std::fabs(ak);
    if (mag > last) break;
    last = mag;
    sum += ak;
    if (mag < 1e-22L) break;
  }
  const ld pre = std::sqrt(kPi / (2.0L * z)) * std::exp(-z);
  *err = pre * (last + 8.0L * kLdEps);
  return pre * sum;
}

void check_order(int n) { require(n == 0 || n == 1, ErrorCode::InvalidArgument, "only orders 0 and 1 are provided"); }

}  // namespace

SpecfunResult airy(double x) {
  require(std::isfinite(x) && std::fabs(x) <= kAiryMax, ErrorCode::OutOfDomain, "Airy argument must satisfy |x| <= 40");
  return std::fabs(x) <= kAirySeriesMax ? airy_series(x) : airy_asymptotic(x);
}

SpecfunResult bessel_j(int n, double z) {
  check_order(n);
  require(std::isfinite(z) && z >= 0.0 && z <= kBesselMax, ErrorCode::OutOfDomain, "J needs 0 <= z <= 1000");
  if (z == 0.0) return {n == 0 ? 1.0 : 0.0, 0.0};
  if (z <= kBesselSeriesMax) {
    const ld v = jy_series(n, z).j;
    return {static_cast<double>(v), static_cast<double>(64.0L * kLdEps * std::cosh(static_cast<ld>(z)))};
  }
  ld err = 0.0L;
  const ld v = jy_asymptotic(n, z, &err).j;
  return {static_cast<double>(v), static_cast<double>(err)};
}

SpecfunResult bessel_y(int n, double z) {
  check_order(n);
  require(std::isfinite(z) && z > 0.0 && z <= kBesselMax, ErrorCode::OutOfDomain, "Y needs 0 < z <= 1000");
  if (z <= kBesselSeriesMax) {
    const ld v = jy_series(n, z).y;
    return {static_cast<double>(v), static_cast<double>(64.0L * kLdEps * (std::cosh(static_cast<ld>(z)) + 1.0L / z))};
  }
  ld err = 0.0L;
  const ld v = jy_asymptotic(n, z, &err).y;
  return {static_cast<double>(v), static_cast<double>(err)};
}

SpecfunResult bessel_k(int n, double z) {
  check_order(n);
  require(std::isfinite(z) && z > 0.0 && z <= kBesselMax, ErrorCode::OutOfDomain, "K needs 0 < z <= 1000");
  if (z <= kBesselKSeriesMax) {
    const ld v = k_series(n, z);
    return {static_cast<double>(v), static_cast<double>(64.0L * kLdEps * (std::cosh(static_cast<ld>(z)) + 1.0L / z))};
  }
  ld err = 0.0L;
  const ld v = k_asymptotic(n, z, &err);
  return {static_cast<double>(v), static_cast<double>(err)};
}

double arcosh(double x) {
  require(std::isfinite(x) && x >= 1.0 - 1e-12, ErrorCode::OutOfDomain, "arcosh needs x >= 1");
  return x <= 1.0 ? 0.0 : std::acosh(x);
}

double agm(double a, double b) {
  require(a > 0.0 && b > 0.0, ErrorCode::InvalidArgument, "agm needs positive arguments");
  for (int i = 0; i < 64 && std::fabs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return a;
}

double ellip_k(double m) {
  require(m < 1.0, ErrorCode::OutOfDomain, "K(m) needs m < 1");
  return M_PI / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

double ellip_e(double m) {
  require(m < 1.0, ErrorCode::OutOfDomain, "E(m) needs m < 1");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double sum = 0.5 * m;  // 2^{-1} c_0^2
  double pow2 = 0.5;
  for (int i = 0; i < 64 && std::fabs(a - b) > 1e-17 * a; ++i) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  return (M_PI / (2.0 * a)) * (1.0 - sum);
}

}  // namespace checkers::specfun
