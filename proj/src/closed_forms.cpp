#include "checkers/closed_forms.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace checkers::closed_forms {

namespace {

mpz_class choose(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// log2|q| split so that huge numerators and denominators never overflow.
double rational_times_pow2(const mpq_class& q, double log2_scale) {
  if (q == 0) return 0.0;
  long en = 0;
  long ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  double e = static_cast<double>(en - ed) + log2_scale;
  double ei = std::floor(e);
  return std::ldexp((mn / md) * std::exp2(e - ei), static_cast<int>(ei));
}

void require_in_cone(long ix, long it) {
  require(it >= 1, ErrorCode::InvalidArgument, "it must be >= 1");
  require(((ix + it) % 2 + 2) % 2 == 0, ErrorCode::OutOfDomain, "site must be black (ix+it even)");
  require(std::labs(ix) < it, ErrorCode::OutOfDomain, "binomial formulas need |ix| < it");
}

}  // namespace

mpz_class binomial(long n, long k) {
  if (n >= 0) {
    if (k < 0 || k > n) return 0;
    return choose(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  }
  if (k >= 0) {
    mpz_class v = choose(static_cast<unsigned long>(-n + k - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? v : mpz_class(-v);
  }
  if (k <= n) {
    mpz_class v = choose(static_cast<unsigned long>(-k - 1), static_cast<unsigned long>(n - k));
    return ((n - k) % 2 == 0) ? v : mpz_class(-v);
  }
  return 0;
}

AmplitudePair explicit_amplitude(long ix, long it, double mu) {
  require_in_cone(ix, it);
  require(std::isfinite(mu) && mu >= 0.0, ErrorCode::InvalidArgument, "mu must be finite and >= 0");
  const long p = (ix + it) / 2 - 1;
  const long q = (it - ix) / 2 - 1;
  const long rmax = (it - std::labs(ix)) / 2;
  const mpq_class m(mu);
  const mpq_class m2 = m * m;

  mpq_class s1 = 0;
  mpq_class s2 = 0;
  mpq_class pw = m;  // mu^{2r+1}
  mpq_class pw_even = 1;  // mu^{2r}
  for (long r = 0; r <= rmax; ++r) {
    mpz_class term1 = binomial(p, r) * binomial(q, r);
    if (r % 2 != 0) term1 = -term1;
    s1 += term1 * pw;
    if (r >= 1) {
      mpz_class term2 = binomial(p, r) * binomial(q, r - 1);
      if (r % 2 != 0) term2 = -term2;
      s2 += term2 * pw_even;
    }
    pw *= m2;
    pw_even *= m2;
  }
  const double log2_norm = 0.5 * static_cast<double>(1 - it) * std::log2(1.0 + mu * mu);
  return {rational_times_pow2(s1, log2_norm), rational_times_pow2(s2, log2_norm)};
}

lattice::ExactAmplitude explicit_exact(long ix, long it) {
  require_in_cone(ix, it);
  const long p = (ix + it) / 2 - 1;
  const long q = (it - ix) / 2 - 1;
  const long rmax = (it - std::labs(ix)) / 2;
  lattice::ExactAmplitude out{0, 0, it};
  for (long r = 0; r <= rmax; ++r) {
    const int sign = (r % 2 == 0) ? 1 : -1;
    out.A1 += sign * binomial(p, r) * binomial(q, r);
    if (r >= 1) out.A2 += sign * binomial(p, r) * binomial(q, r - 1);
  }
  return out;
}

lattice::ExactAmplitude alt_explicit_basic(long ix, long it, AltVariant variant) {
  require_in_cone(ix, it);
  const long ax = std::labs(ix);
  const long rmax = (it - ax) / 2;
  lattice::ExactAmplitude out{0, 0, it};
  if (variant == AltVariant::A) {
    const long h = (ix + it - 2) / 2;
    mpz_class pw = 1;  // (-2)^r
    for (long r = 0; r <= rmax; ++r) {
      mpz_class c = binomial(h, r);
      out.A1 += pw * c * binomial(it - r - 2, h);
      out.A2 += pw * c * binomial(it - r - 2, h - 1);
      pw *= -2;
    }
  } else {
    const long theta = ix >= 0 ? 1 : 0;
    const long n = (it - ax - 2) / 2;
    for (long r = 0; r <= rmax; ++r) {
      const int sign = (r % 2 == 0) ? 1 : -1;
      out.A1 += sign * binomial(n, r) * binomial(ax, (it + ax - 4 * r - 2) / 2);
      out.A2 += sign * binomial(n, r - theta) * binomial(ax, (it + ax - 4 * r) / 2);
    }
  }
  return out;
}

lattice::ExactAmplitude particular_values_poly(long k, long t) {
  require(t >= 2 && k >= 1 && k <= t - 1, ErrorCode::OutOfDomain, "need 1 <= k <= t-1");
  // Coefficients of (1+z)^{t-k-1} (1-z)^{k-1} by direct convolution.
  const long up = t - k - 1;
  const long down = k - 1;
  std::vector<mpz_class> poly(static_cast<std::size_t>(up + down + 1));
  for (long i = 0; i <= up; ++i) {
    for (long j = 0; j <= down; ++j) {
      mpz_class c = binomial(up, i) * binomial(down, j);
      if (j % 2 != 0) c = -c;
      poly[static_cast<std::size_t>(i + j)] += c;
    }
  }
  auto coef = [&](long e) { return (e >= 0 && e < static_cast<long>(poly.size())) ? poly[e] : mpz_class(0); };
  return {coef(t - k - 1), coef(t - k), t};
}

namespace {

// Weakly decreasing heights c_2..c_w bounded by `cap`; `distinct` counts steps so far.
void young_walk(long remaining, long cap, long distinct, YoungCount& out) {
  if (remaining == 0) {
    if (distinct % 2 == 0)
      out.n_even += 1;
    else
      out.n_odd += 1;
    return;
  }
  for (long c = cap; c >= 1; --c) young_walk(remaining - 1, c, distinct + (c != cap ? 1 : 0), out);
}

}  // namespace

YoungCount young_counts(long h, long w) {
  require(h >= 1 && w >= 1, ErrorCode::InvalidArgument, "h and w must be >= 1");
  require(h <= kYoungMax && w <= kYoungMax, ErrorCode::SizeLimit, "enumeration bound is h, w <= 10");
  YoungCount out{h, w, 0, 0};
  young_walk(w - 1, h, 1, out);
  return out;
}

mpz_class young_delta(long h, long w) {
  require(h >= 1 && w >= 1, ErrorCode::InvalidArgument, "h and w must be >= 1");
  require(h <= kYoungMax && w <= kYoungMax, ErrorCode::SizeLimit, "enumeration bound is h, w <= 10");
  return lattice::amplitude_exact(h - w, h + w).A1;
}

}  // namespace checkers::closed_forms
