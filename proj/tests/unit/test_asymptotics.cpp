#include <cmath>

#include "checkers/asymptotics.hpp"
#include "checkers/lattice.hpp"
#include "doctest.h"

using namespace checkers;
using namespace checkers::asymptotics;

TEST_CASE("rounding helpers") {
  CHECK(lattice_ceil(4999.9999999999) == 5000);
  CHECK(lattice_ceil(4999.5) == 5000);
  CHECK(lattice_ceil(-0.5) == 0);
  CHECK(lattice_round(2.4999999999) == 2);
  CHECK(lattice_round(0.1 / 0.05) == 2);
}

TEST_CASE("between-peaks approximation") {
  const auto p = LatticeParams::unit();
  for (long ix : {-40L, 0L, 30L}) {
    const auto a = approx_between_peaks(ix, 400, p);
    const auto e = lattice::amplitude_dp(ix, 400, p);
    CHECK(std::fabs(a.a1 - e.a1) < 2e-3);
    CHECK(std::fabs(a.a2 - e.a2) < 2e-3);
  }
  CHECK_THROWS_AS(theta(2.0, 1.0, p), Error);
}

TEST_CASE("outside the peaks") {
  const auto p = LatticeParams::unit();
  CHECK(rate_H(0.9, p) == doctest::Approx(0.30728).epsilon(2e-4));
  CHECK_THROWS_AS(rate_H(0.5, p), Error);
  const auto a = approx_outside(360, 400, p);
  const auto e = lattice::amplitude_dp(360, 400, p);
  CHECK(a.a1 == doctest::Approx(e.a1).epsilon(0.05));
  CHECK(a.a2 == doctest::Approx(e.a2).epsilon(0.05));
}

TEST_CASE("limiting distribution") {
  const auto p = LatticeParams::unit();
  const double edge = 1.0 / std::sqrt(2.0);
  CHECK(limiting_F(-edge - 1e-6, p) == 0.0);
  CHECK(limiting_F(edge + 1e-6, p) == 1.0);
  double prev = 0.0;
  for (double v = -0.7; v <= 0.7; v += 0.05) {
    const double f = limiting_F(v, p);
    CHECK(f >= prev);
    prev = f;
  }
  CHECK(limiting_moment(0, p) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(empirical_cdf(1.0, 100, p) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(moment(1, 2000, p) == doctest::Approx(limiting_moment(1, p)).epsilon(5e-3));
}

TEST_CASE("continuum propagators") {
  const double m = 2.0, x = 0.3, t = 1.1;
  const auto r = retarded_G(x, t, m);
  const auto f = feynman_G(x, t, m);
  // Inside the light cone the real part of the Feynman propagator is half the retarded one.
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) CHECK(f(k, l).real() == doctest::Approx(r(k, l).real() / 2).epsilon(1e-12));
  const auto outside = retarded_G(2.0, 1.0, m);
  CHECK(std::abs(outside(1, 1)) == 0.0);
  const LatticeParams p(m, 0.01);
  CHECK(std::abs(continuum_approx(x, t, p) - 2.0 * 0.01 * (r(1, 1) + cplx(0, 1) * r(1, 2))) < 1e-14);
}

TEST_CASE("lattice converges to the continuum") {
  const double coarse = continuum_sup_error(2.0, 1.0, 0.01, 0.2);
  const double fine = continuum_sup_error(2.0, 1.0, 0.001, 0.2);
  CHECK(fine < coarse / 5);
  CHECK(concentration_mass(2.0, 1.0, 0.001, 0.2) > 0.5);
}

TEST_CASE("algorithm 1") {
  const double e = algorithm1_eps(1.0, 0.0, 1.0, 0.1);
  CHECK(e == doctest::Approx(std::pow(0.1 / (900.0 * std::exp(1.0)), 3)));
  const auto r = algorithm1_run(1.0, 0.0, 1.0, 0.1);
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.ran);
  CHECK(r.prescribed == doctest::Approx(e));
  CHECK_THROWS_AS(algorithm1_eps(1.0, 1.0, 1.0, 0.1), Error);
}

TEST_CASE("triple limit sequences") {
  const auto s = counterexample_shrinking(3, 4);
  REQUIRE(s.size() == 2);
  CHECK(s[0][2] == doctest::Approx(1.0 / 6));
  CHECK(s[1][1] == doctest::Approx(64.0));
  const auto f = counterexample_fixed(0.5, 1, 3);
  CHECK(f[2][1] == doctest::Approx(3.0));
  const auto samples = triple_limit_check(admissible_sequence({64, 256}), 1.0);
  REQUIRE(samples.size() == 2);
  CHECK(std::abs(samples[1].ratio - 1.0) < std::abs(samples[0].ratio - 1.0));
}

TEST_CASE("antiparticle asymptotics") {
  const auto p = LatticeParams::unit();
  CHECK_THROWS_AS(anti_asymptotic(0, 100, p), Error);
  const auto a = anti_asymptotic(0, 201, p);
  CHECK(std::isfinite(a.a1));
  CHECK(std::isfinite(a.a2));
}

TEST_CASE("limiting F is a continuous CDF") {
  for (double mu : {0.5, 1.0}) {
    const LatticeParams p(mu, 1.0);
    double prev = limiting_F(-1.0, p), jump = 0.0;
    CHECK(prev == 0.0);
    for (int i = 1; i <= 10000; ++i) {
      const double v = -1.0 + 2.0 * i / 10000;
      const double f = limiting_F(v, p);
      CHECK(f >= prev);
      prev = f;
      // No jump: one-sided values agree at every grid point.
      jump = std::max(jump, limiting_F(v + 1e-13, p) - limiting_F(v - 1e-13, p));
    }
    CHECK(prev == doctest::Approx(1.0));
    CHECK(jump <= 1e-6);
  }
}

TEST_CASE("rate function is nonnegative and convex") {
  const LatticeParams p(1.0, 1.0);
  const double lo = 1.0 / std::sqrt(2.0);
  CHECK(rate_H(lo, p) == doctest::Approx(0.0).epsilon(1e-12));
  const double h = 1e-3;
  for (double v = lo + 2 * h; v < 1.0 - 2 * h; v += 0.01) {
    CHECK(rate_H(v, p) > 0.0);
    CHECK(rate_H(-v, p) == doctest::Approx(rate_H(v, p)));
    CHECK(rate_H(v + h, p) - 2 * rate_H(v, p) + rate_H(v - h, p) >= -1e-8);
  }
}

TEST_CASE("retarded propagator solves the continuum Dirac system") {
  const double m = 1.5, h = 1e-3;
  for (auto [x, t] : {std::pair{0.0, 1.0}, std::pair{0.4, 2.0}, std::pair{-1.2, 3.0}, std::pair{2.0, 7.5}}) {
    auto G = [&](double xx, double tt, int k, int l) { return retarded_G(xx, tt, m)(k, l).real(); };
    for (int l = 1; l <= 2; ++l) {
      const double dx2 = (G(x + h, t, 2, l) - G(x - h, t, 2, l)) / (2 * h);
      const double dt2 = (G(x, t + h, 2, l) - G(x, t - h, 2, l)) / (2 * h);
      const double dx1 = (G(x + h, t, 1, l) - G(x - h, t, 1, l)) / (2 * h);
      const double dt1 = (G(x, t + h, 1, l) - G(x, t - h, 1, l)) / (2 * h);
      CHECK(std::fabs(m * G(x, t, 1, l) + dx2 - dt2) < 1e-4);
      CHECK(std::fabs(dx1 + dt1 + m * G(x, t, 2, l)) < 1e-4);
    }
  }
}

TEST_CASE("simple asymptotic form") {
  const auto p = LatticeParams::unit();
  const double t = 200.0;
  const cplx s = simple_asymptotic(0.0, t, p);
  // At x = 0 the phase is -mt + pi/4.
  CHECK(std::abs(s / std::abs(s) - std::polar(1.0, -t + M_PI / 4)) < 1e-12);
  // The modulus matches the DP; the phase is the eps -> 0 form of theta and
  // does not track a at m eps = 1.
  const auto e = lattice::amplitude_dp(0, 200, p);
  CHECK(std::abs(s) == doctest::Approx(std::sqrt(e.probability())).epsilon(0.05));
  CHECK_THROWS_AS(simple_asymptotic(0.9 * t, t, p), Error);
}
