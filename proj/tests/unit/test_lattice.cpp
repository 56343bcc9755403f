#include <cmath>

#include "checkers/lattice.hpp"
#include "doctest.h"

using namespace checkers;
using namespace checkers::lattice;

TEST_CASE("exact integers of the first rows") {
  // a(1,3) = (1 - i)/2, so A = 2 a = (1, -1).
  auto a = amplitude_exact(1, 3);
  CHECK(a.A1 == 1);
  CHECK(a.A2 == -1);
  // a(2,4) = (1 - 2i)/(2 sqrt 2), A = 2 sqrt 2 a.
  a = amplitude_exact(2, 4);
  CHECK(a.A1 == 1);
  CHECK(a.A2 == -2);
  CHECK(a.to_pair().a2 == doctest::Approx(-2.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
  // Outside the light cone.
  CHECK(amplitude_exact(-3, 3).A1 == 0);
  CHECK(amplitude_exact(-3, 3).A2 == 0);
}

TEST_CASE("float DP matches exact integers") {
  const auto rows = exact_rows(60);
  const auto grid = amplitude_grid(60, LatticeParams::unit());
  for (long it = 1; it <= 60; ++it)
    for (long ix = -it; ix <= it; ix += 2) {
      const auto e = ExactAmplitude{rows[it - 1].at(ix).A1, rows[it - 1].at(ix).A2, it}.to_pair();
      const auto f = grid[it - 1].at(ix);
      CHECK(std::fabs(e.a1 - f.a1) < 1e-14);
      CHECK(std::fabs(e.a2 - f.a2) < 1e-14);
    }
}

TEST_CASE("white sites and invalid input") {
  CHECK(amplitude_dp(0, 3, LatticeParams::unit()).probability() == 0.0);
  CHECK_THROWS_AS(LatticeParams(1.0, 0.0), Error);
  CHECK_THROWS_AS(LatticeParams(-1.0, 1.0), Error);
  CHECK_THROWS_AS(AbsorptionSet().add_site(0, 0), Error);
}

TEST_CASE("probability conservation at several masses") {
  for (double mu : {0.0, 0.3, 1.0, 3.0}) {
    const auto row = amplitude_row(301, LatticeParams(mu, 1.0));
    double s = 0;
    for (const auto& a : row) s += a.probability();
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("massless walk moves straight right") {
  const LatticeParams p(0.0, 1.0);
  CHECK(amplitude_dp(5, 5, p).a2 == doctest::Approx(1.0));
  CHECK(amplitude_dp(3, 5, p).probability() == 0.0);
}

TEST_CASE("absorption") {
  AbsorptionSet b;
  b.add_site(2, 2);
  CHECK(amplitude_bypass(0, 4, LatticeParams::unit(), b).probability() == doctest::Approx(0.25).epsilon(1e-15));
  // Absorbing nothing changes nothing.
  CHECK(amplitude_bypass(2, 6, LatticeParams::unit(), AbsorptionSet()).a1 ==
        doctest::Approx(amplitude_dp(2, 6, LatticeParams::unit()).a1));
  AbsorptionSet line;
  line.add_line(0);
  const auto sums = absorption_partial_sums(50, line);
  CHECK(sums.size() == 50);
  CHECK(sums.back() == doctest::Approx(absorption_partial_sum(50, line)));
  CHECK(sums.back() < 2.0 / M_PI);
}

TEST_CASE("unit gauge field reproduces the free walk") {
  const GaugeField g;
  for (long it = 1; it <= 12; ++it)
    for (long ix = -it; ix <= it; ix += 2) {
      const auto f = amplitude_field(ix, it, g);
      const auto a = amplitude_dp(ix, it, LatticeParams::unit());
      CHECK(std::abs(f.a1 - cplx(a.a1, 0)) < 1e-14);
      CHECK(std::abs(f.a2 - cplx(a.a2, 0)) < 1e-14);
    }
}

TEST_CASE("chirality flip sum") {
  const auto s = chirality_series(40);
  for (long t = 1; t <= 40; ++t) CHECK(s[t - 1] == doctest::Approx(chirality_flip_sum(t)).epsilon(1e-12));
  // Row 2: a1(0,2) = 1/sqrt 2 is the only nonzero a1.
  CHECK(chirality_flip_sum(2) == doctest::Approx(0.5));
}

TEST_CASE("restricted amplitudes and identical particles") {
  const auto p = LatticeParams::unit();
  // From the origin, the path sum ending Right is i*a2, ending Left is a1.
  const auto a = amplitude_dp(1, 5, p);
  CHECK(std::abs(restricted_path_sum(1, 5, Direction::Right, p) - cplx(0, a.a2)) < 1e-14);
  CHECK(std::abs(restricted_path_sum(1, 5, Direction::Left, p) - cplx(a.a1, 0)) < 1e-14);
  CHECK(restricted_amplitude(1, 5, Direction::Right, p) == doctest::Approx(a.a2));
  // Equal detection points and end moves cancel the two terms.
  PairQuery q;
  q.x0 = 2;
  q.x = 1;
  q.x2 = 1;
  q.t = 5;
  CHECK(std::abs(pair_amplitude(q, p)) < 1e-15);
  // Swapping the two detections flips the sign.
  q.x = -1;
  q.x2 = 3;
  q.end = Direction::Left;
  const cplx a12 = pair_amplitude(q, p);
  std::swap(q.x, q.x2);
  std::swap(q.end, q.end2);
  CHECK(std::abs(pair_amplitude(q, p) + a12) < 1e-15);
  CHECK(pair_probability(q, p) == doctest::Approx(std::norm(a12)));
}

namespace {

// Brute force over all move sequences starting upwards-right: a path with
// `turns` direction changes has arrow i (-i mu)^turns (1+mu^2)^{-(dt-1)/2}.
cplx brute_path_sum(long dx, long dt, Direction end, double mu) {
  cplx sum = 0;
  for (long mask = 0; mask < (1L << (dt - 1)); ++mask) {
    long x = 1, turns = 0;
    bool right = true;
    for (long s = 0; s < dt - 1; ++s) {
      const bool r = (mask >> s) & 1;
      if (r != right) ++turns;
      right = r;
      x += r ? 1 : -1;
    }
    if (x != dx || right != (end == Direction::Right)) continue;
    sum += cplx(0, 1) * std::pow(cplx(0, -mu), double(turns)) * std::pow(1 + mu * mu, -(dt - 1) / 2.0);
  }
  return sum;
}

}  // namespace

TEST_CASE("pair amplitude equals brute-force path sums") {
  for (double mu : {1.0, 0.5}) {
    const LatticeParams p(mu, 1.0);
    auto f = [](Direction d) { return d == Direction::Right ? cplx(0, 1) : cplx(1, 0); };
    for (long dt = 1; dt <= 6; ++dt)
      for (long x0 : {2L, 4L})
        for (long x = -dt; x <= dt; x += 2)
          for (long x2 = x0 - dt; x2 <= x0 + dt; x2 += 2)
            for (auto e1 : {Direction::Left, Direction::Right})
              for (auto e2 : {Direction::Left, Direction::Right}) {
                const cplx direct = brute_path_sum(x, dt, e1, mu) * brute_path_sum(x2 - x0, dt, e2, mu);
                const cplx exchanged = brute_path_sum(x2, dt, e2, mu) * brute_path_sum(x - x0, dt, e1, mu);
                PairQuery q{x0, x, x2, dt, e1, e2};
                CHECK(std::abs(pair_amplitude(q, p) * f(e1) * f(e2) - (direct - exchanged)) < 1e-14);
              }
  }
}
