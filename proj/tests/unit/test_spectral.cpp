#include <cmath>
#include <vector>

#include "checkers/lattice.hpp"
#include "checkers/spectral.hpp"
#include "doctest.h"

using namespace checkers;
using namespace checkers::spectral;

TEST_CASE("dispersion frequency") {
  CHECK(omega(0.0, LatticeParams::unit()) == doctest::Approx(M_PI / 4));
  // Small-eps limit: omega -> sqrt(p^2 + m^2).
  CHECK(omega(3.0, LatticeParams(4.0, 1e-4)) == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(omega(0.7, LatticeParams(2.0, 0.5)) == doctest::Approx(omega(-0.7, LatticeParams(2.0, 0.5))));
}

TEST_CASE("Fourier integral matches the DP") {
  for (double mu : {0.5, 1.0, 2.0}) {
    const LatticeParams p(mu, 1.0);
    const auto grid = lattice::amplitude_grid(20, p);
    for (long it = 1; it <= 20; it += 3)
      for (long ix = -it; ix <= it; ix += 2) {
        const auto f = fourier_amplitude(ix, it, p);
        const auto d = grid[it - 1].at(ix);
        CHECK(std::fabs(f.a1 - d.a1) < 1e-9);
        CHECK(std::fabs(f.a2 - d.a2) < 1e-9);
      }
  }
  CHECK_THROWS_AS(fourier_amplitude(0, 2, LatticeParams(0.0, 1.0)), Error);
}

TEST_CASE("lemniscate constants") {
  CHECK(gauss_constant() == doctest::Approx(0.83462684167407318628).epsilon(1e-14));
  CHECK(inverse_lemniscate_constant() == doctest::Approx(0.38137988175090703).epsilon(1e-13));
}

TEST_CASE("antiparticle amplitudes") {
  const auto p = LatticeParams::unit();
  const auto w = anti_amplitude(0, 1, p);
  CHECK(w.parity == Parity::Odd);
  CHECK(w.b1 == doctest::Approx(gauss_constant()).epsilon(1e-9));
  CHECK(w.b2 == doctest::Approx(-inverse_lemniscate_constant()).epsilon(1e-9));
  CHECK(w.residue < 1e-9);
  // On black sites with t >= 1 the real part is the ordinary amplitude.
  const auto b = anti_amplitude(1, 3, p);
  CHECK(b.parity == Parity::Even);
  CHECK(b.A1.real() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(b.A2.real() == doctest::Approx(-0.5).epsilon(1e-10));
}

TEST_CASE("plane waves solve the lattice equation") {
  for (double mu : {0.5, 1.0, 2.0}) {
    const auto d = dispersion_solve(7.0, LatticeParams(mu, 1.0), cplx(1.0, 0.0), cplx(0.0, 1.0));
    CHECK(wave_residual(d, -10, 0, 20, 20) < 1e-12);
  }
}

TEST_CASE("trapezoid error decays spectrally") {
  const LatticeParams p(1.0, 1.0);
  const auto exact = lattice::amplitude_dp(2, 20, p);
  std::vector<double> err;
  for (long n = 16; n <= 512; n *= 2) {
    QuadratureOptions o;
    o.tol = 1e300;  // stop after the first doubling
    o.min_nodes = n / 2;
    o.max_nodes = n;
    const auto I = fourier_integrals(2, 20, p, o);
    err.push_back(std::max(std::fabs(I.A1.real() - exact.a1), std::fabs(I.A2.real() - exact.a2)));
  }
  bool asymptotic = false;
  for (std::size_t i = 0; i + 1 < err.size(); ++i) {
    if (err[i] < 1e-2) asymptotic = true;
    if (asymptotic && err[i] > 1e-13) CHECK(err[i + 1] < err[i] / 10);
  }
  CHECK(asymptotic);
  CHECK(err.back() < 1e-13);
}

TEST_CASE("odd-parity anti-amplitudes are imaginary") {
  for (double mu : {0.5, 1.0}) {
    const LatticeParams p(mu, 1.0);
    for (long it = -3; it <= 6; ++it)
      for (long ix = -5; ix <= 5; ++ix) {
        if (((ix + it) % 2 + 2) % 2 == 0) continue;
        const auto v = anti_amplitude(ix, it, p);
        CHECK(v.parity == Parity::Odd);
        CHECK(std::fabs(v.A1.real()) < 1e-9);
        CHECK(std::fabs(v.A2.real()) < 1e-9);
        CHECK(v.A1.imag() == doctest::Approx(v.b1));
        CHECK(v.A2.imag() == doctest::Approx(v.b2));
      }
  }
}

// wave_eval returns the shifted pair a~1(x,t) = a1(x,t+eps), a~2(x,t) = a2(x+eps,t+eps).
TEST_CASE("plane wave is the one-step image of its initial row") {
  const LatticeParams p(0.7, 1.0);
  const double c = 1.0 / p.norm(), mu = p.mu();
  const auto d = dispersion_solve(9.0, p, cplx(0.6, 0.1), cplx(-0.2, 0.5));
  const auto w0 = wave_eval(d, 0, 0);
  CHECK(std::abs(w0.first - cplx(0.6, 0.1)) < 1e-12);
  CHECK(std::abs(w0.second - cplx(-0.2, 0.5)) < 1e-12);
  for (long ix = -8; ix <= 8; ++ix) {
    const auto r = wave_eval(d, ix + 1, 0), l = wave_eval(d, ix - 1, 0), here = wave_eval(d, ix, 0);
    const auto next = wave_eval(d, ix, 1);
    CHECK(std::abs(next.first - c * (r.first + mu * here.second)) < 1e-12);
    CHECK(std::abs(next.second - c * (l.second - mu * here.first)) < 1e-12);
    // Initial row is the plane wave with the given values at the origin.
    CHECK(std::abs(here.first - cplx(0.6, 0.1) * std::polar(1.0, 2 * M_PI * ix / 9.0)) < 1e-12);
  }
}
