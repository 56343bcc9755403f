#pragma once

// Large-time and continuum approximations, propagators, Algorithm 1 and the
// triple-limit experiment.
//
// Site convention: the lattice approximations take a query site (ix, it) and
// apply the time shift internally. For a black query site (X, T) the a1
// formula is evaluated at x = X, t = T - eps and the a2 formula at
// x = X - eps, t = T - eps. The antiparticle formula does the same for a
// white query site.

#include <array>
#include <optional>
#include <vector>

#include "checkers/lattice.hpp"
#include "checkers/types.hpp"

namespace checkers::asymptotics {

inline constexpr double kDomainSlack = 1e-12;
inline constexpr double kAiryWindow = 3.0;
inline constexpr double kAlgorithmC = 100.0;
inline constexpr double kFeasibleRows = 1e7;

/// theta(x, t) phase; x, t are physical coordinates.
double theta(double x, double t, const LatticeParams& params);

AmplitudePair approx_between_peaks(long ix, long it, const LatticeParams& params);

/// Airy-zone argument Delta(x_n, t_n).
double airy_delta(double x, double t, const LatticeParams& params);
AmplitudePair approx_airy(long ix, long it, const LatticeParams& params, double window = kAiryWindow);

/// Rate function H(v) on 1/sqrt(1+mu^2) <= |v| < 1.
double rate_H(double v, const LatticeParams& params);
AmplitudePair approx_outside(long ix, long it, const LatticeParams& params);
/// (1/t) log P(2 eps ceil(v t / 2 eps), t); t is physical and t/(2 eps) integral.
double free_energy(double v, double t, const LatticeParams& params);

/// Limiting CDF F(v) and its density.
double limiting_F(double v, const LatticeParams& params);
double limiting_density(double v, const LatticeParams& params);
/// Integral of v^r F'(v) dv.
double limiting_moment(int r, const LatticeParams& params);

/// Distribution of x/t over one DP row.
class EmpiricalDistribution {
 public:
  EmpiricalDistribution(const lattice::Row& row);
  /// Sum of P(x, t) over x <= v t.
  double cdf(double v) const;
  /// Sum of (x/t)^r P(x, t).
  double moment(int r) const;
  long it() const noexcept { return it_; }

 private:
  long it_;
  std::vector<double> v_;    // x/t at black sites, increasing
  std::vector<double> cum_;  // running probability
  std::vector<double> p_;
};

double empirical_cdf(double v, long it, const LatticeParams& params);
double moment(int r, long it, const LatticeParams& params);

/// 2x2 complex matrix.
struct PropagatorMatrix {
  std::array<std::array<cplx, 2>, 2> g{};
  cplx& operator()(int k, int l) { return g[k - 1][l - 1]; }
  const cplx& operator()(int k, int l) const { return g[k - 1][l - 1]; }
};

cplx continuum_approx(double x, double t, const LatticeParams& params);
PropagatorMatrix retarded_G(double x, double t, double m);
PropagatorMatrix feynman_G(double x, double t, double m);
cplx feynman_kernel(double x, double t, double m);

/// Largest |(1/2eps) a - G11 - i G12| over lattice points x in (-t+delta, t-delta).
double continuum_sup_error(double m, double t, double eps, double delta);

/// Mass within t - |x| <= delta at time t.
double concentration_mass(double m, double t, double eps, double delta);

/// Prescribed lattice step of Algorithm 1.
double algorithm1_eps(double m, double x, double t, double delta);

struct Algorithm1Result {
  double eps = 0.0;         // step actually used, or the prescribed one if infeasible
  double prescribed = 0.0;  // formula value
  bool feasible = false;
  bool ran = false;
  long rows = 0;
  PropagatorMatrix approx;
  PropagatorMatrix exact;
  double error = 0.0;  // max entry-wise |approx - exact|
};

Algorithm1Result algorithm1_run(double m, double x, double t, double delta,
                                std::optional<double> eps_override = std::nullopt);

struct TripleSample {
  double x = 0.0;
  double t = 0.0;
  double eps = 0.0;
  cplx ratio;
};

/// r_n = [a/(2 i eps_n)] / [sqrt(m/(2 pi t_n)) exp(-i m t_n - i pi/4 + i m x_n^2/(2 t_n))].
std::vector<TripleSample> triple_limit_check(const std::vector<std::array<double, 3>>& sequence, double m);

/// Sequences of the triple-limit experiment.
std::vector<std::array<double, 3>> counterexample_shrinking(long n_min, long n_max);  // (0, 4n^2, 1/2n)
std::vector<std::array<double, 3>> counterexample_fixed(double eps, long n_min, long n_max);  // (0, 2n eps, eps)
std::vector<std::array<double, 3>> admissible_sequence(const std::vector<long>& ns);  // (0, n, ~n^-0.6)

cplx simple_asymptotic(double x, double t, const LatticeParams& params);

/// (b1, b2) main terms at a white query site.
AmplitudePair anti_asymptotic(long ix, long it, const LatticeParams& params);

/// Nearest integer to v, tolerant of representation error in quotients.
long lattice_round(double v);
/// Ceiling tolerant of representation error: ceil(4999.9999999999) = 5000.
long lattice_ceil(double v);

}  // namespace checkers::asymptotics
