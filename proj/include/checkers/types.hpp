#pragma once

#include <cmath>
#include <complex>

#include "checkers/error.hpp"

namespace checkers {

using cplx = std::complex<double>;

/// Mass m >= 0 and lattice step eps > 0 in natural units (hbar = c = 1).
class LatticeParams {
 public:
  LatticeParams() = default;
  LatticeParams(double m, double eps) : m_(m), eps_(eps) {
    require(std::isfinite(m) && m >= 0.0, ErrorCode::InvalidArgument, "mass must be finite and >= 0");
    require(std::isfinite(eps) && eps > 0.0, ErrorCode::InvalidArgument, "lattice step must be finite and > 0");
    require(std::isfinite(m * eps), ErrorCode::InvalidArgument, "m*eps must be finite");
  }

  double m() const noexcept { return m_; }
  double eps() const noexcept { return eps_; }
  /// Dimensionless product m*eps.
  double mu() const noexcept { return m_ * eps_; }
  /// sqrt(1 + mu^2), the per-step normalization.
  double norm() const noexcept { return std::sqrt(1.0 + mu() * mu()); }

  static LatticeParams unit() { return {1.0, 1.0}; }

 private:
  double m_ = 1.0;
  double eps_ = 1.0;
};

/// Lattice point in units of eps: x = ix*eps, t = it*eps.
struct Site {
  long ix = 0;
  long it = 0;

  bool black() const noexcept { return ((ix + it) % 2 + 2) % 2 == 0; }
  friend bool operator==(const Site&, const Site&) = default;
};

/// The two real components of the arrow a = a1 + i*a2.
struct AmplitudePair {
  double a1 = 0.0;
  double a2 = 0.0;

  double probability() const noexcept { return a1 * a1 + a2 * a2; }
  cplx value() const noexcept { return {a1, a2}; }
};

/// Complex components used when edge weights are unit complex numbers.
struct FieldAmplitude {
  cplx a1;
  cplx a2;

  double probability() const noexcept { return std::norm(a1) + std::norm(a2); }
};

enum class Direction { Left, Right };

}  // namespace checkers
