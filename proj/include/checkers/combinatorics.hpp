#pragma once

// Loop configurations on the small torus lattice of the combinatorial
// anti-checkers model, enumerated exhaustively.

#include <array>
#include <optional>
#include <vector>

#include "checkers/types.hpp"

namespace checkers::combinatorics {

inline constexpr long kTorusMax = 3;

/// Points are addressed in half-step units: X = 2x/eps, Y = 2t/eps modulo 2T
/// with X + Y even. A point is even when X is even.
class TorusLattice {
 public:
  TorusLattice(long T, double m, double eps, double delta);

  long size() const noexcept { return T_; }
  double mu() const noexcept { return m_ * eps_; }
  double m() const noexcept { return m_; }
  double eps() const noexcept { return eps_; }
  double delta() const noexcept { return delta_; }

  long num_points() const noexcept { return 2 * T_ * T_; }
  long num_edges() const noexcept { return 4 * T_ * T_; }

  /// Point id of (X, Y); both are reduced modulo 2T first.
  long point(long X, long Y) const;
  long point_x(long p) const noexcept { return 2 * (p % T_) + point_y(p) % 2; }
  long point_y(long p) const noexcept { return p / T_; }

  /// Edge leaving point p in direction d (right: X+1, left: X-1).
  long edge(long p, Direction d) const noexcept { return 2 * p + (d == Direction::Right ? 0 : 1); }
  long edge_start(long e) const noexcept { return e / 2; }
  Direction edge_dir(long e) const noexcept { return e % 2 == 0 ? Direction::Right : Direction::Left; }
  long edge_end(long e) const;
  /// The two edges entering point p: from lower-left (right-moving) and lower-right.
  std::array<long, 2> in_edges(long p) const;

  /// Weight of the node formed by consecutive edges e then e2.
  cplx node_weight(long e, long e2) const;

 private:
  long T_;
  double m_;
  double eps_;
  double delta_;
};

/// One loop configuration: loops as cyclic edge sequences (starting at their
/// smallest edge) and, optionally, the source-to-sink path.
struct LoopConfiguration {
  std::vector<std::vector<long>> loops;
  std::optional<std::vector<long>> path;
  cplx arrow;
};

struct EnumerationResult {
  cplx sum;
  long count = 0;
};

/// Sum of arrows over loop configurations; with source and sink given, over
/// configurations containing exactly one path from source to sink.
EnumerationResult enumerate_configs(const TorusLattice& lat, std::optional<long> source = std::nullopt,
                                    std::optional<long> sink = std::nullopt);

/// Same enumeration, materializing every configuration (for small lattices).
std::vector<LoopConfiguration> list_configs(const TorusLattice& lat, std::optional<long> source = std::nullopt,
                                            std::optional<long> sink = std::nullopt);

/// Finite-lattice propagator A(a -> f): ratio of the two sums.
cplx finite_propagator(const TorusLattice& lat, long a, long f);

/// Edges a0 (from the origin, moving right) and f_k at (x, t) reduced modulo T.
long source_edge(const TorusLattice& lat);
long sink_edge(const TorusLattice& lat, long ix, long it, int k);

/// -2(-i)^k A(a0 -> f_k) at fixed T for one delta.
cplx anti_checker_value(long ix, long it, int k, double m, double eps, long T, double delta);

struct AntiCheckerEstimate {
  std::array<double, 3> deltas{1e-1, 1e-2, 1e-3};
  std::array<std::array<cplx, 3>, 2> ladder{};  // [k-1][delta index]
  std::array<cplx, 2> extrapolated{};           // Richardson in delta^2
  std::array<cplx, 2> fourier{};                // A_1(x, t+eps), A_2(x+eps, t+eps)
};

/// Delta-ladder estimate at fixed T, reported next to the Fourier values.
AntiCheckerEstimate anti_checker_estimate(long ix, long it, double m, double eps, long T);

}  // namespace checkers::combinatorics
