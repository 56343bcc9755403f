#pragma once

// Dynamic-programming engines for Feynman-checkers amplitudes: floating-point
// rows for arbitrary (m, eps), exact big-integer rows for m = eps = 1,
// absorption, external gauge fields, restricted and two-particle amplitudes.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "checkers/types.hpp"

namespace checkers::lattice {

/// Values on the black sites of one horizontal it: ix = -it, -it+2, ..., it.
/// Lookups at white sites or outside the light cone return a zero value.
template <class T>
class BlackRow {
 public:
  BlackRow() = default;
  BlackRow(long it, std::vector<T> values) : it_(it), values_(std::move(values)) {}

  long it() const noexcept { return it_; }
  std::size_t size() const noexcept { return values_.size(); }
  long ix_at(std::size_t j) const noexcept { return -it_ + 2 * static_cast<long>(j); }

  bool holds(long ix) const noexcept {
    return ix >= -it_ && ix <= it_ && ((ix + it_) % 2 + 2) % 2 == 0;
  }

  T at(long ix) const { return holds(ix) ? values_[static_cast<std::size_t>((ix + it_) / 2)] : T{}; }

  T& operator[](std::size_t j) { return values_[j]; }
  const T& operator[](std::size_t j) const { return values_[j]; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  std::vector<T>& values() noexcept { return values_; }
  const std::vector<T>& values() const noexcept { return values_; }

 private:
  long it_ = 0;
  std::vector<T> values_;
};

using Row = BlackRow<AmplitudePair>;

/// Integer-scaled arrow for m = eps = 1: a_k = A_k * 2^{-(it-1)/2}.
struct ExactPair {
  mpz_class A1;
  mpz_class A2;
  friend bool operator==(const ExactPair&, const ExactPair&) = default;
};

using ExactRow = BlackRow<ExactPair>;

struct ExactAmplitude {
  mpz_class A1;
  mpz_class A2;
  long it = 1;

  /// Converts to floating point; exact to the last bit of the mantissa.
  AmplitudePair to_pair() const;
};

/// Multiplies an integer by 2^{-(it-1)/2} without overflow.
double scale_exact(const mpz_class& value, long it);

// ---------------------------------------------------------------------------
// Row steppers. Each starts at it = 1 with the single nonzero value a2(1,1)=1.

class DiracStepper {
 public:
  explicit DiracStepper(const LatticeParams& params);

  const Row& row() const noexcept { return row_; }
  long it() const noexcept { return row_.it(); }
  void step();
  /// Zeros the listed black sites of the current row.
  void absorb(const std::function<bool(long ix, long it)>& in_set);

 private:
  LatticeParams params_;
  double c_;
  double mu_;
  Row row_;
};

class ExactStepper {
 public:
  ExactStepper();

  const ExactRow& row() const noexcept { return row_; }
  long it() const noexcept { return row_.it(); }
  void step();

 private:
  ExactRow row_;
};

// ---------------------------------------------------------------------------
// Basic and massive amplitudes.

ExactAmplitude amplitude_exact(long ix, long it);
/// All exact rows 1..it_max; element k holds row it = k + 1.
std::vector<ExactRow> exact_rows(long it_max);

Row amplitude_row(long it, const LatticeParams& params);
/// Rows 1..it_max; element k holds row it = k + 1.
std::vector<Row> amplitude_grid(long it_max, const LatticeParams& params);
AmplitudePair amplitude_dp(long ix, long it, const LatticeParams& params);
double probability(long ix, long it, const LatticeParams& params);

// ---------------------------------------------------------------------------
// Absorption.

/// Finite set of absorbing sites together with vertical barrier lines {x = n}.
class AbsorptionSet {
 public:
  AbsorptionSet() = default;

  AbsorptionSet& add_site(long ix, long it);
  AbsorptionSet& add_line(long ix);

  bool contains(long ix, long it) const;
  bool empty() const noexcept { return sites_.empty() && lines_.empty(); }
  const std::set<std::pair<long, long>>& sites() const noexcept { return sites_; }
  const std::set<long>& lines() const noexcept { return lines_; }

 private:
  std::set<std::pair<long, long>> sites_;
  std::set<long> lines_;
};

/// Sum over paths avoiding B at every intermediate time; the endpoint may lie in B.
AmplitudePair amplitude_bypass(long ix, long it, const LatticeParams& params, const AbsorptionSet& absorbing);

/// Sum_{t=1..t_max} P(0, t bypass barrier) for m = eps = 1 unless params given.
double absorption_partial_sum(long t_max, const AbsorptionSet& barrier,
                              const LatticeParams& params = LatticeParams::unit());

/// All partial sums S(1), ..., S(t_max) of the series above.
std::vector<double> absorption_partial_sums(long t_max, const AbsorptionSet& barrier,
                                            const LatticeParams& params = LatticeParams::unit());

// ---------------------------------------------------------------------------
// External gauge field on auxiliary edges (m = eps = 1 model).

/// Edge weights keyed by doubled midpoint coordinates (2x, 2t), both odd.
/// Unlisted edges fall back to the rule (if any) and then to +1.
class GaugeField {
 public:
  using Rule = std::function<cplx(long x2, long t2)>;

  GaugeField() = default;
  explicit GaugeField(Rule rule) : rule_(std::move(rule)) {}

  /// u(x+1/2, t+1/2) = -1 exactly when x and t are both even.
  static GaugeField homogeneous();

  GaugeField& set(long x2, long t2, cplx weight);
  cplx weight(long x2, long t2) const;

 private:
  std::map<std::pair<long, long>, cplx> weights_;
  Rule rule_;
};

class FieldStepper {
 public:
  explicit FieldStepper(GaugeField field);

  const BlackRow<FieldAmplitude>& row() const noexcept { return row_; }
  long it() const noexcept { return row_.it(); }
  void step();

 private:
  GaugeField field_;
  BlackRow<FieldAmplitude> row_;
};

FieldAmplitude amplitude_field(long ix, long it, const GaugeField& field);

/// Sum_x |a1(x,t,u)|^2 for t = 1..t_max.
std::vector<double> field_chirality_series(long t_max, const GaugeField& field);

// ---------------------------------------------------------------------------
// Spin: direction-restricted amplitudes and chirality flip.

/// Sum over paths from (0,0) to (dx,dt) that start upwards-right and finish
/// with the given move direction: a2 for Right, a1 for Left.
double restricted_amplitude(long dx, long dt, Direction end, const LatticeParams& params);

/// S1(t) = sum_x a1(x,t)^2 for m = eps = 1.
double chirality_flip_sum(long t);
/// S1(1), ..., S1(t_max) for the given parameters.
std::vector<double> chirality_series(long t_max, const LatticeParams& params = LatticeParams::unit());

// ---------------------------------------------------------------------------
// Two identical particles.

/// Emission from A=(0,0) and A'=(x0,0), both starting upwards-right; detection
/// at F=(x,t) and F'=(x2,t) with last moves end / end2.
struct PairQuery {
  long x0 = 1;
  long x = 0;
  long x2 = 0;
  long t = 1;
  Direction end = Direction::Right;
  Direction end2 = Direction::Right;
};

/// Direct term minus exchanged term, each a product of restricted amplitudes.
/// Summing complex path arrows instead multiplies the result by the constant
/// phase f(end)*f(end2), where f(Right) = i and f(Left) = 1.
cplx pair_amplitude(const PairQuery& q, const LatticeParams& params);
double pair_probability(const PairQuery& q, const LatticeParams& params);

/// Complex sum of path arrows a(s) over paths from (0,0) to (dx,dt) starting
/// upwards-right and ending with the given move: i*a2 (Right) or a1 (Left).
cplx restricted_path_sum(long dx, long dt, Direction end, const LatticeParams& params);

}  // namespace checkers::lattice
