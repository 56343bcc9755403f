#include "checkers/lattice.hpp"

#include <cmath>
#include <cstdlib>

namespace checkers::lattice {

double scale_exact(const mpz_class& value, long it) {
  if (value == 0) return 0.0;
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  long shift = it - 1;
  double out = std::ldexp(mant, static_cast<int>(exp2 - shift / 2));
  if (shift % 2 != 0) out *= M_SQRT1_2;
  return out;
}

AmplitudePair ExactAmplitude::to_pair() const { return {scale_exact(A1, it), scale_exact(A2, it)}; }

// ---------------------------------------------------------------------------

DiracStepper::DiracStepper(const LatticeParams& params)
    : params_(params), c_(1.0 / params.norm()), mu_(params.mu()), row_(1, {{0.0, 0.0}, {0.0, 1.0}}) {}

void DiracStepper::step() {
  const long it = row_.it();
  const auto& old = row_.values();
  std::vector<AmplitudePair> next(static_cast<std::size_t>(it + 2));
  const auto n = static_cast<std::size_t>(it);
  for (std::size_t j = 0; j <= n + 1; ++j) {
    if (j <= n) next[j].a1 = c_ * (old[j].a1 + mu_ * old[j].a2);
    if (j >= 1) next[j].a2 = c_ * (old[j - 1].a2 - mu_ * old[j - 1].a1);
  }
  row_ = Row(it + 1, std::move(next));
}

void DiracStepper::absorb(const std::function<bool(long, long)>& in_set) {
  for (std::size_t j = 0; j < row_.size(); ++j)
    if (in_set(row_.ix_at(j), row_.it())) row_[j] = {};
}

ExactStepper::ExactStepper() : row_(1, {{0, 0}, {0, 1}}) {}

void ExactStepper::step() {
  const long it = row_.it();
  const auto& old = row_.values();
  std::vector<ExactPair> next(static_cast<std::size_t>(it + 2));
  const auto n = static_cast<std::size_t>(it);
  for (std::size_t j = 0; j <= n + 1; ++j) {
    if (j <= n) next[j].A1 = old[j].A2 + old[j].A1;
    if (j >= 1) next[j].A2 = old[j - 1].A2 - old[j - 1].A1;
  }
  row_ = ExactRow(it + 1, std::move(next));
}

// ---------------------------------------------------------------------------

ExactAmplitude amplitude_exact(long ix, long it) {
  require(it >= 1, ErrorCode::InvalidArgument, "it must be >= 1");
  ExactStepper s;
  while (s.it() < it) s.step();
  ExactPair p = s.row().at(ix);
  return {p.A1, p.A2, it};
}

std::vector<ExactRow> exact_rows(long it_max) {
  require(it_max >= 1, ErrorCode::InvalidArgument, "it_max must be >= 1");
  std::vector<ExactRow> rows;
  rows.reserve(static_cast<std::size_t>(it_max));
  ExactStepper s;
  rows.push_back(s.row());
  while (s.it() < it_max) {
    s.step();
    rows.push_back(s.row());
  }
  return rows;
}

Row amplitude_row(long it, const LatticeParams& params) {
  require(it >= 1, ErrorCode::InvalidArgument, "it must be >= 1");
  DiracStepper s(params);
  while (s.it() < it) s.step();
  return s.row();
}

std::vector<Row> amplitude_grid(long it_max, const LatticeParams& params) {
  require(it_max >= 1, ErrorCode::InvalidArgument, "it_max must be >= 1");
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(it_max));
  DiracStepper s(params);
  rows.push_back(s.row());
  while (s.it() < it_max) {
    s.step();
    rows.push_back(s.row());
  }
  return rows;
}

AmplitudePair amplitude_dp(long ix, long it, const LatticeParams& params) {
  return amplitude_row(it, params).at(ix);
}

double probability(long ix, long it, const LatticeParams& params) {
  return amplitude_dp(ix, it, params).probability();
}

// ---------------------------------------------------------------------------

AbsorptionSet& AbsorptionSet::add_site(long ix, long it) {
  require(!(ix == 0 && it == 0), ErrorCode::InvalidArgument, "the source (0,0) cannot be absorbing");
  sites_.emplace(ix, it);
  return *this;
}

AbsorptionSet& AbsorptionSet::add_line(long ix) {
  lines_.insert(ix);
  return *this;
}

bool AbsorptionSet::contains(long ix, long it) const {
  if (ix == 0 && it == 0) return false;
  return lines_.count(ix) != 0 || sites_.count({ix, it}) != 0;
}

AmplitudePair amplitude_bypass(long ix, long it, const LatticeParams& params, const AbsorptionSet& absorbing) {
  require(it >= 1, ErrorCode::InvalidArgument, "it must be >= 1");
  auto in_set = [&](long x, long t) { return absorbing.contains(x, t); };
  DiracStepper s(params);
  while (s.it() < it) {
    s.absorb(in_set);
    s.step();
  }
  return s.row().at(ix);
}

std::vector<double> absorption_partial_sums(long t_max, const AbsorptionSet& barrier, const LatticeParams& params) {
  require(t_max >= 1, ErrorCode::InvalidArgument, "t_max must be >= 1");
  auto in_set = [&](long x, long t) { return barrier.contains(x, t); };
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(t_max));
  double acc = 0.0;
  DiracStepper s(params);
  for (;;) {
    acc += s.row().at(0).probability();
    sums.push_back(acc);
    if (s.it() >= t_max) break;
    s.absorb(in_set);
    s.step();
  }
  return sums;
}

double absorption_partial_sum(long t_max, const AbsorptionSet& barrier, const LatticeParams& params) {
  return absorption_partial_sums(t_max, barrier, params).back();
}

// ---------------------------------------------------------------------------

GaugeField GaugeField::homogeneous() {
  return GaugeField([](long x2, long t2) {
    long x = (x2 - 1) / 2;
    long t = (t2 - 1) / 2;
    bool even = (x % 2 == 0) && (t % 2 == 0);
    return even ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
  });
}

GaugeField& GaugeField::set(long x2, long t2, cplx weight) {
  require(std::labs(x2) % 2 == 1 && std::labs(t2) % 2 == 1, ErrorCode::InvalidArgument,
          "gauge keys must be odd (doubled half-integer midpoints)");
  require(std::abs(std::abs(weight) - 1.0) < 1e-12, ErrorCode::InvalidArgument, "gauge weights must have unit modulus");
  weights_[{x2, t2}] = weight;
  return *this;
}

cplx GaugeField::weight(long x2, long t2) const {
  auto it = weights_.find({x2, t2});
  if (it != weights_.end()) return it->second;
  if (rule_) return rule_(x2, t2);
  return {1.0, 0.0};
}

FieldStepper::FieldStepper(GaugeField field) : field_(std::move(field)) {
  row_ = BlackRow<FieldAmplitude>(1, {{}, {cplx{}, field_.weight(1, 1)}});
}

void FieldStepper::step() {
  const long it = row_.it();
  const auto& old = row_.values();
  std::vector<FieldAmplitude> next(static_cast<std::size_t>(it + 2));
  const auto n = static_cast<std::size_t>(it);
  const long t2 = 2 * it + 1;
  for (std::size_t j = 0; j <= n + 1; ++j) {
    long x = -(it + 1) + 2 * static_cast<long>(j);
    if (j <= n) next[j].a1 = M_SQRT1_2 * field_.weight(2 * x + 1, t2) * (old[j].a1 + old[j].a2);
    if (j >= 1) next[j].a2 = M_SQRT1_2 * field_.weight(2 * x - 1, t2) * (old[j - 1].a2 - old[j - 1].a1);
  }
  row_ = BlackRow<FieldAmplitude>(it + 1, std::move(next));
}

FieldAmplitude amplitude_field(long ix, long it, const GaugeField& field) {
  require(it >= 1, ErrorCode::InvalidArgument, "it must be >= 1");
  FieldStepper s(field);
  while (s.it() < it) s.step();
  return s.row().at(ix);
}

std::vector<double> field_chirality_series(long t_max, const GaugeField& field) {
  require(t_max >= 1, ErrorCode::InvalidArgument, "t_max must be >= 1");
  std::vector<double> out;
  FieldStepper s(field);
  for (;;) {
    double sum = 0.0;
    for (const auto& v : s.row()) sum += std::norm(v.a1);
    out.push_back(sum);
    if (s.it() >= t_max) break;
    s.step();
  }
  return out;
}

// ---------------------------------------------------------------------------

double restricted_amplitude(long dx, long dt, Direction end, const LatticeParams& params) {
  require(dt >= 1, ErrorCode::InvalidArgument, "dt must be >= 1");
  AmplitudePair a = amplitude_dp(dx, dt, params);
  return end == Direction::Right ? a.a2 : a.a1;
}

cplx restricted_path_sum(long dx, long dt, Direction end, const LatticeParams& params) {
  double r = restricted_amplitude(dx, dt, end, params);
  return end == Direction::Right ? cplx(0.0, r) : cplx(r, 0.0);
}

double chirality_flip_sum(long t) {
  require(t >= 1, ErrorCode::InvalidArgument, "t must be >= 1");
  return chirality_series(t).back();
}

std::vector<double> chirality_series(long t_max, const LatticeParams& params) {
  require(t_max >= 1, ErrorCode::InvalidArgument, "t_max must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(t_max));
  DiracStepper s(params);
  for (;;) {
    double sum = 0.0;
    for (const auto& v : s.row()) sum += v.a1 * v.a1;
    out.push_back(sum);
    if (s.it() >= t_max) break;
    s.step();
  }
  return out;
}

// ---------------------------------------------------------------------------

cplx pair_amplitude(const PairQuery& q, const LatticeParams& params) {
  require(q.x0 != 0, ErrorCode::InvalidArgument, "the two sources must differ (x0 != 0)");
  require(q.t >= 1, ErrorCode::InvalidArgument, "t must be >= 1");
  // Both particles share the same time span, so each factor is a
  // translated single-particle restricted amplitude.
  double direct = restricted_amplitude(q.x, q.t, q.end, params) * restricted_amplitude(q.x2 - q.x0, q.t, q.end2, params);
  double exchanged =
      restricted_amplitude(q.x2, q.t, q.end2, params) * restricted_amplitude(q.x - q.x0, q.t, q.end, params);
  return {direct - exchanged, 0.0};
}

double pair_probability(const PairQuery& q, const LatticeParams& params) { return std::norm(pair_amplitude(q, params)); }

}  // namespace checkers::lattice
