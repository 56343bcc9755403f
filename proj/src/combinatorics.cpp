#include "checkers/combinatorics.hpp"

#include <algorithm>
#include <cmath>

#include "checkers/error.hpp"
#include "checkers/spectral.hpp"

namespace checkers::combinatorics {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

// Backtracking over points in id order. Out-edge statuses are chosen at the
// start point; edges entering row 0 are guessed up front and checked when
// the last row chooses them.
class Enumerator {
 public:
  Enumerator(const TorusLattice& lat, std::optional<long> source, std::optional<long> sink, bool keep)
      : lat_(lat), source_(source), sink_(sink), keep_(keep) {
    const long E = lat.num_edges();
    used_.assign(E, -1);
    succ_.assign(E, -1);
    guess_.assign(E, -1);
  }

  void run() {
    const long T = lat_.size();
    // Edges entering row 0 start in row 2T-1.
    std::vector<long> wrap;
    for (long p = (2 * T - 1) * T; p < 2 * T * T; ++p) {
      wrap.push_back(lat_.edge(p, Direction::Right));
      wrap.push_back(lat_.edge(p, Direction::Left));
    }
    const long n = static_cast<long>(wrap.size());
    for (long mask = 0; mask < (1L << n); ++mask) {
      bool ok = true;
      for (long i = 0; i < n; ++i) {
        const int s = (mask >> i) & 1;
        if (!s && (wrap[i] == source_ || wrap[i] == sink_)) ok = false;
        guess_[wrap[i]] = s;
      }
      if (!ok) continue;
      visit(0);
    }
  }

  cplx sum{0.0, 0.0};
  long count = 0;
  std::vector<LoopConfiguration> configs;

 private:
  int status(long e) const { return used_[e] >= 0 ? used_[e] : guess_[e]; }

  void visit(long p) {
    if (p == lat_.num_points()) {
      leaf();
      return;
    }
    const auto in = lat_.in_edges(p);
    std::vector<long> ins;
    for (long e : in)
      if (status(e) == 1 && e != sink_) ins.push_back(e);
    const long outs[2] = {lat_.edge(p, Direction::Right), lat_.edge(p, Direction::Left)};
    for (int choice = 0; choice < 4; ++choice) {
      int s[2] = {choice & 1, (choice >> 1) & 1};
      bool ok = true;
      for (int i = 0; i < 2; ++i) {
        const long e = outs[i];
        if ((e == source_ || e == sink_) && !s[i]) ok = false;
        if (guess_[e] >= 0 && guess_[e] != s[i]) ok = false;
      }
      if (!ok) continue;
      std::vector<long> os;
      for (int i = 0; i < 2; ++i)
        if (s[i] && outs[i] != source_) os.push_back(outs[i]);
      if (os.size() != ins.size()) continue;
      used_[outs[0]] = s[0];
      used_[outs[1]] = s[1];
      if (ins.empty()) {
        visit(p + 1);
      } else if (ins.size() == 1) {
        succ_[ins[0]] = os[0];
        visit(p + 1);
        succ_[ins[0]] = -1;
      } else {
        for (int perm = 0; perm < 2; ++perm) {
          succ_[ins[0]] = os[perm];
          succ_[ins[1]] = os[1 - perm];
          visit(p + 1);
        }
        succ_[ins[0]] = succ_[ins[1]] = -1;
      }
      used_[outs[0]] = used_[outs[1]] = -1;
    }
  }

  void leaf() {
    const long E = lat_.num_edges();
    std::vector<char> seen(E, 0);
    cplx w{1.0, 0.0};
    LoopConfiguration cfg;
    if (source_) {
      std::vector<long> path;
      long e = *source_;
      while (true) {
        seen[e] = 1;
        path.push_back(e);
        if (e == *sink_) break;
        const long n = succ_[e];
        w *= lat_.node_weight(e, n);
        e = n;
      }
      if (keep_) cfg.path = std::move(path);
    }
    long loops = 0;
    for (long e0 = 0; e0 < E; ++e0) {
      if (seen[e0] || used_[e0] != 1) continue;
      ++loops;
      std::vector<long> loop;
      long e = e0;
      do {
        seen[e] = 1;
        loop.push_back(e);
        const long n = succ_[e];
        w *= lat_.node_weight(e, n);
        e = n;
      } while (e != e0);
      if (keep_) cfg.loops.push_back(std::move(loop));
    }
    if (loops % 2 == 1) w = -w;
    sum += w;
    ++count;
    if (keep_) {
      cfg.arrow = w;
      configs.push_back(std::move(cfg));
    }
  }

  const TorusLattice& lat_;
  std::optional<long> source_;
  std::optional<long> sink_;
  bool keep_;
  std::vector<int> used_;
  std::vector<long> succ_;
  std::vector<int> guess_;
};

void check_ends(const TorusLattice& lat, std::optional<long> source, std::optional<long> sink) {
  require(source.has_value() == sink.has_value(), ErrorCode::InvalidArgument, "source and sink go together");
  if (source) {
    require(*source >= 0 && *source < lat.num_edges() && *sink >= 0 && *sink < lat.num_edges(),
            ErrorCode::InvalidArgument, "edge id out of range");
  }
}

}  // namespace

TorusLattice::TorusLattice(long T, double m, double eps, double delta) : T_(T), m_(m), eps_(eps), delta_(delta) {
  require(T >= 1, ErrorCode::InvalidArgument, "T must be positive");
  require(T <= kTorusMax, ErrorCode::SizeLimit, "exhaustive enumeration is limited to T <= 3");
  require(std::isfinite(m) && m >= 0.0, ErrorCode::InvalidArgument, "m must be finite and nonnegative");
  require(std::isfinite(eps) && eps > 0.0, ErrorCode::InvalidArgument, "eps must be positive");
  require(std::isfinite(delta) && delta >= 0.0 && delta < 1.0, ErrorCode::InvalidArgument, "delta must be in [0, 1)");
}

long TorusLattice::point(long X, long Y) const {
  X = mod(X, 2 * T_);
  Y = mod(Y, 2 * T_);
  require((X + Y) % 2 == 0, ErrorCode::InvalidArgument, "X + Y must be even");
  return Y * T_ + X / 2;
}

long TorusLattice::edge_end(long e) const {
  const long p = edge_start(e);
  const long dx = edge_dir(e) == Direction::Right ? 1 : -1;
  return point(point_x(p) + dx, point_y(p) + 1);
}

std::array<long, 2> TorusLattice::in_edges(long p) const {
  const long X = point_x(p), Y = point_y(p);
  return {edge(point(X - 1, Y - 1), Direction::Right), edge(point(X + 1, Y - 1), Direction::Left)};
}

cplx TorusLattice::node_weight(long e, long e2) const {
  const bool turn = edge_dir(e) != edge_dir(e2);
  if (point_x(edge_end(e)) % 2 == 1) {
    const double mu = this->mu();
    return (turn ? cplx(0.0, -mu) : cplx(1.0, 0.0)) / std::sqrt(1.0 + mu * mu);
  }
  return (turn ? cplx(-delta_, 0.0) : cplx(1.0, 0.0)) / std::sqrt(1.0 - delta_ * delta_);
}

EnumerationResult enumerate_configs(const TorusLattice& lat, std::optional<long> source, std::optional<long> sink) {
  check_ends(lat, source, sink);
  Enumerator en(lat, source, sink, false);
  en.run();
  return {en.sum, en.count};
}

std::vector<LoopConfiguration> list_configs(const TorusLattice& lat, std::optional<long> source,
                                            std::optional<long> sink) {
  check_ends(lat, source, sink);
  Enumerator en(lat, source, sink, true);
  en.run();
  return std::move(en.configs);
}

cplx finite_propagator(const TorusLattice& lat, long a, long f) {
  const cplx z = enumerate_configs(lat).sum;
  require(std::abs(z) > 1e-13, ErrorCode::ZeroDenominator, "loop-configuration sum vanishes");
  return enumerate_configs(lat, a, f).sum / z;
}

long source_edge(const TorusLattice& lat) { return lat.edge(lat.point(0, 0), Direction::Right); }

long sink_edge(const TorusLattice& lat, long ix, long it, int k) {
  require(k == 1 || k == 2, ErrorCode::InvalidArgument, "k must be 1 or 2");
  // f_1 ends at (x - eps/2, t + eps/2), f_2 at (x + eps/2, t + eps/2).
  const long p = lat.point(2 * ix, 2 * it);
  return lat.edge(p, k == 1 ? Direction::Left : Direction::Right);
}

cplx anti_checker_value(long ix, long it, int k, double m, double eps, long T, double delta) {
  const TorusLattice lat(T, m, eps, delta);
  const cplx phase = (k == 1) ? cplx(0.0, -1.0) : cplx(-1.0, 0.0);  // (-i)^k
  return -2.0 * phase * finite_propagator(lat, source_edge(lat), sink_edge(lat, ix, it, k));
}

AntiCheckerEstimate anti_checker_estimate(long ix, long it, double m, double eps, long T) {
  AntiCheckerEstimate est;
  const cplx phase[2] = {cplx(0.0, -1.0), cplx(-1.0, 0.0)};
  for (int i = 0; i < 3; ++i) {
    const TorusLattice lat(T, m, eps, est.deltas[i]);
    const cplx z = enumerate_configs(lat).sum;
    require(std::abs(z) > 1e-13, ErrorCode::ZeroDenominator, "loop-configuration sum vanishes");
    for (int k = 1; k <= 2; ++k) {
      const cplx num = enumerate_configs(lat, source_edge(lat), sink_edge(lat, ix, it, k)).sum;
      est.ladder[k - 1][i] = -2.0 * phase[k - 1] * num / z;
    }
  }
  std::array<double, 3> h;
  for (int i = 0; i < 3; ++i) h[i] = est.deltas[i] * est.deltas[i];
  for (int k = 0; k < 2; ++k) {
    // Neville at h = 0 on h = delta^2.
    std::array<cplx, 3> p = est.ladder[k];
    for (int lvl = 1; lvl < 3; ++lvl)
      for (int i = 0; i + lvl < 3; ++i) p[i] = (h[i] * p[i + 1] - h[i + lvl] * p[i]) / (h[i] - h[i + lvl]);
    est.extrapolated[k] = p[0];
  }
  const LatticeParams params(m, eps);
  try {
    est.fourier[0] = spectral::anti_amplitude(ix, it + 1, params).A1;
  } catch (const Error&) {
    est.fourier[0] = cplx(NAN, NAN);
  }
  try {
    est.fourier[1] = spectral::anti_amplitude(ix + 1, it + 1, params).A2;
  } catch (const Error&) {
    est.fourier[1] = cplx(NAN, NAN);
  }
  return est;
}

}  // namespace checkers::combinatorics
