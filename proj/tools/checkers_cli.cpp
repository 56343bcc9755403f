// Command-line front end. Talks to the library only through checkers.h.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "checkers.h"

namespace {

using json = nlohmann::json;

constexpr int kExitFailedCheck = 1;
constexpr int kExitBadInput = 2;

// Thrown when a library call fails; carries the exit code.
struct CallError {
  fc_status status;
  std::string what;
};

void check(fc_status s) {
  if (s != FC_OK) throw CallError{s, std::string(fc_status_string(s)) + ": " + fc_last_error()};
}

// Adding 0.0 turns -0 into 0.
std::string num(double v) {
  v += 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  v += 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct ParamsDeleter {
  void operator()(fc_params* p) const { fc_params_destroy(p); }
};
using Params = std::unique_ptr<fc_params, ParamsDeleter>;

Params make_params(double m, double eps) {
  fc_params* p = nullptr;
  check(fc_params_create(m, eps, &p));
  return Params(p);
}

// Lattice index of a physical coordinate; it must be a multiple of eps.
long to_index(double v, double eps, const char* name) {
  const double q = v / eps;
  const double r = std::nearbyint(q);
  if (std::fabs(q - r) > 1e-9 * std::max(1.0, std::fabs(q)))
    throw CallError{FC_INVALID_ARGUMENT, std::string(name) + " must be a multiple of eps"};
  return static_cast<long>(r);
}

// A table written as CSV or as JSON records with a metadata block.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  json meta = json::object();

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json out;
      out["metadata"] = meta;
      out["metadata"]["version"] = fc_version();
      json recs = json::array();
      for (const auto& r : rows) {
        json rec;
        for (std::size_t i = 0; i < header.size(); ++i) {
          // Lattice indices stay integers; NaN becomes null.
          if ((header[i] == "ix" || header[i] == "it" || header[i] == "n") && std::isfinite(r[i]))
            rec[header[i]] = static_cast<long>(r[i]);
          else
            rec[header[i]] = r[i];
        }
        recs.push_back(rec);
      }
      out["records"] = recs;
      os << out.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << num(r[i]);
      os << "\n";
    }
  }
};

void emit(const Table& t, const std::string& path, const std::string& format) {
  if (path.empty() || path == "-") {
    t.write(std::cout, format);
    return;
  }
  std::ofstream f(path);
  if (!f) throw CallError{FC_INVALID_ARGUMENT, "cannot open " + path};
  t.write(f, format);
}

// ---------------------------------------------------------------- subcommands

struct Common {
  double m = 1.0;
  double eps = 1.0;
  std::string format = "text";
  std::string out;
};

void add_params(CLI::App* sub, Common& c) {
  sub->add_option("--m", c.m, "mass m >= 0")->capture_default_str();
  sub->add_option("--eps", c.eps, "lattice step eps > 0")->capture_default_str();
}

struct AmplitudeArgs {
  Common c;
  double x = 0.0, t = 1.0;
  std::string method = "dp";
};

int run_amplitude(const AmplitudeArgs& a) {
  const auto p = make_params(a.c.m, a.c.eps);
  const long ix = to_index(a.x, a.c.eps, "x"), it = to_index(a.t, a.c.eps, "t");
  double a1 = 0.0, a2 = 0.0;
  std::string extra;
  if (a.method == "dp") {
    check(fc_amplitude(p.get(), ix, it, &a1, &a2));
  } else if (a.method == "fourier") {
    check(fc_fourier_amplitude(p.get(), ix, it, &a1, &a2));
  } else if (a.method == "explicit") {
    check(fc_explicit_amplitude(ix, it, fc_params_mu(p.get()), &a1, &a2));
  } else if (a.method == "anti") {
    fc_anti v;
    check(fc_anti_amplitude(p.get(), ix, it, &v));
    if (v.odd) {
      std::cout << "b1=" << short_num(v.b1) << " b2=" << short_num(v.b2) << "\n";
      return 0;
    }
    a1 = v.A1[0];
    a2 = v.A2[0];
  } else {
    fc_exact_method m = FC_EXACT_DP;
    if (a.method == "exact-explicit") m = FC_EXACT_EXPLICIT;
    if (a.method == "alt-a") m = FC_EXACT_ALT_A;
    if (a.method == "alt-b") m = FC_EXACT_ALT_B;
    if (a.c.m != 1.0 || a.c.eps != 1.0)
      throw CallError{FC_INVALID_ARGUMENT, "exact methods require m = eps = 1"};
    std::vector<char> b1(4096), b2(4096);
    check(fc_amplitude_exact(m, ix, it, b1.data(), b1.size(), b2.data(), b2.size(), &a1, &a2));
    extra = std::string(" A1=") + b1.data() + " A2=" + b2.data() + " scale=2^(" + std::to_string(it - 1) + "/2)";
  }
  const double P = a1 * a1 + a2 * a2;
  if (a.c.format == "text") {
    std::cout << "a1=" << short_num(a1) << " a2=" << short_num(a2) << " P=" << short_num(P) << extra << "\n";
    return 0;
  }
  Table t;
  t.header = {"ix", "it", "m", "eps", "a1", "a2", "P"};
  t.rows.push_back({double(ix), double(it), a.c.m, a.c.eps, a1, a2, P});
  t.meta = {{"subcommand", "amplitude"}, {"method", a.method}, {"m", a.c.m}, {"eps", a.c.eps}};
  emit(t, a.c.out, a.c.format);
  return 0;
}

struct GridArgs {
  Common c;
  double t_max = 10.0;
};

int run_grid(GridArgs a) {
  if (a.c.format == "text") a.c.format = "csv";
  const auto p = make_params(a.c.m, a.c.eps);
  const long it_max = to_index(a.t_max, a.c.eps, "t-max");
  fc_grid* g = nullptr;
  check(fc_grid_create(p.get(), it_max, &g));
  std::unique_ptr<fc_grid, void (*)(fc_grid*)> guard(g, fc_grid_destroy);
  Table t;
  t.header = {"ix", "it", "m", "eps", "a1", "a2", "P"};
  for (long it = 1; it <= fc_grid_rows(g); ++it)
    for (long j = 0; j <= it; ++j) {
      long ix;
      double a1, a2;
      check(fc_grid_entry(g, it, j, &ix, &a1, &a2));
      t.rows.push_back({double(ix), double(it), a.c.m, a.c.eps, a1, a2, a1 * a1 + a2 * a2});
    }
  t.meta = {{"subcommand", "grid"}, {"m", a.c.m}, {"eps", a.c.eps}, {"it_max", it_max}};
  emit(t, a.c.out, a.c.format);
  return 0;
}

struct DistributionArgs {
  Common c;
  double t = 1000.0;
  long points = 201;
  bool moments = false;
};

int run_distribution(DistributionArgs a) {
  if (a.c.format == "text") a.c.format = "csv";
  const auto p = make_params(a.c.m, a.c.eps);
  const long it = to_index(a.t, a.c.eps, "t");
  fc_distribution* d = nullptr;
  check(fc_distribution_create(p.get(), it, &d));
  std::unique_ptr<fc_distribution, void (*)(fc_distribution*)> guard(d, fc_distribution_destroy);
  Table t;
  t.meta = {{"subcommand", "distribution"}, {"m", a.c.m}, {"eps", a.c.eps}, {"t", a.t}};
  if (a.moments) {
    t.header = {"r", "empirical", "limit"};
    for (int r = 1; r <= 3; ++r) {
      double e, l;
      check(fc_distribution_moment(d, r, &e));
      check(fc_limiting_moment(p.get(), r, &l));
      t.rows.push_back({double(r), e, l});
    }
  } else {
    if (a.points < 2) throw CallError{FC_INVALID_ARGUMENT, "points must be >= 2"};
    t.header = {"v", "F_t", "F"};
    for (long i = 0; i < a.points; ++i) {
      const double v = -1.0 + 2.0 * double(i) / double(a.points - 1);
      double e, l;
      check(fc_distribution_cdf(d, v, &e));
      check(fc_limiting_F(p.get(), v, &l));
      t.rows.push_back({v, e, l});
    }
  }
  emit(t, a.c.out, a.c.format);
  return 0;
}

struct VerifyArgs {
  Common c;
  std::string suite = "all";
  long t_max = 200;
  long exact_t_max = 40;
  long b_t_max = 12;
  double tol = 1e-9;
};

int run_verify(const VerifyArgs& a) {
  fc_verify_options o;
  fc_verify_default_options(&o);
  o.t_max = a.t_max;
  o.exact_t_max = a.exact_t_max;
  o.b_t_max = a.b_t_max;
  o.m = a.c.m;
  o.eps = a.c.eps;
  o.tol = a.tol;
  std::vector<std::string> names;
  if (a.suite == "all")
    for (long i = 0; i < fc_verify_suite_count(); ++i) names.push_back(fc_verify_suite_name(i));
  else
    names.push_back(a.suite);
  bool ok = true;
  std::printf("%-20s %10s %8s %12s  %s\n", "suite", "checks", "exact", "max_resid", "result");
  for (const auto& n : names) {
    fc_suite_result r;
    check(fc_verify_suite(n.c_str(), &o, &r));
    ok = ok && r.pass;
    std::printf("%-20s %10ld %8ld %12.3e  %s\n", r.name, r.checks, r.exact_failures, r.max_residual,
                r.pass ? "PASS" : "FAIL");
  }
  std::printf("%s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : kExitFailedCheck;
}

struct AsymptArgs {
  Common c;
  std::string kind = "between";
  double x = 0.0, t = 100.0, v = 0.9;
  std::string sequence = "shrinking";
  long n_min = 3, n_max = 8;
};

int run_asympt(AsymptArgs a) {
  const auto p = make_params(a.c.m, a.c.eps);
  if (a.kind == "rate" || a.kind == "free-energy") {
    double h;
    check(fc_rate_H(p.get(), a.v, &h));
    std::cout << "H=" << short_num(h);
    if (a.kind == "free-energy") {
      double f;
      check(fc_free_energy(p.get(), a.v, a.t, &f));
      std::cout << " log_P_over_t=" << short_num(f) << " minus_H_over_eps=" << short_num(-h / a.c.eps);
    }
    std::cout << "\n";
    return 0;
  }
  if (a.kind == "triple") {
    fc_triple_sequence k = FC_TRIPLE_SHRINKING;
    if (a.sequence == "fixed") k = FC_TRIPLE_FIXED;
    else if (a.sequence == "admissible") k = FC_TRIPLE_ADMISSIBLE;
    else if (a.sequence != "shrinking") throw CallError{FC_INVALID_ARGUMENT, "unknown sequence " + a.sequence};
    std::vector<double> rec(5 * static_cast<std::size_t>(std::max(1L, a.n_max - a.n_min + 1)));
    std::size_t count = 0;
    check(fc_triple_limit(k, a.c.m, a.c.eps, a.n_min, a.n_max, rec.data(), rec.size() / 5, &count));
    Table t;
    t.header = {"x", "t", "eps", "re", "im", "abs", "arg"};
    for (std::size_t i = 0; i < count; ++i) {
      const double* r = &rec[5 * i];
      t.rows.push_back({r[0], r[1], r[2], r[3], r[4], std::hypot(r[3], r[4]), std::atan2(r[4], r[3])});
    }
    t.meta = {{"subcommand", "asympt"}, {"kind", "triple"}, {"sequence", a.sequence}, {"m", a.c.m}};
    emit(t, a.c.out, a.c.format == "text" ? "csv" : a.c.format);
    return 0;
  }
  if (a.kind == "simple") {
    double re, im, a1, a2;
    check(fc_simple_asymptotic(p.get(), a.x, a.t, &re, &im));
    check(fc_amplitude(p.get(), to_index(a.x, a.c.eps, "x"), to_index(a.t, a.c.eps, "t"), &a1, &a2));
    std::cout << "approx=" << short_num(re) << (im < 0 ? "" : "+") << short_num(im) << "i exact=" << short_num(a1)
              << (a2 < 0 ? "" : "+") << short_num(a2) << "i\n";
    return 0;
  }
  const long ix = to_index(a.x, a.c.eps, "x"), it = to_index(a.t, a.c.eps, "t");
  double a1, a2;
  if (a.kind == "anti") {
    check(fc_anti_asymptotic(p.get(), ix, it, &a1, &a2));
    fc_anti v;
    check(fc_anti_amplitude(p.get(), ix, it, &v));
    std::cout << "b1~" << short_num(a1) << " b2~" << short_num(a2) << " b1=" << short_num(v.b1)
              << " b2=" << short_num(v.b2) << "\n";
    return 0;
  }
  if (a.kind == "between") check(fc_approx_between_peaks(p.get(), ix, it, &a1, &a2));
  else if (a.kind == "airy") check(fc_approx_airy(p.get(), ix, it, &a1, &a2));
  else if (a.kind == "outside") check(fc_approx_outside(p.get(), ix, it, &a1, &a2));
  else throw CallError{FC_INVALID_ARGUMENT, "unknown kind " + a.kind};
  double e1, e2;
  check(fc_amplitude(p.get(), ix, it, &e1, &e2));
  std::cout << "a1~" << short_num(a1) << " a2~" << short_num(a2) << " a1=" << short_num(e1) << " a2=" << short_num(e2)
            << "\n";
  return 0;
}

struct PropagatorArgs {
  Common c;
  std::string kind = "algorithm";
  double x = 0.0, t = 1.0, delta = 0.1, eps_override = 0.0;
};

void print_matrix(const char* name, const double* g) {
  std::printf("%s:", name);
  for (int i = 0; i < 4; ++i) std::printf(" G%d%d=%s%+.10gi", i / 2 + 1, i % 2 + 1, short_num(g[2 * i]).c_str(), g[2 * i + 1]);
  std::printf("\n");
}

int run_propagator(const PropagatorArgs& a) {
  if (a.kind == "retarded" || a.kind == "feynman") {
    double g[8];
    check(a.kind == "retarded" ? fc_retarded_G(a.x, a.t, a.c.m, g) : fc_feynman_G(a.x, a.t, a.c.m, g));
    print_matrix(a.kind.c_str(), g);
    return 0;
  }
  if (a.kind == "kernel") {
    double re, im;
    check(fc_feynman_kernel(a.x, a.t, a.c.m, &re, &im));
    std::cout << "K=" << short_num(re) << (im < 0 ? "" : "+") << short_num(im) << "i\n";
    return 0;
  }
  if (a.kind == "sup-error") {
    double e;
    check(fc_continuum_sup_error(a.c.m, a.t, a.c.eps, a.delta, &e));
    std::cout << "sup_error=" << short_num(e) << "\n";
    return 0;
  }
  if (a.kind != "algorithm") throw CallError{FC_INVALID_ARGUMENT, "unknown kind " + a.kind};
  fc_algorithm1 r;
  check(fc_algorithm1_run(a.c.m, a.x, a.t, a.delta, a.eps_override, &r));
  std::printf("prescribed_eps=%.3g\n", r.prescribed);
  if (!r.feasible && a.eps_override <= 0.0) {
    std::printf("INFEASIBLE: t/eps = %.3g rows exceeds the 1e7 limit; rerun with --eps-override\n", a.t / r.prescribed);
    return 0;
  }
  std::printf("eps=%.6g rows=%ld\n", r.eps, r.rows);
  print_matrix("approx", r.approx);
  print_matrix("retarded", r.exact);
  std::printf("max_error=%.6g\n", r.error);
  return 0;
}

struct AntiArgs {
  Common c;
  double x = 0.0, t = 1.0;
  long T = 0;
};

int run_anti(const AntiArgs& a) {
  const auto p = make_params(a.c.m, a.c.eps);
  const long ix = to_index(a.x, a.c.eps, "x"), it = to_index(a.t, a.c.eps, "t");
  fc_anti v;
  check(fc_anti_amplitude(p.get(), ix, it, &v));
  std::cout << "A1=" << short_num(v.A1[0]) << (v.A1[1] < 0 ? "" : "+") << short_num(v.A1[1]) << "i A2="
            << short_num(v.A2[0]) << (v.A2[1] < 0 ? "" : "+") << short_num(v.A2[1]) << "i";
  if (v.odd) std::cout << " b1=" << short_num(v.b1) << " b2=" << short_num(v.b2);
  std::cout << "\n";
  if (a.T > 0) {
    fc_anti_checker e;
    check(fc_anti_checker_estimate(ix, it, a.c.m, a.c.eps, a.T, &e));
    std::printf("combinatorial estimate on the %ldx%ld torus (experimental):\n", a.T, a.T);
    for (int k = 0; k < 2; ++k) {
      for (int i = 0; i < 3; ++i)
        std::printf("  k=%d delta=%g  %+.10g%+.10gi\n", k + 1, e.deltas[i], e.ladder[k][i][0], e.ladder[k][i][1]);
      std::printf("  k=%d extrapolated %+.10g%+.10gi  fourier %+.10g%+.10gi\n", k + 1, e.extrapolated[k][0],
                  e.extrapolated[k][1], e.fourier[k][0], e.fourier[k][1]);
    }
  }
  return 0;
}

struct LoopsArgs {
  Common c;
  long T = 1;
  double delta = 0.1;
  bool list = false;
  bool path = false;
  double x = 0.0, t = 0.0;
  int k = 1;
};

int run_loops(const LoopsArgs& a) {
  fc_torus* lat = nullptr;
  check(fc_torus_create(a.T, a.c.m, a.c.eps, a.delta, &lat));
  std::unique_ptr<fc_torus, void (*)(fc_torus*)> guard(lat, fc_torus_destroy);
  long source = -1, sink = -1;
  if (a.path) {
    check(fc_torus_source_edge(lat, &source));
    check(fc_torus_sink_edge(lat, to_index(a.x, a.c.eps, "x"), to_index(a.t, a.c.eps, "t"), a.k, &sink));
  }
  double re, im;
  long count;
  check(fc_torus_enumerate(lat, source, sink, &re, &im, &count));
  std::printf("T=%ld configurations=%ld sum=%.15g%+.15gi\n", a.T, count, re + 0.0, im + 0.0);
  if (a.path) {
    double pr, pi;
    check(fc_finite_propagator(lat, source, sink, &pr, &pi));
    std::printf("propagator A(a0->f%d)=%.15g%+.15gi\n", a.k, pr + 0.0, pi + 0.0);
  }
  if (a.list) {
    for (long e = 0; e < fc_torus_num_edges(lat); ++e) {
      long X, Y;
      fc_direction d;
      check(fc_torus_edge(lat, e, &X, &Y, &d));
      std::printf("edge %ld: (%ld,%ld) %s\n", e, X, Y, d == FC_RIGHT ? "right" : "left");
    }
    fc_config_list* l = nullptr;
    check(fc_config_list_create(lat, source, sink, &l));
    std::unique_ptr<fc_config_list, void (*)(fc_config_list*)> lg(l, fc_config_list_destroy);
    std::vector<char> buf(1 << 16);
    for (long i = 0; i < fc_config_list_size(l); ++i) {
      double cr, ci;
      check(fc_config_arrow(l, i, &cr, &ci));
      check(fc_config_describe(l, i, buf.data(), buf.size()));
      std::printf("%ld: %s arrow=%.15g%+.15gi\n", i, buf.data(), cr + 0.0, ci + 0.0);
    }
  }
  return 0;
}

struct YoungArgs {
  long h = 3, w = 3;
};

int run_young(const YoungArgs& a) {
  char e[256], o[256];
  check(fc_young_counts(a.h, a.w, e, sizeof e, o, sizeof o));
  long long d;
  check(fc_young_delta(a.h, a.w, &d));
  std::printf("h=%ld w=%ld n_even=%s n_odd=%s odd_minus_even=%lld\n", a.h, a.w, e, o, d);
  return 0;
}

struct FigureArgs {
  Common c;
  int figure = 4;
  double t = 0.0;
};

int run_export_figure(FigureArgs a) {
  if (a.c.format == "text") a.c.format = "csv";
  Table tab;
  tab.meta = {{"subcommand", "export-figure"}, {"figure", a.figure}};
  if (a.figure == 4) {
    // P(x, t) with the limiting density, basic model.
    const double t = a.t > 0 ? a.t : 1000.0;
    const auto p = make_params(1.0, 1.0);
    const long it = to_index(t, 1.0, "t");
    fc_grid* g = nullptr;
    check(fc_grid_create(p.get(), it, &g));
    std::unique_ptr<fc_grid, void (*)(fc_grid*)> guard(g, fc_grid_destroy);
    tab.header = {"x", "t", "P", "a1", "a2", "density_over_2"};
    for (long j = 0; j <= it; ++j) {
      long ix;
      double a1, a2, f;
      check(fc_grid_entry(g, it, j, &ix, &a1, &a2));
      check(fc_limiting_density(p.get(), double(ix) / double(it), &f));
      // Black sites are 2 apart, so P is compared to F'(x/t) * 2/t.
      tab.rows.push_back({double(ix), double(it), a1 * a1 + a2 * a2, a1, a2, 2.0 * f / double(it)});
    }
    tab.meta["t"] = t;
  } else if (a.figure == 8) {
    const auto p = make_params(1.0, 1.0);
    tab.header = {"t", "v", "F_t", "F"};
    for (double t : {100.0, 1000.0}) {
      fc_distribution* d = nullptr;
      check(fc_distribution_create(p.get(), long(t), &d));
      std::unique_ptr<fc_distribution, void (*)(fc_distribution*)> guard(d, fc_distribution_destroy);
      for (int i = 0; i <= 400; ++i) {
        const double v = -1.0 + i / 200.0;
        double e, l;
        check(fc_distribution_cdf(d, v, &e));
        check(fc_limiting_F(p.get(), v, &l));
        tab.rows.push_back({t, v, e, l});
      }
    }
  } else if (a.figure == 10) {
    // a(x, 100) against the continuum form and the between-peaks form.
    const double t = a.t > 0 ? a.t : 100.0;
    const auto p = make_params(1.0, 1.0);
    const long it = to_index(t, 1.0, "t");
    tab.header = {"x", "t", "a1", "a2", "P", "cont_a1", "cont_a2", "peak_a1", "peak_a2", "ratio_a1", "ratio_a2"};
    for (long ix = -it + 2; ix < it; ix += 2) {
      double a1, a2, c1, c2, b1 = NAN, b2 = NAN;
      check(fc_amplitude(p.get(), ix, it, &a1, &a2));
      check(fc_continuum_approx(p.get(), double(ix), double(it), &c1, &c2));
      if (fc_approx_between_peaks(p.get(), ix, it, &b1, &b2) != FC_OK) b1 = b2 = NAN;
      tab.rows.push_back({double(ix), t, a1, a2, a1 * a1 + a2 * a2, c1, c2, b1, b2, a1 / b1, a2 / b2});
    }
  } else if (a.figure == 12) {
    // b_k(x, 6, 4, 0.03) / 0.12 against the asymptotic form and Im G^F.
    const double m = 4.0, eps = 0.03, t = 6.0;
    const auto p = make_params(m, eps);
    const long it = to_index(t, eps, "t");
    tab.header = {"x", "b1_scaled", "b2_scaled", "asym_b1_scaled", "asym_b2_scaled", "ImGF11", "ImGF12"};
    for (long ix = -it - 1; ix <= it + 1; ++ix) {
      if (((ix + it) % 2 + 2) % 2 == 0) continue;
      fc_anti v;
      check(fc_anti_amplitude(p.get(), ix, it, &v));
      double s1 = NAN, s2 = NAN, g[8];
      if (fc_anti_asymptotic(p.get(), ix, it, &s1, &s2) != FC_OK) s1 = s2 = NAN;
      const double x = ix * eps;
      if (fc_feynman_G(x, t, m, g) != FC_OK)
        for (double& gi : g) gi = NAN;
      tab.rows.push_back({x, v.b1 / (4 * eps), v.b2 / (4 * eps), s1 / (4 * eps), s2 / (4 * eps), g[1], g[3]});
    }
  } else {
    throw CallError{FC_INVALID_ARGUMENT, "figure must be one of 4, 8, 10, 12"};
  }
  emit(tab, a.c.out, a.c.format);
  return 0;
}

int exit_for(fc_status s) {
  switch (s) {
    case FC_INVALID_ARGUMENT:
    case FC_OUT_OF_DOMAIN:
    case FC_SIZE_LIMIT: return kExitBadInput;
    default: return kExitFailedCheck;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feynman checkers amplitudes, identities and asymptotics"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "csv", "json"};

  AmplitudeArgs amp;
  auto* s_amp = app.add_subcommand("amplitude", "amplitude at one site");
  add_params(s_amp, amp.c);
  s_amp->add_option("--x", amp.x, "position")->required();
  s_amp->add_option("--t", amp.t, "time")->required();
  s_amp->add_option("--method", amp.method)
      ->check(CLI::IsMember({"dp", "exact", "exact-explicit", "alt-a", "alt-b", "explicit", "fourier", "anti"}))
      ->capture_default_str();
  s_amp->add_option("--format", amp.c.format)->check(CLI::IsMember(formats));
  s_amp->add_option("--out", amp.c.out);

  GridArgs grid;
  auto* s_grid = app.add_subcommand("grid", "all black sites up to t-max as CSV or JSON");
  add_params(s_grid, grid.c);
  s_grid->add_option("--t-max", grid.t_max)->required();
  s_grid->add_option("--format", grid.c.format)->check(CLI::IsMember(formats));
  s_grid->add_option("--out", grid.c.out);

  DistributionArgs dist;
  auto* s_dist = app.add_subcommand("distribution", "empirical vs limiting CDF of x/t");
  add_params(s_dist, dist.c);
  s_dist->add_option("--t", dist.t)->capture_default_str();
  s_dist->add_option("--points", dist.points)->capture_default_str();
  s_dist->add_flag("--moments", dist.moments, "print moments r = 1, 2, 3 instead");
  s_dist->add_option("--format", dist.c.format)->check(CLI::IsMember(formats));
  s_dist->add_option("--out", dist.c.out);

  VerifyArgs ver;
  auto* s_ver = app.add_subcommand("verify", "run identity suites");
  add_params(s_ver, ver.c);
  std::vector<std::string> suites{"all"};
  for (long i = 0; i < fc_verify_suite_count(); ++i) suites.push_back(fc_verify_suite_name(i));
  s_ver->add_option("--suite", ver.suite)->check(CLI::IsMember(suites))->capture_default_str();
  s_ver->add_option("--t-max", ver.t_max, "float-mode rows")->capture_default_str();
  s_ver->add_option("--exact-t-max", ver.exact_t_max, "integer-mode rows")->capture_default_str();
  s_ver->add_option("--b-t-max", ver.b_t_max, "rows for the b check")->capture_default_str();
  s_ver->add_option("--tol", ver.tol)->capture_default_str();

  AsymptArgs as;
  auto* s_as = app.add_subcommand("asympt", "large-time approximations");
  add_params(s_as, as.c);
  s_as->add_option("--kind", as.kind)
      ->check(CLI::IsMember({"between", "airy", "outside", "simple", "anti", "rate", "free-energy", "triple"}))
      ->capture_default_str();
  s_as->add_option("--x", as.x);
  s_as->add_option("--t", as.t);
  s_as->add_option("--v", as.v);
  s_as->add_option("--sequence", as.sequence)->check(CLI::IsMember({"shrinking", "fixed", "admissible"}));
  s_as->add_option("--n-min", as.n_min);
  s_as->add_option("--n-max", as.n_max);
  s_as->add_option("--format", as.c.format)->check(CLI::IsMember(formats));
  s_as->add_option("--out", as.c.out);

  PropagatorArgs pr;
  auto* s_pr = app.add_subcommand("propagator", "continuum propagators and Algorithm 1");
  s_pr->add_option("--m", pr.c.m)->capture_default_str();
  s_pr->add_option("--eps", pr.c.eps, "lattice step for --kind sup-error");
  s_pr->add_option("--kind", pr.kind)
      ->check(CLI::IsMember({"algorithm", "retarded", "feynman", "kernel", "sup-error"}))
      ->capture_default_str();
  s_pr->add_option("--x", pr.x);
  s_pr->add_option("--t", pr.t);
  s_pr->add_option("--delta", pr.delta)->capture_default_str();
  s_pr->add_option("--eps-override", pr.eps_override, "run Algorithm 1 at this step");

  AntiArgs an;
  auto* s_an = app.add_subcommand("anti", "antiparticle values by quadrature and on a torus");
  add_params(s_an, an.c);
  s_an->add_option("--x", an.x)->required();
  s_an->add_option("--t", an.t)->required();
  s_an->add_option("--T", an.T, "torus size for the combinatorial estimate (1..3)");

  LoopsArgs lo;
  auto* s_lo = app.add_subcommand("loops", "loop configurations on the torus");
  add_params(s_lo, lo.c);
  s_lo->add_option("--T", lo.T)->capture_default_str();
  s_lo->add_option("--delta", lo.delta)->capture_default_str();
  s_lo->add_flag("--list", lo.list, "print every configuration");
  s_lo->add_flag("--path", lo.path, "source a0 and sink f_k at (x, t)");
  s_lo->add_option("--x", lo.x);
  s_lo->add_option("--t", lo.t);
  s_lo->add_option("--k", lo.k)->check(CLI::Range(1, 2));

  YoungArgs yo;
  auto* s_yo = app.add_subcommand("young", "Young diagram step-parity counts");
  s_yo->add_option("--h", yo.h)->required();
  s_yo->add_option("--w", yo.w)->required();

  FigureArgs fi;
  auto* s_fi = app.add_subcommand("export-figure", "data behind figures 4, 8, 10, 12");
  s_fi->add_option("--figure", fi.figure)->required()->check(CLI::IsMember({4, 8, 10, 12}));
  s_fi->add_option("--t", fi.t, "time for figures 4 and 10");
  s_fi->add_option("--format", fi.c.format)->check(CLI::IsMember(formats));
  s_fi->add_option("--out", fi.c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (s_amp->parsed()) return run_amplitude(amp);
    if (s_grid->parsed()) return run_grid(grid);
    if (s_dist->parsed()) return run_distribution(dist);
    if (s_ver->parsed()) return run_verify(ver);
    if (s_as->parsed()) return run_asympt(as);
    if (s_pr->parsed()) return run_propagator(pr);
    if (s_an->parsed()) return run_anti(an);
    if (s_lo->parsed()) return run_loops(lo);
    if (s_yo->parsed()) return run_young(yo);
    if (s_fi->parsed()) return run_export_figure(fi);
  } catch (const CallError& e) {
    std::cerr << "error: " << e.what << "\n";
    return exit_for(e.status);
  }
  return kExitBadInput;
}
