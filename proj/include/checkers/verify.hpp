#pragma once

// Identity suites over whole DP grids. Each suite runs in integer mode at
// m = eps = 1 (residuals must vanish exactly) and in float mode at the given
// parameters (residuals below a tolerance).

#include <string>
#include <vector>

#include "checkers/types.hpp"

namespace checkers::verify {

enum class Suite {
  Conservation,
  KleinGordon,
  Symmetry,
  Huygens,
  EqualTime,
  FieldConservation,
  BRecurrence,
};

struct SuiteOptions {
  long t_max = 200;        // float-mode rows (t/eps)
  long exact_t_max = 40;   // integer-mode rows
  long b_t_max = 12;       // rows of the quadrature-based b check
  LatticeParams params = LatticeParams::unit();
  double tol = 1e-9;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  long exact_failures = 0;    // nonzero integer residuals
  double max_residual = 0.0;  // float mode, scaled as documented per suite
};

SuiteResult run_suite(Suite suite, const SuiteOptions& opt = {});

/// Every suite in declaration order.
std::vector<SuiteResult> run_all(const SuiteOptions& opt = {});

const char* suite_name(Suite suite);
/// Parses a suite name as printed by suite_name; throws InvalidArgument.
Suite parse_suite(const std::string& name);
std::vector<Suite> all_suites();

}  // namespace checkers::verify
