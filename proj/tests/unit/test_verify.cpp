#include "checkers/verify.hpp"
#include "doctest.h"

using namespace checkers;
using namespace checkers::verify;

TEST_CASE("suite names round trip") {
  for (auto s : all_suites()) CHECK(parse_suite(suite_name(s)) == s);
  CHECK(all_suites().size() == 7);
  CHECK_THROWS_AS(parse_suite("nonsense"), Error);
}

TEST_CASE("all suites pass") {
  for (double mu : {1.0, 0.5}) {
    SuiteOptions o;
    o.params = LatticeParams(mu, 1.0);
    o.t_max = 60;
    o.exact_t_max = 24;
    o.b_t_max = 6;
    for (const auto& r : run_all(o)) {
      INFO(r.name);
      CHECK(r.pass);
      CHECK(r.checks > 0);
      CHECK(r.exact_failures == 0);
    }
  }
}
