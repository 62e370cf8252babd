#include <doctest.h>

#include "hilbzeta/serialize.hpp"
#include "hilbzeta/suite.hpp"

using namespace hilbzeta;

TEST_CASE("suite passes on the presets") {
  for (const char* g : {"node", "cusp", "axes:3", "semigroup:3,4", "axes:2"})
    for (std::uint32_t q : {2u, 3u}) {
      CAPTURE(g);
      CAPTURE(q);
      auto r = run_suite(parse_presentation(g), q);
      CHECK(r.ok());
      for (const auto& c : r.checks) CHECK(c.status == CheckStatus::Pass);
    }
}

TEST_CASE("a seeded fault fails the suite") {
  SuiteOptions opts;
  opts.seed_fault = true;
  for (const char* g : {"node", "cusp"}) CHECK_FALSE(run_suite(parse_presentation(g), 2, opts).ok());
}

TEST_CASE("short d_max skips the series check") {
  SuiteOptions opts;
  opts.d_max = 2;
  auto r = run_suite(parse_presentation("axes:3"), 2, opts);
  CHECK(r.ok());
  bool skipped = false;
  for (const auto& c : r.checks)
    if (c.name == "series") skipped = c.status == CheckStatus::Skip;
  CHECK(skipped);
}

TEST_CASE("smooth germs pass") {
  auto r = run_suite(parse_presentation("axes:1"), 2);
  CHECK(r.ok());
}

TEST_CASE("default d_max") {
  CHECK(default_suite_dmax(invariants(parse_presentation("axes:3"))) == 4);
  CHECK(default_suite_dmax(invariants(parse_presentation("node"))) == 3);
  CHECK(default_suite_dmax(invariants(parse_presentation("axes:3")), EnumOptions{18}) == 3);
}

TEST_CASE("suite reports serialize deterministically") {
  auto a = to_json(run_suite(parse_presentation("cusp"), 3)).dump();
  auto b = to_json(run_suite(parse_presentation("cusp"), 3)).dump();
  CHECK(a == b);
}
