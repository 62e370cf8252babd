#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hilbzeta/degeneration.hpp"
#include "oracles.hpp"

using namespace hilbzeta;

namespace {

GermPresentation g34() {
  return parse_presentation(std::string("@") + HILBZETA_TEST_DATA_DIR "/g34.json");
}

GermPresentation tacnode() {
  return parse_presentation(nlohmann::json::parse(
      R"({"branches":2,"truncation":32,"generators":[[[0,1],[0,1]],[[0,0,1],[0,0,-1]]]})"));
}

std::vector<std::size_t> finite_part(const MonomialGerm& m, std::size_t i, std::size_t upto) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < upto; ++n)
    if (m.contains(i, n)) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("weights") {
  CHECK(choose_weight(parse_presentation("cusp")) == WeightVector{{1}});
  CHECK(choose_weight(parse_presentation("node")) == WeightVector{{1, 2}});
  CHECK(choose_weight(parse_presentation("axes:3")) == WeightVector{{1, 2, 3}});
  // conductor (2,2): 1,2 on the first branch rule out 1 and 2 on the second
  CHECK(choose_weight(tacnode()) == WeightVector{{1, 3}});
  CHECK(choose_weight(parse_presentation("axes:4")) == choose_weight(parse_presentation("axes:4")));
  auto inv = invariants(parse_presentation("node"));
  CHECK_FALSE(weight_is_generic(inv, WeightVector{{1, 1}}));
  CHECK(weight_is_generic(inv, WeightVector{{2, 1}}));
  CHECK_FALSE(weight_is_generic(inv, WeightVector{{1}}));
}

TEST_CASE("monomial germs") {
  auto m = associated_monomial_germ(g34(), WeightVector{{1}});
  CHECK(m.branches == 1);
  CHECK(finite_part(m, 0, 12) == std::vector<std::size_t>{0, 3, 4, 6, 7, 8, 9, 10, 11});
  CHECK(m.conductor == FiltrationIndex{6});
  CHECK(m.delta == 3);

  auto cusp = associated_monomial_germ(parse_presentation("cusp"), WeightVector{{1}});
  CHECK(finite_part(cusp, 0, 6) == std::vector<std::size_t>{0, 2, 3, 4, 5});
  CHECK(cusp.delta == 1);

  auto node = associated_monomial_germ(parse_presentation("node"), WeightVector{{1, 2}});
  CHECK(node.conductor == FiltrationIndex{1, 1});
  CHECK(node.delta == 1);
  CHECK(node.exponents == std::vector<std::vector<std::size_t>>{{0}, {0}});
}

TEST_CASE("non-generic weights are refused") {
  CHECK_THROWS_WITH_AS(associated_monomial_germ(parse_presentation("node"), WeightVector{{1, 1}}),
                       doctest::Contains("weight not generic"), InvalidInput);
  CHECK_THROWS_AS(associated_monomial_germ(tacnode(), WeightVector{{1, 2}}), InvalidInput);
}

TEST_CASE("degeneration preserves delta and branches") {
  std::vector<GermPresentation> germs{g34(), tacnode()};
  for (const char* g : {"node", "cusp", "axes:3", "axes:4", "semigroup:3,4", "semigroup:4,6,9"})
    germs.push_back(parse_presentation(g));
  // (t^4, t^6 + t^7): the semigroup <4,6,13>
  germs.push_back(parse_presentation(nlohmann::json::parse(
      R"({"branches":1,"truncation":40,"generators":[[[0,0,0,0,1]],[[0,0,0,0,0,0,1,1]]]})")));
  for (const auto& pres : germs) {
    CAPTURE(pres.name);
    auto r = verify_equinormalizable(pres, choose_weight(pres));
    CHECK(r.ok);
    CHECK(r.monomial.delta == r.delta_source);
    CHECK(r.monomial.branches == r.branches_source);
    // exponent sets are closed under addition
    for (std::size_t i = 0; i < r.monomial.branches; ++i)
      for (std::size_t a = 0; a < 30; ++a)
        for (std::size_t b = 0; b < 30; ++b)
          if (r.monomial.contains(i, a) && r.monomial.contains(i, b)) CHECK(r.monomial.contains(i, a + b));
  }
}

TEST_CASE("the <4,6,13> degeneration") {
  auto pres = parse_presentation(nlohmann::json::parse(
      R"({"branches":1,"truncation":40,"generators":[[[0,0,0,0,1]],[[0,0,0,0,0,0,1,1]]]})"));
  auto m = associated_monomial_germ(pres, WeightVector{{1}});
  std::vector<std::size_t> sg;
  const auto gaps = oracle::semigroup_gaps({4, 6, 13});
  for (std::size_t n = 0; n < 20; ++n)
    if (!std::binary_search(gaps.begin(), gaps.end(), n)) sg.push_back(n);
  CHECK(finite_part(m, 0, 20) == sg);
  CHECK(m.delta == gaps.size());
}
