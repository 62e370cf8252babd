#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hilbzeta/axes.hpp"
#include "hilbzeta/global.hpp"
#include "hilbzeta/serialize.hpp"
#include "oracles.hpp"

using namespace hilbzeta;

namespace {

const LPoly L = LPoly::L();
using Kind = SmoothComponent::Kind;

ZetaRat a1_punctured() { return ZetaRat({1, -1}, 0, 1); }

}  // namespace

TEST_CASE("smooth zeta functions") {
  CHECK(smooth_zeta({{Kind::P1, 0}}) == ZetaRat({1}, 1, 1));
  CHECK(smooth_zeta({{Kind::A1, 1}}) == a1_punctured());
  CHECK(smooth_zeta({}) == ZetaRat());
  CHECK(smooth_zeta({{Kind::A1, 0}}) == ZetaRat({1}, 0, 1));
  const auto s = series_expand(smooth_zeta({{Kind::P1, 0}}), 4);
  for (std::size_t d = 0; d < 4; ++d)
    for (std::uint32_t q : {2u, 3u}) CHECK(lpoly_eval(s.coeffs[d], Int(q)) == Int(oracle::projective_points(d, q)));
}

TEST_CASE("curve zeta functions") {
  GlobalCurveDesc nodal{{{Kind::A1, 1}, {Kind::A1, 1}}, {{"node", parse_presentation("node"), std::nullopt}}};
  auto r = curve_zeta(nodal);
  CHECK_FALSE(r.conjectural);
  CHECK(r.zeta == a1_punctured() * a1_punctured() * (ZetaRat() + ZetaRat({0, 1, L - 1}, 2, 0)));
  CHECK(series_expand(r.zeta, 2).coeffs[1] == 2 * (L - 1) + 1);

  GlobalCurveDesc cuspidal{{{Kind::A1, 1}}, {{"cusp", parse_presentation("cusp"), std::nullopt}}};
  auto c = curve_zeta(cuspidal);
  CHECK(c.conjectural);
  CHECK(c.zeta == a1_punctured() * (ZetaRat() + ZetaRat({0, 1, L}, 1, 0)));

  GlobalCurveDesc line{{{Kind::P1, 0}}, {}};
  CHECK(curve_zeta(line).zeta == ZetaRat({1}, 1, 1));
}

TEST_CASE("curve zeta is multiplicative and has constant term 1") {
  GlobalCurveDesc a{{{Kind::A1, 1}, {Kind::A1, 1}}, {{"node", parse_presentation("node"), std::nullopt}}};
  GlobalCurveDesc b{{{Kind::P1, 2}}, {{"axes:3", parse_presentation("axes:3"), std::nullopt}}};
  GlobalCurveDesc ab = a;
  ab.smooth.insert(ab.smooth.end(), b.smooth.begin(), b.smooth.end());
  ab.singularities.insert(ab.singularities.end(), b.singularities.begin(), b.singularities.end());
  CHECK(curve_zeta(ab).zeta == curve_zeta(a).zeta * curve_zeta(b).zeta);
  CHECK(curve_zeta(ab).zeta.constant_term() == LPoly(1));
}

TEST_CASE("nodal curve point counts are nonnegative") {
  GlobalCurveDesc nodal{{{Kind::A1, 1}, {Kind::A1, 1}}, {{"node", parse_presentation("node"), std::nullopt}}};
  const auto z = curve_zeta(nodal).zeta;
  for (std::uint32_t q : {2u, 3u}) {
    const auto s = series_expand(specialize(z, Int(q)), 6);
    for (const auto& c : s.coeffs) CHECK(c >= 0);
  }
}

TEST_CASE("precomputed factors") {
  Singularity s{"given", std::nullopt, axes_zeta(2)};
  CHECK(curve_zeta(GlobalCurveDesc{{}, {s}}).zeta == axes_zeta(2));
  Singularity bad{"bad", std::nullopt, ZetaRat({2, 1}, 1, 0)};
  CHECK_THROWS_WITH_AS(curve_zeta(GlobalCurveDesc{{}, {bad}}), doctest::Contains("bad"), InvalidInput);
  Singularity empty{"empty", std::nullopt, std::nullopt};
  CHECK_THROWS_AS(curve_zeta(GlobalCurveDesc{{}, {empty}}), InvalidInput);
}

TEST_CASE("uninterpolable singularities are reported") {
  Singularity s{"axes-as-custom", parse_presentation(nlohmann::json::parse(
                                      R"({"branches":3,"truncation":32,"generators":[[[0,1],[],[]],[[],[0,1],[]],[[],[],[0,1]]]})")),
                std::nullopt};
  CHECK_THROWS_WITH_AS(curve_zeta(GlobalCurveDesc{{}, {s}}, {2, 3, 5}), doctest::Contains("axes-as-custom"),
                       InvalidInput);
  CHECK(curve_zeta(GlobalCurveDesc{{}, {s}}, {2, 3, 5, 7}).zeta == axes_zeta(3));
}

TEST_CASE("curve descriptions") {
  auto d = parse_curve_file(HILBZETA_TEST_DATA_DIR "/curve_node.json");
  CHECK(d.smooth.size() == 2);
  CHECK(d.singularities.size() == 1);
  CHECK(d.singularities[0].germ->name == "node");

  auto j = nlohmann::json::parse(R"({"smooth":[{"kind":"P1"}],"singularities":[{"numerator":[[1],[0,1]],"den_t":1}]})");
  auto e = parse_curve(j);
  REQUIRE(e.singularities[0].zeta);
  CHECK(*e.singularities[0].zeta == ZetaRat({1, L}, 1, 0));

  CHECK_THROWS_AS(parse_curve(nlohmann::json::parse(R"({"smooth":[{"kind":"E"}]})")), InvalidInput);
  CHECK_THROWS_AS(parse_curve(nlohmann::json::parse(R"({"smooth":[{"kind":"A1","punctures":-1}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(parse_curve(nlohmann::json::parse(R"({"singularities":[3]})")), InvalidInput);
  CHECK_THROWS_AS(parse_curve_file("/nonexistent.json"), InvalidInput);
}
