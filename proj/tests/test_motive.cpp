#include <doctest.h>

#include "hilbzeta/motive.hpp"
#include "hilbzeta/serialize.hpp"
#include "oracles.hpp"

using namespace hilbzeta;

namespace {

LPoly poly(std::initializer_list<long long> c) {
  std::vector<Int> v;
  for (auto x : c) v.emplace_back(x);
  return LPoly(std::move(v));
}

const LPoly L = LPoly::L();

ZetaRat zeta(std::vector<LPoly> num, unsigned t, unsigned lt) { return ZetaRat(std::move(num), t, lt); }

}  // namespace

TEST_CASE("lpoly evaluation") {
  CHECK(lpoly_eval(L * L + L + 1, Int(2)) == 7);
  CHECK(lpoly_eval(LPoly(), Int(5)) == 0);
  CHECK(lpoly_eval((L - 1) * (L - 1), Int(3)) == 4);
  CHECK(lpoly_eval(poly({-2, 1, 1}), Int(-3)) == 4);
}

TEST_CASE("lpoly canonical form") {
  CHECK(poly({1, 0, 0}).coeffs().size() == 1);
  CHECK(poly({0, 0}).is_zero());
  CHECK((L - L).is_zero());
  CHECK((L + 1) * (L - 1) == poly({-1, 0, 1}));
  CHECK(lpoly_pow(L + 1, 3) == poly({1, 3, 3, 1}));
}

TEST_CASE("lpoly big coefficients stay exact") {
  LPoly p = lpoly_pow(LPoly(Int(1) << 40), 3);
  CHECK(p.coeff(0) == (Int(1) << 120));
  CHECK(to_json(p)[0].is_string());
  CHECK(lpoly_from_json(to_json(p)) == p);
}

TEST_CASE("lpoly text") {
  CHECK(poly({-2, 1, 1}).to_string() == "L^2 + L - 2");
  CHECK(poly({-2, 1, 1}).to_compact_string() == "L^2+L-2");
  CHECK(LPoly().to_string() == "0");
  CHECK(poly({1, -2, 1}).to_compact_string() == "L^2-2L+1");
}

TEST_CASE("gauss binomial examples") {
  CHECK(gauss_binomial(3, 1) == L * L + L + 1);
  for (unsigned n = 0; n < 6; ++n) CHECK(gauss_binomial(n, 0) == LPoly(1));
  CHECK(gauss_binomial(2, 3).is_zero());
  CHECK(gauss_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
}

TEST_CASE("gauss binomial counts subspaces") {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(lpoly_eval(gauss_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)), Int(q)) ==
              Int(oracle::count_subspaces(n, k, q)));
      }
}

TEST_CASE("gauss binomial Pascal identity") {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(gauss_binomial(n, k) == gauss_binomial(n - 1, k - 1) + LPoly::monomial(1, k) * gauss_binomial(n - 1, k));
}

TEST_CASE("series expansion examples") {
  CHECK(series_expand(zeta({1}, 1, 0), 3).coeffs == std::vector<LPoly>{1, 1, 1});
  CHECK(series_expand(zeta({1}, 1, 1), 3).coeffs == std::vector<LPoly>{1, L + 1, L * L + L + 1});
  // 1 + (t + (L-1)t^2)/(1-t)^2
  auto node = zeta({1}, 0, 0) + zeta({0, 1, L - 1}, 2, 0);
  CHECK(series_expand(node, 3).coeffs == std::vector<LPoly>{1, 1, L + 1});
  CHECK_THROWS_AS(series_expand(node, 0), PreconditionError);
}

TEST_CASE("P^d point counts from the P1 Kapranov zeta") {
  const auto s = series_expand(zeta({1}, 1, 1), 4);
  for (std::size_t d = 0; d < 4; ++d) CHECK(lpoly_eval(s.coeffs[d], Int(2)) == Int(oracle::projective_points(d, 2)));
}

TEST_CASE("series of a product is the Cauchy product") {
  const std::vector<ZetaRat> zs{zeta({1, L, -1}, 2, 0), zeta({1, 0, L * L}, 1, 1), zeta({1, L - 1}, 0, 2),
                                zeta({1}, 3, 0)};
  const std::size_t m = 7;
  for (const auto& a : zs)
    for (const auto& b : zs) {
      const auto sa = series_expand(a, m), sb = series_expand(b, m), sab = series_expand(a * b, m);
      for (std::size_t k = 0; k < m; ++k) {
        LPoly c;
        for (std::size_t i = 0; i <= k; ++i) c += sa.coeffs[i] * sb.coeffs[k - i];
        CHECK(sab.coeffs[k] == c);
      }
    }
}

TEST_CASE("canonical form cancels common factors") {
  // (1-t)(1+t) / (1-t)^2 = (1+t)/(1-t)
  auto z = zeta({1, 0, -1}, 2, 0);
  CHECK(z.den_t() == 1);
  CHECK(z.numerator() == std::vector<LPoly>{1, 1});
  // (1-Lt)/(1-Lt) = 1
  auto w = zeta({1, -L}, 0, 1);
  CHECK(w.den_lambda() == 0);
  CHECK(w == ZetaRat());
  // axes N=1: 1 + t/(1-t) = 1/(1-t)
  CHECK(ZetaRat() + zeta({0, 1}, 1, 0) == zeta({1}, 1, 0));
}

TEST_CASE("specialize examples") {
  auto axes2 = ZetaRat() + zeta({0, 1, L - 1}, 2, 0);
  auto at2 = specialize(axes2, Int(2));
  CHECK(at2 == IntZeta({Int(1)}, 0, 0, Int(2)) + IntZeta({Int(0), Int(1), Int(1)}, 2, 0, Int(2)));
  CHECK(to_display(at2) == "1 + (t + t^2)/(1-t)^2");

  auto lt = specialize(zeta({1}, 0, 1), Int(1));
  CHECK(lt.den_t() == 1);
  CHECK(lt.den_lambda() == 0);
  CHECK(lt.numerator() == std::vector<Int>{1});

  auto cusp = ZetaRat() + zeta({0, 1, L}, 1, 0);
  CHECK(to_display(specialize(cusp, Int(1))) == "1 + (t + t^2)/(1-t)");
  // a (1-Lt) factor that becomes (1-t) at L=1 cancels
  auto merged = specialize(zeta({1, -1}, 0, 1), Int(1));
  CHECK(merged == IntZeta({Int(1)}, 0, 0, Int(1)));
}

TEST_CASE("specialize commutes with series expansion") {
  const std::vector<ZetaRat> zs{zeta({1, L, -1}, 2, 0), zeta({1, 0, L * L}, 1, 1), zeta({1, L - 1, 3}, 0, 2)};
  for (const auto& z : zs)
    for (long long v : {-1, 0, 1, 2, 3}) {
      const auto lhs = series_expand(specialize(z, Int(v)), 6);
      const auto rhs = series_expand(z, 6);
      for (std::size_t k = 0; k < 6; ++k) CHECK(lhs.coeffs[k] == lpoly_eval(rhs.coeffs[k], Int(v)));
    }
}

TEST_CASE("display") {
  CHECK(to_display(ZetaRat() + zeta({0, 1, L - 1}, 2, 0)) == "1 + (t + (L-1)t^2)/(1-t)^2");
  CHECK(to_display(zeta({1}, 1, 1)) == "1/((1-t)(1-Lt))");
  CHECK(to_display(zeta({1, -1}, 0, 1)) == "1 + (L-1)t/(1-Lt)");
  CHECK(to_display(ZetaRat()) == "1");
}

TEST_CASE("zeta json round trip") {
  auto z = ZetaRat() + zeta({0, 1, L * L + L - 2, (L - 1) * (L - 1)}, 3, 0);
  auto j = to_json(z);
  CHECK(j["den_t"] == 3);
  CHECK(j["den_Lt"] == 0);
  CHECK(zeta_from_json(j) == z);
  CHECK(to_json(poly({-2, 1, 1})).dump() == "[-2,1,1]");
}
