#include <doctest.h>

#include "hilbzeta/axes.hpp"
#include "hilbzeta/hilb_enum.hpp"
#include "oracles.hpp"

using namespace hilbzeta;

namespace {
const LPoly L = LPoly::L();
}

TEST_CASE("gr0 strata for three axes") {
  CHECK(gr0(1, 3) == L * L - 2 * L + 1);
  CHECK(gr0(2, 3) == L * L + L - 2);
  CHECK(gr0(3, 3) == LPoly(1));
  CHECK(gr0(4, 3).is_zero());
  CHECK(gr0(0, 3).is_zero());
}

TEST_CASE("gr0 counts subspaces in no coordinate hyperplane") {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(lpoly_eval(gr0(static_cast<unsigned>(k), static_cast<unsigned>(n)), Int(q)) ==
              Int(oracle::count_generic_subspaces(n, k, q)));
      }
}

TEST_CASE("axes zeta closed forms") {
  CHECK(axes_zeta(1) == ZetaRat({LPoly(1)}, 1, 0));
  CHECK(axes_zeta(2) == ZetaRat() + ZetaRat({0, 1, L - 1}, 2, 0));
  CHECK(axes_zeta(3) == ZetaRat() + ZetaRat({0, 1, L * L + L - 2, (L - 1) * (L - 1)}, 3, 0));
  CHECK(to_display(axes_zeta(2)) == "1 + (t + (L-1)t^2)/(1-t)^2");
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(axes_zeta(n).constant_term() == LPoly(1));
    CHECK(axes_zeta(n).den_t() == n);
  }
  CHECK_THROWS_AS(axes_zeta(0), PreconditionError);
}

TEST_CASE("axes Hilbert classes") {
  CHECK(axes_hilb_class(3, 2) == L * L + L + 1);
  CHECK(axes_hilb_class(3, 3) == 4 * L * L + L + 1);
  CHECK(axes_hilb_class(2, 3) == 2 * L + 1);
  CHECK(axes_hilb_class(2, 2) == L + 1);
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(axes_hilb_class(n, 0) == LPoly(1));
    CHECK(axes_hilb_class(n, 1) == LPoly(1));
  }
}

TEST_CASE("closed form matches enumeration") {
  for (unsigned n = 1; n <= 4; ++n)
    for (std::uint32_t q : {2u, 3u}) {
      CAPTURE(n);
      CAPTURE(q);
      const std::size_t d_max = n <= 2 ? 4 : 3;
      auto e = enumerate_ideals(parse_presentation("axes:" + std::to_string(n)), q, d_max, EnumOptions{32});
      for (std::size_t d = 0; d <= d_max; ++d)
        CHECK(lpoly_eval(axes_hilb_class(n, d), Int(q)) == Int(e.levels[d].size()));
    }
}

TEST_CASE("Euler specialization of the node") {
  const auto s = series_expand(specialize(axes_zeta(2), Int(1)), 12);
  for (std::size_t d = 1; d < 12; ++d) CHECK(s.coeffs[d] == Int(d));
}
