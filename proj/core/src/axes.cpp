#include "hilbzeta/axes.hpp"

namespace hilbzeta {

LPoly gr0(unsigned k, unsigned n) {
  LPoly out;
  for (unsigned j = 0; j <= n; ++j) {
    LPoly term = LPoly(binomial(n, j)) * gauss_binomial(n - j, k);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

ZetaRat axes_zeta(unsigned n) {
  if (n < 1) throw PreconditionError("axes germ needs N >= 1");
  auto numerator = detail::linear_power(LPoly(1), n);
  numerator.resize(std::max<std::size_t>(numerator.size(), n + 1));
  for (unsigned d = 1; d <= n; ++d) numerator[d] += gr0(n - d + 1, n);
  return ZetaRat(std::move(numerator), n, 0);
}

LPoly axes_hilb_class(unsigned n, std::size_t d) {
  return series_expand(axes_zeta(n), d + 1).coeffs[d];
}

}  // namespace hilbzeta
