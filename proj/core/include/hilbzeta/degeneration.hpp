#pragma once

// Monomial degeneration of a germ: the associated graded ring of a generic
// weighted valuation filtration.

#include <cstddef>
#include <string>
#include <vector>

#include "hilbzeta/germ.hpp"

namespace hilbzeta {

struct WeightVector {
  std::vector<unsigned> w;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Valuation data of a monomial subring of prod_i k[x_i]. Branch i contains
/// the exponents listed in `exponents[i]` and every n >= conductor[i].
struct MonomialGerm {
  std::size_t branches = 0;
  std::vector<std::vector<std::size_t>> exponents;
  FiltrationIndex conductor;
  std::size_t delta = 0;

  bool contains(std::size_t branch, std::size_t n) const;
};

/// The w-degrees w_i * n over all (i, n) with 1 <= n <= c_i are distinct.
bool weight_is_generic(const GermInvariants& inv, const WeightVector& w);

/// Lexicographically smallest generic weight with entries in [1, 64].
WeightVector choose_weight(const GermPresentation& pres);

/// Throws InvalidInput("weight not generic ...") when w fails the
/// distinctness condition or a graded piece is not spanned by monomials.
MonomialGerm associated_monomial_germ(const GermPresentation& pres, const WeightVector& w);

struct EquinormalizableReport {
  std::string germ;
  WeightVector weight;
  MonomialGerm monomial;
  std::size_t delta_source = 0;
  std::size_t branches_source = 0;
  bool ok = false;
};

EquinormalizableReport verify_equinormalizable(const GermPresentation& pres, const WeightVector& w);

}  // namespace hilbzeta
