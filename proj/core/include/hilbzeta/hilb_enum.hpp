#pragma once

// Enumeration of the finite-colength ideals of a germ over F_q, grouped by
// colength d and branch-length vector a.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbzeta/germ.hpp"

namespace hilbzeta {

using FpModel = GermModel<PrimeField>;

/// An ideal's image in the truncated model, in canonical echelon form.
struct IdealRep {
  Subspace<PrimeField> basis;
  std::size_t colength = 0;
  FiltrationIndex branch_vector;
};

struct StratumKey {
  std::size_t d = 0;
  FiltrationIndex a;
  friend auto operator<=>(const StratumKey&, const StratumKey&) = default;
  friend bool operator==(const StratumKey&, const StratumKey&) = default;
};

std::string to_string(const StratumKey& key);

/// Point counts |Hilb^{d,a}(F_q)|; only nonempty strata are stored.
struct StratumTable {
  std::string germ;
  std::uint32_t q = 0;
  std::size_t d_max = 0;
  std::map<StratumKey, std::uint64_t> entries;

  std::uint64_t count(const StratumKey& key) const;
  std::uint64_t total(std::size_t d) const;
};

struct EnumOptions {
  /// Refuse enumeration boxes whose R-image dimension exceeds this.
  std::size_t dim_limit = 24;
};

/// b_i = d_max + delta + c_i (at least d_max + 1 on a smooth branch).
FiltrationIndex enumeration_box(const GermInvariants& inv, std::size_t d_max);
/// Dimension of the R-image in the enumeration box.
std::size_t predicted_quotient_dim(const GermInvariants& inv, std::size_t d_max);
/// Largest d_max accepted by the guard.
std::size_t max_feasible_dmax(const GermInvariants& inv, std::size_t dim_limit);

/// Model over F_q in the enumeration box for d_max; throws ResourceGuard when
/// the guard trips and InvalidInput when q is a bad prime for the germ.
FpModel build_enumeration_model(const GermPresentation& pres, const GermInvariants& inv, std::uint32_t q,
                                std::size_t d_max, const EnumOptions& opts = {});

FiltrationIndex branch_vector(const FpModel& model, const Subspace<PrimeField>& ideal);

/// Every ideal of colength exactly d, each once, sorted canonically.
std::vector<IdealRep> enumerate_colength_ideals(const FpModel& model, std::size_t d);

struct Enumeration {
  std::string germ;
  GermInvariants inv;
  FpModel model;
  /// levels[d] holds all ideals of colength d.
  std::vector<std::vector<IdealRep>> levels;
};

Enumeration enumerate_ideals(const GermPresentation& pres, const GermInvariants& inv, std::uint32_t q,
                             std::size_t d_max, const EnumOptions& opts = {});
Enumeration enumerate_ideals(const GermPresentation& pres, std::uint32_t q, std::size_t d_max,
                             const EnumOptions& opts = {});

StratumTable stratum_table(const Enumeration& e);
StratumTable stratum_table(const GermPresentation& pres, std::uint32_t q, std::size_t d_max,
                           const EnumOptions& opts = {});

/// F^{a+c} in I in F^a, with a the ideal's branch vector and c the conductor.
bool check_inclusions(const FpModel& model, const IdealRep& ideal);
bool check_inclusions(const FpModel& model, const Subspace<PrimeField>& ideal, const FiltrationIndex& a);

}  // namespace hilbzeta
