#pragma once

// Stabilization under the branch twists xi_i, assembly of the punctual zeta
// function from finitely many strata, and interpolation of strata classes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbzeta/hilb_enum.hpp"
#include "hilbzeta/motive.hpp"

namespace hilbzeta {

/// xi_i * I. Throws PreconditionError when a_i < c_i or the model box cannot
/// hold colength d + 1.
IdealRep twist_ideal(const FpModel& model, const IdealRep& ideal, std::size_t branch);

struct StabilizationCheck {
  StratumKey source;
  std::size_t branch = 0;
  StratumKey target;
  std::uint64_t source_count = 0;
  std::uint64_t target_count = 0;
  bool injective = true;
  bool surjective = true;
  bool ok() const noexcept { return source_count == target_count && injective && surjective; }
};

struct StabilizationReport {
  std::string germ;
  std::uint32_t q = 0;
  std::size_t d_max = 0;
  std::vector<StabilizationCheck> checks;

  bool ok() const;
  /// First failing check, if any.
  std::optional<StabilizationCheck> witness() const;
};

StabilizationReport verify_stabilization(const Enumeration& e);
StabilizationReport verify_stabilization(const GermPresentation& pres, std::uint32_t q, std::size_t d_max,
                                         const EnumOptions& opts = {});

/// Smallest d_max for which assembly sees every stratum it needs:
/// sum(c_i) + C - delta - 1.
std::size_t required_dmax(const GermInvariants& inv);

/// Strata (d, a) with a in prod [0, c_i] and
/// max(0, |a| - delta) <= d <= |a| + C - delta - 1, plus (0, 0).
std::vector<StratumKey> required_strata(const GermInvariants& inv);

struct PunctualZetaResult {
  std::string germ;
  bool conjectural = false;
  /// Set for an exact count over F_q.
  std::optional<std::uint32_t> q;
  ZetaRat zeta;
  /// Strata classes that entered the assembly (counts as constants when q is set).
  std::map<StratumKey, LPoly> strata;
};

/// Sum over a in prod [0, c_i] of (1/(1-t))^{#{i : a_i = c_i}} sum_d [d, a] t^d.
ZetaRat assemble_from_classes(const std::map<StratumKey, LPoly>& classes, const GermInvariants& inv);

/// Throws PreconditionError naming the strata beyond table.d_max.
PunctualZetaResult assemble_punctual_zeta(const StratumTable& table, const GermInvariants& inv);

/// Lowest-degree integer polynomial through the counts, validated on every
/// prime beyond the interpolation nodes. The degree is at most
/// min(degree_bound, #primes - 2). nullopt means "not polynomial".
std::optional<LPoly> interpolate_class(const std::map<std::uint32_t, Int>& counts, std::size_t degree_bound);

/// C * (sum_i (c_i + C) - delta - C).
std::size_t default_degree_bound(const GermInvariants& inv);

struct LZetaOptions {
  EnumOptions enumeration;
  std::optional<std::size_t> degree_bound;
  std::size_t degree_cap = 12;
};

struct LZetaOutcome {
  std::map<std::uint32_t, PunctualZetaResult> per_prime;
  std::optional<PunctualZetaResult> conjectural;
  /// Strata that did not interpolate, when `conjectural` is empty.
  std::string diagnostic;
};

LZetaOutcome punctual_zeta_L(const GermPresentation& pres, const std::vector<std::uint32_t>& primes,
                             const LZetaOptions& opts = {});

}  // namespace hilbzeta
