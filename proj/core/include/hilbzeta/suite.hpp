#pragma once

// The invariant suite run by `hilbzeta verify`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbzeta/hilb_enum.hpp"

namespace hilbzeta {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct SuiteCheck {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct SuiteOptions {
  EnumOptions enumeration;
  std::optional<std::size_t> d_max;
  /// Bump one stratum count before checking; the suite must then fail.
  bool seed_fault = false;
};

struct SuiteReport {
  std::string germ;
  std::uint32_t q = 0;
  std::size_t d_max = 0;
  std::vector<SuiteCheck> checks;

  bool ok() const;
};

/// min(largest feasible d_max, sum(c_i) + C - delta).
std::size_t default_suite_dmax(const GermInvariants& inv, const EnumOptions& opts = {});

/// Partition, bounds, inclusions, positivity, stabilization, series
/// consistency and, for axes presets, the closed-form cross-check.
SuiteReport run_suite(const GermPresentation& pres, std::uint32_t q, const SuiteOptions& opts = {});

}  // namespace hilbzeta
