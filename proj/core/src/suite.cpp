#include "hilbzeta/suite.hpp"

#include <algorithm>
#include <numeric>

#include "hilbzeta/axes.hpp"
#include "hilbzeta/zeta_assembly.hpp"

namespace hilbzeta {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

bool SuiteReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.status == CheckStatus::Fail; });
}

std::size_t default_suite_dmax(const GermInvariants& inv, const EnumOptions& opts) {
  return std::min(max_feasible_dmax(inv, opts.dim_limit), required_dmax(inv) + 1);
}

namespace {

SuiteCheck make(std::string name, bool ok, std::string detail) {
  return SuiteCheck{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

}  // namespace

SuiteReport run_suite(const GermPresentation& pres, std::uint32_t q, const SuiteOptions& opts) {
  const auto inv = invariants(pres);
  SuiteReport report;
  report.germ = pres.name;
  report.q = q;
  report.d_max = opts.d_max.value_or(default_suite_dmax(inv, opts.enumeration));

  const auto e = enumerate_ideals(pres, inv, q, report.d_max, opts.enumeration);
  auto table = stratum_table(e);
  if (opts.seed_fault && !table.entries.empty()) ++table.entries.rbegin()->second;

  {
    std::string bad;
    for (std::size_t d = 0; d <= report.d_max; ++d)
      if (table.total(d) != e.levels[d].size())
        bad += " d=" + std::to_string(d) + ": table " + std::to_string(table.total(d)) + " vs enumerated " +
               std::to_string(e.levels[d].size());
    report.checks.push_back(make("partition", bad.empty(), bad.empty() ? "strata sum to the ideal counts" : bad));
  }
  {
    std::string bad;
    for (const auto& [key, n] : table.entries) {
      const long long sa = static_cast<long long>(std::accumulate(key.a.begin(), key.a.end(), std::size_t{0}));
      const long long d = static_cast<long long>(key.d), delta = static_cast<long long>(inv.delta),
                      c = static_cast<long long>(inv.big_c);
      const bool ok = inv.smooth() ? d == sa : (sa - delta <= d && d <= sa + c - delta - 1);
      if (!ok) bad += " " + to_string(key);
    }
    report.checks.push_back(make("bounds", bad.empty(),
                                 bad.empty() ? std::to_string(table.entries.size()) + " strata within bounds"
                                             : "violated by" + bad));
  }
  {
    std::size_t total = 0, failed = 0;
    for (const auto& level : e.levels)
      for (const auto& ideal : level) {
        ++total;
        if (!check_inclusions(e.model, ideal)) ++failed;
      }
    report.checks.push_back(make("inclusions", failed == 0,
                                 std::to_string(total - failed) + "/" + std::to_string(total) + " ideals"));
  }
  {
    std::string bad;
    for (const auto& [key, n] : table.entries)
      if (key.d >= 1 && std::any_of(key.a.begin(), key.a.end(), [](std::size_t x) { return x == 0; }))
        bad += " " + to_string(key);
    report.checks.push_back(make("positivity", bad.empty(), bad.empty() ? "all a_i >= 1 for d >= 1" : bad));
  }
  {
    const auto st = verify_stabilization(e);
    std::string detail = std::to_string(st.checks.size()) + " twist identities";
    if (auto w = st.witness())
      detail = "fails at " + to_string(w->source) + " -> " + to_string(w->target) + ": " +
               std::to_string(w->source_count) + " vs " + std::to_string(w->target_count);
    report.checks.push_back(make("stabilization", st.ok(), detail));
  }
  if (report.d_max < required_dmax(inv)) {
    report.checks.push_back(SuiteCheck{"series", CheckStatus::Skip,
                                       "d_max " + std::to_string(report.d_max) + " below the " +
                                           std::to_string(required_dmax(inv)) + " needed for assembly"});
  } else {
    const auto z = assemble_punctual_zeta(table, inv).zeta;
    const auto series = series_expand(z, report.d_max + 1);
    std::string bad;
    for (std::size_t d = 0; d <= report.d_max; ++d)
      if (!(series.coeffs[d] == LPoly(Int(e.levels[d].size()))))
        bad += " d=" + std::to_string(d) + ": series " + series.coeffs[d].to_string() + " vs enumerated " +
               std::to_string(e.levels[d].size());
    if (!(z.constant_term() == LPoly(1))) bad += " constant term is not 1";
    if (z.den_t() > inv.branches || z.den_lambda() != 0) bad += " denominator does not divide (1-t)^s";
    report.checks.push_back(make("series", bad.empty(), bad.empty() ? to_display(z) : bad));
  }
  if (auto n = pres.axes_count()) {
    std::string bad;
    for (std::size_t d = 0; d <= report.d_max; ++d) {
      const Int expect = lpoly_eval(axes_hilb_class(*n, d), Int(q));
      if (expect != Int(e.levels[d].size()))
        bad += " d=" + std::to_string(d) + ": closed form " + expect.str() + " vs enumerated " +
               std::to_string(e.levels[d].size());
    }
    report.checks.push_back(make("axes", bad.empty(), bad.empty() ? "closed form matches enumeration" : bad));
  }
  return report;
}

}  // namespace hilbzeta
