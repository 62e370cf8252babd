#include "hilbzeta/zeta_assembly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <future>
#include <numeric>
#include <set>

namespace hilbzeta {

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;
using Rational = boost::multiprecision::cpp_rational;

std::size_t sum(const FiltrationIndex& a) { return std::accumulate(a.begin(), a.end(), std::size_t{0}); }

}  // namespace

IdealRep twist_ideal(const FpModel& model, const IdealRep& ideal, std::size_t branch) {
  if (branch >= model.branches()) throw PreconditionError("branch index out of range");
  const auto& a = ideal.branch_vector;
  if (a[branch] < model.conductor()[branch])
    throw PreconditionError("twist on branch " + std::to_string(branch + 1) + " needs a_i >= c_i, but a_" +
                            std::to_string(branch + 1) + " = " + std::to_string(a[branch]) + " < c_" +
                            std::to_string(branch + 1) + " = " + std::to_string(model.conductor()[branch]));
  const std::size_t d = ideal.colength + 1;
  for (std::size_t i = 0; i < model.branches(); ++i) {
    const std::size_t need = d + model.delta() + std::max<std::size_t>(model.conductor()[i], 1);
    if (model.box()[i] < need)
      throw PreconditionError("model box too small to twist into colength " + std::to_string(d));
  }
  Subspace<PrimeField> out(model.field(), model.ambient_dim());
  for (const auto& row : ideal.basis.rows()) out.insert(model.twist(branch, row));
  if (!model.basis().contains(out)) throw PreconditionError("twisted ideal leaves R");
  const std::size_t colength = model.basis().dim() - out.dim();
  auto bv = branch_vector(model, out);
  return IdealRep{std::move(out), colength, std::move(bv)};
}

bool StabilizationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const StabilizationCheck& c) { return c.ok(); });
}

std::optional<StabilizationCheck> StabilizationReport::witness() const {
  for (const auto& c : checks)
    if (!c.ok()) return c;
  return std::nullopt;
}

StabilizationReport verify_stabilization(const Enumeration& e) {
  StabilizationReport report;
  report.germ = e.germ;
  report.q = e.model.field().characteristic();
  report.d_max = e.levels.size() - 1;
  const auto& c = e.inv.conductor;
  const std::size_t s = e.inv.branches;

  std::map<StratumKey, std::vector<const IdealRep*>> strata;
  for (const auto& level : e.levels)
    for (const auto& ideal : level) strata[StratumKey{ideal.colength, ideal.branch_vector}].push_back(&ideal);

  // Pairs (d, a) -> (d + 1, a + e_i) with a_i >= c_i, taken from both ends
  // so that an empty source with a nonempty target is caught too.
  std::set<std::pair<StratumKey, std::size_t>> pairs;
  for (const auto& [key, ideals] : strata) {
    for (std::size_t i = 0; i < s; ++i) {
      if (key.a[i] >= c[i] && key.d + 1 <= report.d_max) pairs.insert({key, i});
      if (key.d >= 1 && key.a[i] >= c[i] + 1) {
        StratumKey src{key.d - 1, key.a};
        --src.a[i];
        pairs.insert({src, i});
      }
    }
  }

  for (const auto& [src, i] : pairs) {
    StabilizationCheck check;
    check.source = src;
    check.branch = i;
    check.target = src;
    ++check.target.d;
    ++check.target.a[i];
    auto find = [&](const StratumKey& k) -> const std::vector<const IdealRep*>& {
      static const std::vector<const IdealRep*> empty;
      auto it = strata.find(k);
      return it == strata.end() ? empty : it->second;
    };
    const auto& from = find(check.source);
    const auto& to = find(check.target);
    check.source_count = from.size();
    check.target_count = to.size();

    std::set<Rows> image;
    for (const IdealRep* ideal : from) {
      auto t = twist_ideal(e.model, *ideal, i);
      if (t.colength != check.target.d || t.branch_vector != check.target.a) check.surjective = false;
      if (!image.insert(t.basis.rows()).second) check.injective = false;
    }
    std::set<Rows> targets;
    for (const IdealRep* ideal : to) targets.insert(ideal->basis.rows());
    if (image != targets) check.surjective = false;
    report.checks.push_back(std::move(check));
  }
  return report;
}

StabilizationReport verify_stabilization(const GermPresentation& pres, std::uint32_t q, std::size_t d_max,
                                         const EnumOptions& opts) {
  return verify_stabilization(enumerate_ideals(pres, q, d_max, opts));
}

std::size_t required_dmax(const GermInvariants& inv) {
  const std::size_t total = inv.big_c + inv.big_c;
  return total > inv.delta + 1 ? total - inv.delta - 1 : 0;
}

std::vector<StratumKey> required_strata(const GermInvariants& inv) {
  std::vector<StratumKey> out;
  const std::size_t s = inv.branches;
  FiltrationIndex a(s, 0);
  while (true) {
    const std::size_t total = sum(a);
    const std::size_t lo = total > inv.delta ? total - inv.delta : 0;
    const std::size_t hi_plus = total + inv.big_c;  // d <= hi_plus - delta - 1
    for (std::size_t d = lo; d + inv.delta + 1 <= hi_plus; ++d) out.push_back(StratumKey{d, a});
    if (total == 0 && (out.empty() || out.front().d != 0 || out.front().a != a))
      out.insert(out.begin(), StratumKey{0, a});
    std::size_t i = 0;
    while (i < s && a[i] == inv.conductor[i]) a[i++] = 0;
    if (i == s) break;
    ++a[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

ZetaRat assemble_from_classes(const std::map<StratumKey, LPoly>& classes, const GermInvariants& inv) {
  const std::size_t s = inv.branches;
  std::map<FiltrationIndex, std::vector<LPoly>> per_a;
  for (const auto& key : required_strata(inv)) {
    auto it = classes.find(key);
    if (it == classes.end() || it->second.is_zero()) continue;
    auto& poly = per_a[key.a];
    if (poly.size() <= key.d) poly.resize(key.d + 1);
    poly[key.d] += it->second;
  }
  std::vector<LPoly> numerator;
  for (auto& [a, poly] : per_a) {
    unsigned capped = 0;
    for (std::size_t i = 0; i < s; ++i)
      if (a[i] == inv.conductor[i]) ++capped;
    detail::trim(poly);
    auto term = detail::poly_mul(poly, detail::linear_power(LPoly(1), static_cast<unsigned>(s) - capped));
    numerator = detail::poly_add(std::move(numerator), term);
  }
  return ZetaRat(std::move(numerator), static_cast<unsigned>(s), 0);
}

PunctualZetaResult assemble_punctual_zeta(const StratumTable& table, const GermInvariants& inv) {
  PunctualZetaResult r;
  r.germ = table.germ;
  r.q = table.q;
  if (inv.smooth()) {
    r.zeta = ZetaRat({LPoly(1)}, 1, 0);
    r.strata[StratumKey{0, FiltrationIndex(inv.branches, 0)}] = LPoly(1);
    return r;
  }
  std::string missing;
  for (const auto& key : required_strata(inv)) {
    if (key.d > table.d_max) {
      missing += (missing.empty() ? "" : ", ") + to_string(key);
      continue;
    }
    r.strata[key] = LPoly(Int(table.count(key)));
  }
  if (!missing.empty())
    throw PreconditionError("stratum table for " + table.germ + " stops at d_max=" + std::to_string(table.d_max) +
                            " (needs " + std::to_string(required_dmax(inv)) + "); missing strata " + missing);
  r.zeta = assemble_from_classes(r.strata, inv);
  return r;
}

namespace {

// Coefficients (ascending) of the interpolant through (x_j, y_j).
std::vector<Rational> lagrange(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(xs[m]);
      }
      basis = std::move(next);
      denom *= Rational(xs[j] - xs[m]);
    }
    const Rational scale = Rational(ys[j]) / denom;
    for (std::size_t k = 0; k < n; ++k) out[k] += basis[k] * scale;
  }
  return out;
}

}  // namespace

std::optional<LPoly> interpolate_class(const std::map<std::uint32_t, Int>& counts, std::size_t degree_bound) {
  if (counts.size() < 2)
    throw PreconditionError("interpolation needs at least two primes (one is held out)");
  std::vector<Int> xs, ys;
  for (const auto& [p, v] : counts) {
    xs.emplace_back(p);
    ys.push_back(v);
  }
  const std::size_t bound = std::min(degree_bound, counts.size() - 2);
  for (std::size_t k = 0; k <= bound; ++k) {
    const auto coeffs =
        lagrange(std::vector<Int>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k + 1)),
                 std::vector<Int>(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(k + 1)));
    std::vector<Int> ints;
    bool integral = true;
    for (const auto& c : coeffs) {
      if (boost::multiprecision::denominator(c) != 1) {
        integral = false;
        break;
      }
      ints.push_back(boost::multiprecision::numerator(c));
    }
    if (!integral) continue;
    LPoly p(std::move(ints));
    bool fits = true;
    for (std::size_t j = k + 1; j < xs.size() && fits; ++j) fits = p.eval(xs[j]) == ys[j];
    if (fits) return p;
  }
  return std::nullopt;
}

std::size_t default_degree_bound(const GermInvariants& inv) {
  std::size_t total = 0;
  for (std::size_t c : inv.conductor) total += c + inv.big_c;
  const std::size_t sub = inv.delta + inv.big_c;
  return total > sub ? inv.big_c * (total - sub) : 0;
}

LZetaOutcome punctual_zeta_L(const GermPresentation& pres, const std::vector<std::uint32_t>& primes,
                             const LZetaOptions& opts) {
  std::vector<std::uint32_t> ps(primes);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  if (ps.size() < 3) throw InvalidInput("an L-level zeta function needs at least 3 distinct primes");
  for (auto p : ps) (void)PrimeField(p);

  const auto inv = invariants(pres);
  LZetaOutcome out;
  if (inv.smooth()) {
    for (auto p : ps) {
      StratumTable t;
      t.germ = pres.name;
      t.q = p;
      out.per_prime[p] = assemble_punctual_zeta(t, inv);
    }
    PunctualZetaResult r = out.per_prime.begin()->second;
    r.q.reset();
    out.conjectural = r;
    return out;
  }

  const std::size_t d_max = required_dmax(inv);
  std::vector<std::future<StratumTable>> jobs;
  for (auto p : ps)
    jobs.push_back(std::async(std::launch::async, [&, p] { return stratum_table(enumerate_ideals(pres, inv, p, d_max, opts.enumeration)); }));
  std::map<std::uint32_t, StratumTable> tables;
  for (std::size_t k = 0; k < ps.size(); ++k) tables.emplace(ps[k], jobs[k].get());
  for (const auto& [p, t] : tables) out.per_prime[p] = assemble_punctual_zeta(t, inv);

  const std::size_t bound = std::min(opts.degree_bound.value_or(default_degree_bound(inv)), opts.degree_cap);
  PunctualZetaResult r;
  r.germ = pres.name;
  r.conjectural = true;
  std::string failed;
  for (const auto& key : required_strata(inv)) {
    std::map<std::uint32_t, Int> counts;
    for (const auto& [p, t] : tables) counts[p] = Int(t.count(key));
    auto cls = interpolate_class(counts, bound);
    if (!cls) {
      failed += (failed.empty() ? "" : ", ") + to_string(key);
      continue;
    }
    r.strata[key] = std::move(*cls);
  }
  if (!failed.empty()) {
    out.diagnostic = "strata " + failed + " of " + pres.name + " are not polynomial in L of degree <= " +
                     std::to_string(std::min(bound, ps.size() - 2)) + " over primes";
    for (auto p : ps) out.diagnostic += " " + std::to_string(p);
    return out;
  }
  r.zeta = assemble_from_classes(r.strata, inv);
  out.conjectural = std::move(r);
  return out;
}

}  // namespace hilbzeta
