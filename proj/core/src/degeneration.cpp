#include "hilbzeta/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hilbzeta {

namespace {

constexpr unsigned kMaxWeight = 64;

std::string weight_text(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.w.size(); ++i) s += (i ? "," : "") + std::to_string(w.w[i]);
  return s + ")";
}

bool search(const GermInvariants& inv, std::vector<unsigned>& w, std::set<std::size_t>& used) {
  const std::size_t i = w.size();
  if (i == inv.branches) return true;
  for (unsigned v = 1; v <= kMaxWeight; ++v) {
    std::vector<std::size_t> degs;
    for (std::size_t n = 1; n <= inv.conductor[i]; ++n) degs.push_back(v * n);
    if (std::any_of(degs.begin(), degs.end(), [&](std::size_t d) { return used.count(d) > 0; })) continue;
    used.insert(degs.begin(), degs.end());
    w.push_back(v);
    if (search(inv, w, used)) return true;
    w.pop_back();
    for (auto d : degs) used.erase(d);
  }
  return false;
}

}  // namespace

bool MonomialGerm::contains(std::size_t branch, std::size_t n) const {
  if (n >= conductor[branch]) return true;
  const auto& e = exponents[branch];
  return std::binary_search(e.begin(), e.end(), n);
}

bool weight_is_generic(const GermInvariants& inv, const WeightVector& w) {
  if (w.w.size() != inv.branches) return false;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < inv.branches; ++i) {
    if (w.w[i] == 0) return false;
    for (std::size_t n = 1; n <= inv.conductor[i]; ++n)
      if (!seen.insert(w.w[i] * n).second) return false;
  }
  return true;
}

WeightVector choose_weight(const GermPresentation& pres) {
  const auto inv = invariants(pres);
  if (inv.branches == 1) return WeightVector{{1}};
  std::vector<unsigned> w;
  std::set<std::size_t> used;
  if (!search(inv, w, used))
    throw InvalidInput("no generic weight with entries <= " + std::to_string(kMaxWeight) + " for " + pres.name);
  return WeightVector{std::move(w)};
}

MonomialGerm associated_monomial_germ(const GermPresentation& pres, const WeightVector& w) {
  const auto inv = invariants(pres);
  if (!weight_is_generic(inv, w))
    throw InvalidInput("weight not generic: " + weight_text(w) + " repeats a w-degree below the conductor of " +
                       pres.name);
  const std::size_t s = inv.branches;
  std::size_t top = 0;
  for (std::size_t i = 0; i < s; ++i) top = std::max<std::size_t>(top, w.w[i] * inv.conductor[i]);
  FiltrationIndex box(s);
  for (std::size_t i = 0; i < s; ++i) box[i] = std::max(inv.conductor[i] + 1, top / w.w[i] + 1);
  const auto model = build_model(pres, box, RationalField{});
  const std::size_t dim = model.ambient_dim();

  MonomialGerm out;
  out.branches = s;
  out.exponents.assign(s, {0});
  std::size_t graded_dim = 1;  // degree 0: the constants
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t m = 0; m < box[i]; ++m)
      if (w.w[i] * m > top) ++graded_dim;

  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<bool> allowed(dim, false), exact(dim, false);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t m = 0; m < box[i]; ++m) {
        allowed[model.index(i, m)] = w.w[i] * m >= n;
        exact[model.index(i, m)] = w.w[i] * m == n;
      }
    const auto filtered = intersect_with_support(model.basis(), allowed);
    Subspace<RationalField> piece(model.field(), dim);
    for (const auto& row : filtered.rows()) {
      auto v = row;
      for (std::size_t j = 0; j < dim; ++j)
        if (!exact[j]) v[j] = 0;
      piece.insert(std::move(v));
    }
    graded_dim += piece.dim();
    for (std::size_t r = 0; r < piece.dim(); ++r) {
      const auto& row = piece.rows()[r];
      const std::size_t p = piece.pivots()[r];
      for (std::size_t j = p + 1; j < dim; ++j)
        if (row[j] != 0)
          throw InvalidInput("weight not generic: w-degree " + std::to_string(n) + " piece of " + pres.name +
                             " is not spanned by monomials under " + weight_text(w));
      for (std::size_t i = 0; i < s; ++i)
        if (p >= model.index(i, 0) && p < model.index(i, 0) + box[i]) out.exponents[i].push_back(p - model.index(i, 0));
    }
  }

  out.conductor.assign(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    auto& e = out.exponents[i];
    std::sort(e.begin(), e.end());
    std::size_t c = s > 1 ? 1 : 0;
    for (std::size_t m = 1; m < box[i]; ++m)
      if (!std::binary_search(e.begin(), e.end(), m)) c = m + 1;
    out.conductor[i] = c;
    e.erase(std::lower_bound(e.begin(), e.end(), std::max<std::size_t>(c, 1)), e.end());
  }
  out.delta = std::accumulate(box.begin(), box.end(), std::size_t{0}) - graded_dim;
  return out;
}

EquinormalizableReport verify_equinormalizable(const GermPresentation& pres, const WeightVector& w) {
  EquinormalizableReport r;
  r.germ = pres.name;
  r.weight = w;
  const auto inv = invariants(pres);
  r.delta_source = inv.delta;
  r.branches_source = inv.branches;
  r.monomial = associated_monomial_germ(pres, w);
  r.ok = r.monomial.delta == r.delta_source && r.monomial.branches == r.branches_source;
  return r;
}

}  // namespace hilbzeta
