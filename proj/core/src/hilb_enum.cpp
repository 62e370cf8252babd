#include "hilbzeta/hilb_enum.hpp"

#include <numeric>

namespace hilbzeta {

std::string to_string(const StratumKey& key) {
  std::string s = "(" + std::to_string(key.d) + ",(";
  for (std::size_t i = 0; i < key.a.size(); ++i) s += (i ? "," : "") + std::to_string(key.a[i]);
  return s + "))";
}

std::uint64_t StratumTable::count(const StratumKey& key) const {
  auto it = entries.find(key);
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t StratumTable::total(std::size_t d) const {
  std::uint64_t t = 0;
  for (const auto& [key, n] : entries)
    if (key.d == d) t += n;
  return t;
}

FiltrationIndex enumeration_box(const GermInvariants& inv, std::size_t d_max) {
  FiltrationIndex b(inv.branches);
  for (std::size_t i = 0; i < inv.branches; ++i) b[i] = d_max + inv.delta + std::max<std::size_t>(inv.conductor[i], 1);
  return b;
}

std::size_t predicted_quotient_dim(const GermInvariants& inv, std::size_t d_max) {
  const auto b = enumeration_box(inv, d_max);
  return std::accumulate(b.begin(), b.end(), std::size_t{0}) - inv.delta;
}

std::size_t max_feasible_dmax(const GermInvariants& inv, std::size_t dim_limit) {
  if (predicted_quotient_dim(inv, 0) > dim_limit) return 0;
  std::size_t d = 0;
  while (predicted_quotient_dim(inv, d + 1) <= dim_limit) ++d;
  return d;
}

FpModel build_enumeration_model(const GermPresentation& pres, const GermInvariants& inv, std::uint32_t q,
                                std::size_t d_max, const EnumOptions& opts) {
  const std::size_t dim = predicted_quotient_dim(inv, d_max);
  if (dim > opts.dim_limit)
    throw ResourceGuard("d_max=" + std::to_string(d_max) + " needs a quotient of dimension " + std::to_string(dim) +
                        " for " + pres.name + ", above the limit " + std::to_string(opts.dim_limit) +
                        " (largest feasible d_max is " + std::to_string(max_feasible_dmax(inv, opts.dim_limit)) +
                        ")");
  auto model = build_model(pres, enumeration_box(inv, d_max), PrimeField(q));
  if (model.delta() != inv.delta || model.conductor() != inv.conductor)
    throw InvalidInput("presentation " + pres.name + " has bad reduction modulo " + std::to_string(q) +
                       " (delta or conductor changes)");
  return model;
}

FiltrationIndex branch_vector(const FpModel& model, const Subspace<PrimeField>& ideal) {
  FiltrationIndex a(model.box());
  for (const auto& row : ideal.rows()) {
    const auto v = branch_valuation(model, row);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!v[i].at_least) a[i] = std::min(a[i], v[i].order);
  }
  return a;
}

namespace {

using Key = std::vector<std::uint32_t>;

Key canonical_key(const Subspace<PrimeField>& s) {
  Key k;
  k.reserve(s.dim() * (s.ambient_dim() + 1));
  for (std::size_t r = 0; r < s.dim(); ++r) {
    k.push_back(static_cast<std::uint32_t>(s.pivots()[r]));
    k.insert(k.end(), s.rows()[r].begin(), s.rows()[r].end());
  }
  return k;
}

void check_box(const FpModel& model, std::size_t d) {
  for (std::size_t i = 0; i < model.branches(); ++i) {
    const std::size_t need = d + model.delta() + std::max<std::size_t>(model.conductor()[i], 1);
    if (model.box()[i] < need)
      throw PreconditionError("model box too small for colength " + std::to_string(d) +
                              " (branch " + std::to_string(i + 1) + " needs " + std::to_string(need) + ")");
  }
}

// All hyperplanes H with mJ in H in J.
void socle_children(const FpModel& model, const Subspace<PrimeField>& parent, std::map<Key, Subspace<PrimeField>>& out) {
  const auto& f = model.field();
  Subspace<PrimeField> mj(f, model.ambient_dim());
  for (const auto& row : parent.rows())
    for (std::size_t g = 0; g < model.generators().size(); ++g) mj.insert(model.apply_generator(g, row));

  // Complement of mJ inside J.
  std::vector<std::vector<std::uint32_t>> comp;
  {
    Subspace<PrimeField> grow = mj;
    for (const auto& row : parent.rows())
      if (grow.insert(row)) comp.push_back(row);
  }
  const std::size_t k = comp.size();
  const std::uint32_t q = f.characteristic();
  // Functionals phi on span(comp), normalized so the first nonzero entry is 1.
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t free = k - 1 - lead;
    std::vector<std::uint32_t> phi(k, 0);
    phi[lead] = 1;
    std::size_t combos = 1;
    for (std::size_t r = 0; r < free; ++r) combos *= q;
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t rest = c;
      for (std::size_t j = lead + 1; j < k; ++j) {
        phi[j] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
      Subspace<PrimeField> h = mj;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == lead) continue;
        // comp[j] - phi[j] * comp[lead] lies in ker(phi)
        auto v = comp[j];
        if (phi[j] != 0) {
          const auto s = f.neg(phi[j]);
          for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.add(v[t], f.mul(s, comp[lead][t]));
        }
        h.insert(std::move(v));
      }
      auto key = canonical_key(h);
      out.try_emplace(std::move(key), std::move(h));
    }
  }
}

std::vector<IdealRep> to_ideals(const FpModel& model, std::map<Key, Subspace<PrimeField>>& level, std::size_t d) {
  std::vector<IdealRep> out;
  out.reserve(level.size());
  for (auto& [key, s] : level) {
    auto a = branch_vector(model, s);
    out.push_back(IdealRep{std::move(s), d, std::move(a)});
  }
  return out;
}

std::vector<std::vector<IdealRep>> enumerate_levels(const FpModel& model, std::size_t d_max) {
  check_box(model, d_max);
  std::vector<std::vector<IdealRep>> levels;
  std::map<Key, Subspace<PrimeField>> current;
  current.emplace(canonical_key(model.basis()), model.basis());
  levels.push_back(to_ideals(model, current, 0));
  for (std::size_t d = 1; d <= d_max; ++d) {
    std::map<Key, Subspace<PrimeField>> next;
    for (const auto& ideal : levels.back()) socle_children(model, ideal.basis, next);
    levels.push_back(to_ideals(model, next, d));
  }
  return levels;
}

}  // namespace

std::vector<IdealRep> enumerate_colength_ideals(const FpModel& model, std::size_t d) {
  return std::move(enumerate_levels(model, d).back());
}

Enumeration enumerate_ideals(const GermPresentation& pres, const GermInvariants& inv, std::uint32_t q,
                             std::size_t d_max, const EnumOptions& opts) {
  auto model = build_enumeration_model(pres, inv, q, d_max, opts);
  auto levels = enumerate_levels(model, d_max);
  return Enumeration{pres.name, inv, std::move(model), std::move(levels)};
}

Enumeration enumerate_ideals(const GermPresentation& pres, std::uint32_t q, std::size_t d_max,
                             const EnumOptions& opts) {
  return enumerate_ideals(pres, invariants(pres), q, d_max, opts);
}

StratumTable stratum_table(const Enumeration& e) {
  StratumTable t;
  t.germ = e.germ;
  t.q = e.model.field().characteristic();
  t.d_max = e.levels.size() - 1;
  for (const auto& level : e.levels)
    for (const auto& ideal : level) ++t.entries[StratumKey{ideal.colength, ideal.branch_vector}];
  return t;
}

StratumTable stratum_table(const GermPresentation& pres, std::uint32_t q, std::size_t d_max,
                           const EnumOptions& opts) {
  return stratum_table(enumerate_ideals(pres, q, d_max, opts));
}

bool check_inclusions(const FpModel& model, const Subspace<PrimeField>& ideal, const FiltrationIndex& a) {
  FiltrationIndex upper(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) upper[i] = std::min(a[i] + model.conductor()[i], model.box()[i]);
  FiltrationIndex lower(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) lower[i] = std::min(a[i], model.box()[i]);
  const auto inner = filtration_subspace(model, upper);
  const auto outer = filtration_subspace(model, lower);
  return ideal.contains(inner) && outer.contains(ideal);
}

bool check_inclusions(const FpModel& model, const IdealRep& ideal) {
  return check_inclusions(model, ideal.basis, ideal.branch_vector);
}

}  // namespace hilbzeta
