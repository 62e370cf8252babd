#include "hilbzeta/germ.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace hilbzeta {

namespace {

constexpr std::size_t kInitialBox = 4;
constexpr std::size_t kBoxCap = 64;

std::string index_text(const FiltrationIndex& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidInput("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

Int json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("generator coefficients must be integers, got " + v.dump());
}

}  // namespace

std::optional<unsigned> GermPresentation::axes_count() const {
  if (name == "node") return 2;
  if (name.rfind("axes:", 0) == 0) return parse_unsigned(std::string_view(name).substr(5), "axes count");
  return std::nullopt;
}

GermPresentation preset_axes(unsigned n) {
  if (n < 1) throw InvalidInput("axes:N needs N >= 1");
  GermPresentation p;
  p.name = "axes:" + std::to_string(n);
  p.branches = n;
  p.truncation.assign(n, std::nullopt);
  for (unsigned g = 0; g < n; ++g) {
    std::vector<std::vector<Int>> gen(n);
    gen[g] = {Int(0), Int(1)};
    p.generators.push_back(std::move(gen));
  }
  return p;
}

GermPresentation preset_semigroup(const std::vector<unsigned>& gens) {
  if (gens.empty()) throw InvalidInput("semigroup preset needs at least one generator");
  unsigned g = 0;
  for (unsigned v : gens) {
    if (v == 0) throw InvalidInput("semigroup generators must be positive");
    g = std::gcd(g, v);
  }
  if (g != 1) throw InvalidInput("semigroup generators must be coprime (otherwise the branch is not normalized)");
  GermPresentation p;
  p.name = "semigroup:";
  for (std::size_t i = 0; i < gens.size(); ++i) p.name += (i ? "," : "") + std::to_string(gens[i]);
  p.branches = 1;
  p.truncation.assign(1, std::nullopt);
  for (unsigned v : gens) {
    std::vector<Int> series(v + 1, Int(0));
    series[v] = 1;
    p.generators.push_back({std::move(series)});
  }
  return p;
}

GermPresentation parse_presentation(std::string_view doc) {
  if (doc == "node") {
    auto p = preset_axes(2);
    p.name = "node";
    return p;
  }
  if (doc == "cusp") {
    auto p = preset_semigroup({2, 3});
    p.name = "cusp";
    return p;
  }
  if (doc.rfind("axes:", 0) == 0) return preset_axes(parse_unsigned(doc.substr(5), "axes count"));
  if (doc.rfind("semigroup:", 0) == 0) {
    std::vector<unsigned> gens;
    std::string_view rest = doc.substr(10);
    while (true) {
      auto comma = rest.find(',');
      gens.push_back(parse_unsigned(rest.substr(0, comma), "semigroup generator"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return preset_semigroup(gens);
  }
  std::string path;
  if (!doc.empty() && doc.front() == '@')
    path = std::string(doc.substr(1));
  else if (doc.size() > 5 && doc.substr(doc.size() - 5) == ".json")
    path = std::string(doc);
  else
    throw InvalidInput("unknown germ '" + std::string(doc) +
                       "' (expected node, cusp, axes:N, semigroup:g1,...,gm or @file.json)");
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open germ file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("germ file " + path + ": " + e.what());
  }
  auto p = parse_presentation(j);
  p.name = "@" + path;
  return p;
}

GermPresentation parse_presentation(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("germ description must be a JSON object");
  for (const char* key : {"branches", "truncation", "generators"})
    if (!doc.contains(key)) throw InvalidInput(std::string("germ description lacks \"") + key + "\"");
  if (!doc["branches"].is_number_unsigned() || doc["branches"].get<std::size_t>() == 0)
    throw InvalidInput("\"branches\" must be a positive integer");
  if (!doc["truncation"].is_number_unsigned() || doc["truncation"].get<std::size_t>() == 0)
    throw InvalidInput("\"truncation\" must be a positive integer");
  GermPresentation p;
  p.branches = doc["branches"].get<std::size_t>();
  const auto trunc = doc["truncation"].get<std::size_t>();
  p.truncation.assign(p.branches, trunc);
  const auto& gens = doc["generators"];
  if (!gens.is_array()) throw InvalidInput("\"generators\" must be an array");
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != p.branches)
      throw InvalidInput("each generator must list one coefficient array per branch");
    std::vector<std::vector<Int>> gen;
    for (const auto& series : g) {
      if (!series.is_array()) throw InvalidInput("branch series must be coefficient arrays");
      if (series.size() > trunc)
        throw InvalidInput("a branch series has more coefficients than the truncation order");
      std::vector<Int> coeffs;
      for (const auto& c : series) coeffs.push_back(json_integer(c));
      gen.push_back(std::move(coeffs));
    }
    p.generators.push_back(std::move(gen));
  }
  validate(p);
  return p;
}

void validate(const GermPresentation& pres) {
  if (pres.branches == 0) throw InvalidInput("a germ needs at least one branch");
  if (pres.truncation.size() != pres.branches) throw InvalidInput("truncation list does not match branches");
  std::vector<bool> finite(pres.branches, false);
  for (const auto& gen : pres.generators) {
    if (gen.size() != pres.branches) throw InvalidInput("generator does not list every branch");
    for (std::size_t i = 0; i < pres.branches; ++i) {
      const auto& s = gen[i];
      if (!s.empty() && !s[0].is_zero())
        throw InvalidInput("generator has nonzero constant term on branch " + std::to_string(i + 1) +
                           " (germ not local)");
      for (std::size_t n = 1; n < s.size(); ++n)
        if (!s[n].is_zero()) finite[i] = true;
    }
  }
  for (std::size_t i = 0; i < pres.branches; ++i)
    if (!finite[i])
      throw InvalidInput("all generators vanish on branch " + std::to_string(i + 1) +
                         " to the truncation order (branch not finite over R)");
}

GermPresentation branch_presentation(const GermPresentation& pres, std::size_t branch) {
  GermPresentation p;
  p.name = pres.name + "#" + std::to_string(branch + 1);
  p.branches = 1;
  p.truncation = {pres.truncation[branch]};
  for (const auto& gen : pres.generators) p.generators.push_back({gen[branch]});
  return p;
}

// ---------------------------------------------------------------------------
// GermModel

template <class Field>
GermModel<Field>::GermModel(Field field, FiltrationIndex box)
    : field_(std::move(field)),
      box_(std::move(box)),
      offset_(box_.size(), 0),
      ambient_(std::accumulate(box_.begin(), box_.end(), std::size_t{0})),
      image_(field_, ambient_) {
  for (std::size_t i = 1; i < box_.size(); ++i) offset_[i] = offset_[i - 1] + box_[i - 1];
}

template <class Field>
typename GermModel<Field>::Vector GermModel<Field>::one() const {
  Vector v(ambient_, field_.zero());
  for (std::size_t i = 0; i < box_.size(); ++i)
    if (box_[i] > 0) v[offset_[i]] = field_.one();
  return v;
}

template <class Field>
typename GermModel<Field>::Vector GermModel<Field>::monomial(std::size_t branch, std::size_t exponent) const {
  Vector v(ambient_, field_.zero());
  if (exponent < box_[branch]) v[index(branch, exponent)] = field_.one();
  return v;
}

template <class Field>
typename GermModel<Field>::Vector GermModel<Field>::multiply(const Vector& a, const Vector& b) const {
  Vector out(ambient_, field_.zero());
  for (std::size_t i = 0; i < box_.size(); ++i) {
    const std::size_t o = offset_[i], n = box_[i];
    for (std::size_t p = 0; p < n; ++p) {
      if (field_.is_zero(a[o + p])) continue;
      for (std::size_t q = 0; p + q < n; ++q) {
        if (field_.is_zero(b[o + q])) continue;
        out[o + p + q] = field_.add(out[o + p + q], field_.mul(a[o + p], b[o + q]));
      }
    }
  }
  return out;
}

template <class Field>
typename GermModel<Field>::Vector GermModel<Field>::twist(std::size_t branch, const Vector& v) const {
  Vector out = v;
  const std::size_t o = offset_[branch], n = box_[branch];
  if (n == 0) return out;
  for (std::size_t p = n - 1; p > 0; --p) out[o + p] = v[o + p - 1];
  out[o] = field_.zero();
  return out;
}

namespace {

template <class Field>
Subspace<Field> span_closure(const Field& field, std::size_t ambient,
                             const std::vector<std::vector<typename Field::Elem>>& gens,
                             const std::vector<typename Field::Elem>& one,
                             const auto& multiply) {
  Subspace<Field> image(field, ambient);
  std::vector<std::vector<typename Field::Elem>> pending;
  if (image.insert(one)) pending.push_back(one);
  for (const auto& g : gens)
    if (image.insert(g)) pending.push_back(g);
  while (!pending.empty()) {
    auto v = std::move(pending.back());
    pending.pop_back();
    for (const auto& g : gens) {
      auto w = multiply(g, v);
      if (image.insert(w)) pending.push_back(std::move(w));
    }
  }
  return image;
}

}  // namespace

template <class Field>
GermModel<Field> build_model(const GermPresentation& pres, const FiltrationIndex& box, Field field) {
  validate(pres);
  if (box.size() != pres.branches) throw PreconditionError("box has wrong number of entries");
  for (std::size_t i = 0; i < pres.branches; ++i) {
    if (pres.truncation[i] && box[i] > *pres.truncation[i])
      throw InvalidInput("input truncation order " + std::to_string(*pres.truncation[i]) + " on branch " +
                         std::to_string(i + 1) + " is insufficient; this computation needs truncation order " +
                         std::to_string(box[i]));
  }
  GermModel<Field> m(std::move(field), box);
  const auto& f = m.field_;
  for (const auto& gen : pres.generators) {
    typename GermModel<Field>::Vector v(m.ambient_, f.zero());
    for (std::size_t i = 0; i < pres.branches; ++i)
      for (std::size_t n = 0; n < std::min(gen[i].size(), box[i]); ++n) v[m.index(i, n)] = f.from_int(gen[i][n]);
    m.generators_.push_back(std::move(v));
  }
  auto mul = [&m](const auto& a, const auto& b) { return m.multiply(a, b); };
  m.image_ = span_closure<Field>(f, m.ambient_, m.generators_, m.one(), mul);

  m.delta_ = m.ambient_ - m.image_.dim();
  m.conductor_.assign(pres.branches, 0);
  for (std::size_t i = 0; i < pres.branches; ++i) {
    for (std::size_t n = box[i]; n-- > 0;) {
      if (!m.image_.contains(m.monomial(i, n))) {
        m.conductor_[i] = n + 1;
        break;
      }
    }
  }
  m.big_c_ = std::accumulate(m.conductor_.begin(), m.conductor_.end(), std::size_t{0});

  // Single-branch subalgebras generated by the i-th components.
  m.delta_i_.assign(pres.branches, 0);
  for (std::size_t i = 0; i < pres.branches; ++i) {
    const std::size_t n = box[i];
    std::vector<typename GermModel<Field>::Vector> gens;
    for (const auto& g : m.generators_)
      gens.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(m.offset_[i]),
                        g.begin() + static_cast<std::ptrdiff_t>(m.offset_[i] + n));
    typename GermModel<Field>::Vector one(n, f.zero());
    if (n > 0) one[0] = f.one();
    auto mul1 = [&f, n](const auto& a, const auto& b) {
      typename GermModel<Field>::Vector out(n, f.zero());
      for (std::size_t p = 0; p < n; ++p) {
        if (f.is_zero(a[p])) continue;
        for (std::size_t q = 0; p + q < n; ++q)
          if (!f.is_zero(b[q])) out[p + q] = f.add(out[p + q], f.mul(a[p], b[q]));
      }
      return out;
    };
    m.delta_i_[i] = n - span_closure<Field>(f, n, gens, one, mul1).dim();
  }
  return m;
}

template <class Field>
Subspace<Field> filtration_subspace(const GermModel<Field>& model, const FiltrationIndex& a) {
  if (a.size() != model.branches()) throw PreconditionError("filtration index has wrong length");
  std::vector<bool> allowed(model.ambient_dim(), false);
  for (std::size_t i = 0; i < model.branches(); ++i) {
    if (a[i] > model.box()[i])
      throw PreconditionError("filtration index " + index_text(a) + " exceeds model box " + index_text(model.box()));
    for (std::size_t n = a[i]; n < model.box()[i]; ++n) allowed[model.index(i, n)] = true;
  }
  return intersect_with_support(model.basis(), allowed);
}

template <class Field>
std::vector<BranchValue> branch_valuation(const GermModel<Field>& model,
                                          const typename GermModel<Field>::Vector& element) {
  std::vector<BranchValue> out;
  for (std::size_t i = 0; i < model.branches(); ++i) {
    BranchValue v{model.box()[i], true};
    for (std::size_t n = 0; n < model.box()[i]; ++n) {
      if (!model.field().is_zero(element[model.index(i, n)])) {
        v = {n, false};
        break;
      }
    }
    out.push_back(v);
  }
  return out;
}

template class GermModel<PrimeField>;
template class GermModel<RationalField>;
template GermModel<PrimeField> build_model(const GermPresentation&, const FiltrationIndex&, PrimeField);
template GermModel<RationalField> build_model(const GermPresentation&, const FiltrationIndex&, RationalField);
template Subspace<PrimeField> filtration_subspace(const GermModel<PrimeField>&, const FiltrationIndex&);
template Subspace<RationalField> filtration_subspace(const GermModel<RationalField>&, const FiltrationIndex&);
template std::vector<BranchValue> branch_valuation(const GermModel<PrimeField>&,
                                                   const GermModel<PrimeField>::Vector&);
template std::vector<BranchValue> branch_valuation(const GermModel<RationalField>&,
                                                   const GermModel<RationalField>::Vector&);

// ---------------------------------------------------------------------------
// Invariants

namespace {

struct BoxEstimate {
  std::size_t delta;
  FiltrationIndex conductor;
  bool operator==(const BoxEstimate&) const = default;
};

// Doubling search for a box where (delta, conductor) agrees with the
// previous round.
std::pair<GermModel<RationalField>, FiltrationIndex> stabilized_model(const GermPresentation& pres) {
  auto clamp = [&](std::size_t want) {
    FiltrationIndex b(pres.branches);
    for (std::size_t i = 0; i < pres.branches; ++i)
      b[i] = pres.truncation[i] ? std::min(want, *pres.truncation[i]) : want;
    return b;
  };
  std::size_t size = kInitialBox;
  FiltrationIndex box = clamp(size);
  auto model = build_model(pres, box, RationalField{});
  BoxEstimate prev{model.delta(), model.conductor()};
  while (true) {
    if (size >= kBoxCap)
      throw InvalidInput("presentation does not define a reduced germ with finite δ (no stabilization up to box " +
                         std::to_string(kBoxCap) + ")");
    size *= 2;
    FiltrationIndex next = clamp(size);
    if (next == box)
      throw InvalidInput("invariants did not stabilize within the input truncation order; "
                         "supply series to truncation order " + std::to_string(size));
    auto cur = build_model(pres, next, RationalField{});
    BoxEstimate est{cur.delta(), cur.conductor()};
    box = next;
    if (est == prev) return {std::move(cur), box};
    prev = est;
    model = std::move(cur);
  }
}

}  // namespace

GermInvariants invariants(const GermPresentation& pres) {
  validate(pres);
  auto [model, box] = stabilized_model(pres);
  GermInvariants inv;
  inv.branches = pres.branches;
  inv.delta = model.delta();
  inv.conductor = model.conductor();
  inv.big_c = model.big_c();
  inv.box = box;
  for (std::size_t i = 0; i < pres.branches; ++i) {
    if (pres.branches == 1) {
      inv.delta_i.push_back(inv.delta);
      continue;
    }
    auto [bm, bbox] = stabilized_model(branch_presentation(pres, i));
    inv.delta_i.push_back(bm.delta());
  }
  return inv;
}

}  // namespace hilbzeta
