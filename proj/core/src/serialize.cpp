#include "hilbzeta/serialize.hpp"

#include <limits>

namespace hilbzeta {

using nlohmann::json;

json to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json to_json(const LPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const ZetaRat& z) {
  json num = json::array();
  for (const auto& c : z.numerator()) num.push_back(to_json(c));
  return json{{"numerator", num}, {"den_t", z.den_t()}, {"den_Lt", z.den_lambda()}};
}

json to_json(const IntZeta& z) {
  json num = json::array();
  for (const auto& c : z.numerator()) num.push_back(to_json(c));
  return json{{"numerator", num}, {"den_t", z.den_t()}, {"den_qt", z.den_lambda()}, {"q", to_json(z.lambda())}};
}

json to_json(const PowerSeries<LPoly>& s) {
  json out = json::array();
  for (const auto& c : s.coeffs) out.push_back(to_json(c));
  return out;
}

json to_json(const StratumTable& t) {
  json entries = json::array();
  for (const auto& [key, n] : t.entries) entries.push_back(json{{"d", key.d}, {"a", key.a}, {"count", n}});
  return json{{"q", t.q}, {"d_max", t.d_max}, {"entries", entries}};
}

json to_json(const GermInvariants& inv) {
  return json{{"s", inv.branches},  {"delta", inv.delta}, {"delta_i", inv.delta_i},
              {"c", inv.conductor}, {"C", inv.big_c},     {"smooth", inv.smooth()}};
}

json to_json(const PunctualZetaResult& r) {
  json strata = json::array();
  for (const auto& [key, cls] : r.strata) strata.push_back(json{{"d", key.d}, {"a", key.a}, {"class", to_json(cls)}});
  json out{{"germ", r.germ}, {"conjectural", r.conjectural}, {"zeta", to_json(r.zeta)}, {"strata", strata}};
  if (r.q) out["q"] = *r.q;
  return out;
}

json to_json(const StabilizationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"source", {{"d", c.source.d}, {"a", c.source.a}}},
                          {"branch", c.branch + 1},
                          {"target", {{"d", c.target.d}, {"a", c.target.a}}},
                          {"source_count", c.source_count},
                          {"target_count", c.target_count},
                          {"bijective", c.injective && c.surjective},
                          {"ok", c.ok()}});
  return json{{"germ", r.germ}, {"q", r.q}, {"d_max", r.d_max}, {"ok", r.ok()}, {"checks", checks}};
}

json to_json(const EquinormalizableReport& r) {
  return json{{"germ", r.germ},
              {"weight", r.weight.w},
              {"exponent_sets", r.monomial.exponents},
              {"conductor_monomial", r.monomial.conductor},
              {"delta_source", r.delta_source},
              {"delta_monomial", r.monomial.delta},
              {"branches", r.branches_source},
              {"branches_monomial", r.monomial.branches},
              {"ok", r.ok}};
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return json{{"germ", r.germ}, {"q", r.q}, {"d_max", r.d_max}, {"ok", r.ok()}, {"checks", checks}};
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

LPoly lpoly_from_json(const json& j) {
  if (j.is_number() || j.is_string()) return LPoly(int_from_json(j));
  if (!j.is_array()) throw InvalidInput("an L-polynomial must be an integer array, got " + j.dump());
  std::vector<Int> c;
  for (const auto& v : j) c.push_back(int_from_json(v));
  return LPoly(std::move(c));
}

ZetaRat zeta_from_json(const json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j["numerator"].is_array())
    throw InvalidInput("a zeta function needs a \"numerator\" array");
  std::vector<LPoly> num;
  for (const auto& c : j["numerator"]) num.push_back(lpoly_from_json(c));
  auto exponent = [&](const char* key) -> unsigned {
    if (!j.contains(key)) return 0;
    if (!j[key].is_number_unsigned()) throw InvalidInput(std::string("\"") + key + "\" must be a nonnegative integer");
    return j[key].get<unsigned>();
  };
  return ZetaRat(std::move(num), exponent("den_t"), exponent("den_Lt"));
}

}  // namespace hilbzeta
