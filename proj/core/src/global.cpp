#include "hilbzeta/global.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

#include "hilbzeta/axes.hpp"
#include "hilbzeta/serialize.hpp"
#include "hilbzeta/zeta_assembly.hpp"

namespace hilbzeta {

ZetaRat smooth_zeta(const SmoothLocusDesc& desc) {
  ZetaRat z;
  for (const auto& c : desc) {
    const unsigned t = c.kind == SmoothComponent::Kind::P1 ? 1 : 0;
    z *= ZetaRat(detail::linear_power(LPoly(1), c.punctures), t, 1);
  }
  return z;
}

CurveZetaResult curve_zeta(const GlobalCurveDesc& desc, const std::vector<std::uint32_t>& primes) {
  CurveZetaResult r{smooth_zeta(desc.smooth), false};
  for (const auto& sing : desc.singularities) {
    ZetaRat factor;
    if (sing.zeta) {
      factor = *sing.zeta;
    } else if (!sing.germ) {
      throw InvalidInput("singularity " + sing.label + " has neither a germ nor a zeta function");
    } else if (auto n = sing.germ->axes_count()) {
      factor = axes_zeta(*n);
    } else {
      auto out = punctual_zeta_L(*sing.germ, primes);
      if (!out.conjectural)
        throw InvalidInput("punctual zeta of singularity " + sing.label + " is not available exactly: " +
                           out.diagnostic);
      factor = out.conjectural->zeta;
      r.conjectural = r.conjectural || out.conjectural->conjectural;
    }
    if (!(factor.constant_term() == LPoly(1)))
      throw InvalidInput("punctual zeta of singularity " + sing.label + " does not have constant term 1");
    r.zeta *= factor;
  }
  return r;
}

GlobalCurveDesc parse_curve(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("curve description must be a JSON object");
  GlobalCurveDesc desc;
  if (doc.contains("smooth")) {
    if (!doc["smooth"].is_array()) throw InvalidInput("\"smooth\" must be an array");
    for (const auto& c : doc["smooth"]) {
      if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string())
        throw InvalidInput("smooth component needs a \"kind\" of \"P1\" or \"A1\"");
      SmoothComponent comp;
      const auto kind = c["kind"].get<std::string>();
      if (kind == "P1") comp.kind = SmoothComponent::Kind::P1;
      else if (kind == "A1") comp.kind = SmoothComponent::Kind::A1;
      else throw InvalidInput("unsupported smooth component kind '" + kind + "' (only P1 and A1)");
      if (c.contains("punctures")) {
        if (!c["punctures"].is_number_unsigned()) throw InvalidInput("\"punctures\" must be a nonnegative integer");
        comp.punctures = c["punctures"].get<unsigned>();
      }
      desc.smooth.push_back(comp);
    }
  }
  if (doc.contains("singularities")) {
    if (!doc["singularities"].is_array()) throw InvalidInput("\"singularities\" must be an array");
    std::size_t k = 0;
    for (const auto& s : doc["singularities"]) {
      ++k;
      Singularity sing;
      if (s.is_string()) {
        sing.label = s.get<std::string>();
        sing.germ = parse_presentation(std::string_view(sing.label));
      } else if (s.is_object()) {
        sing.label = "#" + std::to_string(k);
        sing.zeta = zeta_from_json(s);
      } else {
        throw InvalidInput("singularity entries must be germ names or zeta objects");
      }
      desc.singularities.push_back(std::move(sing));
    }
  }
  return desc;
}

GlobalCurveDesc parse_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open curve file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("curve file " + path + ": " + e.what());
  }
  return parse_curve(j);
}

}  // namespace hilbzeta
