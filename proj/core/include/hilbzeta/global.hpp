#pragma once

// Hilbert zeta functions of curves with rational smooth locus, assembled from
// the smooth part and the punctual factors of the singular points.

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbzeta/germ.hpp"
#include "hilbzeta/motive.hpp"

namespace hilbzeta {

struct SmoothComponent {
  enum class Kind { P1, A1 };
  Kind kind = Kind::A1;
  unsigned punctures = 0;
};

using SmoothLocusDesc = std::vector<SmoothComponent>;

struct Singularity {
  std::string label;
  std::optional<GermPresentation> germ;
  /// Precomputed punctual zeta; used when set.
  std::optional<ZetaRat> zeta;
};

struct GlobalCurveDesc {
  SmoothLocusDesc smooth;
  std::vector<Singularity> singularities;
};

/// prod over components of 1/((1-t)(1-Lt)) (P1) or 1/(1-Lt) (A1), times
/// (1-t)^punctures.
ZetaRat smooth_zeta(const SmoothLocusDesc& desc);

struct CurveZetaResult {
  ZetaRat zeta;
  /// Some factor came from interpolated strata classes.
  bool conjectural = false;
};

/// Axes presets use the closed form; other germs go through punctual_zeta_L
/// over `primes`. Throws InvalidInput listing a singularity whose factor is
/// unavailable.
CurveZetaResult curve_zeta(const GlobalCurveDesc& desc, const std::vector<std::uint32_t>& primes = {2, 3, 5});

/// {"smooth": [{"kind": "A1", "punctures": 1}, ...], "singularities": ["node", "@germ.json", {...}]}
GlobalCurveDesc parse_curve(const nlohmann::json& doc);
GlobalCurveDesc parse_curve_file(const std::string& path);

}  // namespace hilbzeta
