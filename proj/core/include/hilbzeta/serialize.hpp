#pragma once

// JSON encodings. LPoly is an integer array ascending in L (integers beyond
// 64 bits are written as strings); ZetaRat is
// {"numerator": [[...], ...], "den_t": a, "den_Lt": b}.

#include <nlohmann/json.hpp>

#include "hilbzeta/degeneration.hpp"
#include "hilbzeta/germ.hpp"
#include "hilbzeta/hilb_enum.hpp"
#include "hilbzeta/motive.hpp"
#include "hilbzeta/suite.hpp"
#include "hilbzeta/zeta_assembly.hpp"

namespace hilbzeta {

nlohmann::json to_json(const Int& v);
nlohmann::json to_json(const LPoly& p);
nlohmann::json to_json(const ZetaRat& z);
/// {"numerator": [...], "den_t": a, "den_qt": b, "q": v}
nlohmann::json to_json(const IntZeta& z);
nlohmann::json to_json(const PowerSeries<LPoly>& s);
nlohmann::json to_json(const StratumTable& t);
nlohmann::json to_json(const GermInvariants& inv);
nlohmann::json to_json(const PunctualZetaResult& r);
nlohmann::json to_json(const StabilizationReport& r);
nlohmann::json to_json(const EquinormalizableReport& r);
nlohmann::json to_json(const SuiteReport& r);

Int int_from_json(const nlohmann::json& j);
LPoly lpoly_from_json(const nlohmann::json& j);
ZetaRat zeta_from_json(const nlohmann::json& j);

}  // namespace hilbzeta
