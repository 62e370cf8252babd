// hilbzeta: Hilbert zeta functions of curve singularities.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "hilbzeta/axes.hpp"
#include "hilbzeta/degeneration.hpp"
#include "hilbzeta/germ.hpp"
#include "hilbzeta/global.hpp"
#include "hilbzeta/hilb_enum.hpp"
#include "hilbzeta/serialize.hpp"
#include "hilbzeta/suite.hpp"
#include "hilbzeta/zeta_assembly.hpp"

using namespace hilbzeta;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kVerifyFailed = 2, kGuard = 3 };

template <class T>
std::string vec_text(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string series_text(const PowerSeries<LPoly>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) out += (i ? ", " : "") + s.coeffs[i].to_compact_string();
  return out + ", ...]";
}

std::string poly_text(const std::vector<LPoly>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + p[i].to_compact_string();
  return out + "]";
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
  bool json_out = false;
  std::size_t dim_limit = 24;
  EnumOptions enum_opts() const { return EnumOptions{dim_limit}; }
};

int cmd_analyze(const std::string& germ, const Common& common) {
  const auto pres = parse_presentation(germ);
  const auto inv = invariants(pres);
  if (common.json_out) {
    auto j = to_json(inv);
    j["germ"] = pres.name;
    print_json(j);
    return kOk;
  }
  std::cout << "s=" << inv.branches << " δ=" << inv.delta << " c=" << vec_text(inv.conductor) << " C=" << inv.big_c
            << "\n";
  std::cout << "δ_i=" << vec_text(inv.delta_i) << "\n";
  if (inv.smooth()) std::cout << "smooth germ\n";
  return kOk;
}

int cmd_strata(const std::string& germ, std::uint32_t q, std::optional<std::size_t> dmax, const Common& common) {
  const auto pres = parse_presentation(germ);
  const auto inv = invariants(pres);
  const std::size_t d = dmax.value_or(std::max<std::size_t>(required_dmax(inv), 1));
  const auto table = stratum_table(enumerate_ideals(pres, inv, q, d, common.enum_opts()));
  if (common.json_out) {
    print_json(to_json(table));
    return kOk;
  }
  std::cout << pres.name << " over F_" << q << ", d <= " << d << "\n";
  for (const auto& [key, n] : table.entries) std::cout << "d=" << key.d << " a=" << vec_text(key.a) << " " << n << "\n";
  for (std::size_t k = 0; k <= d; ++k) std::cout << "total d=" << k << ": " << table.total(k) << "\n";
  return kOk;
}

json zeta_entry(const PunctualZetaResult& r, std::size_t terms) {
  auto j = to_json(r);
  j["series"] = to_json(series_expand(r.zeta, terms));
  j["display"] = to_display(r.zeta);
  return j;
}

void print_zeta(const std::string& label, const ZetaRat& z, std::size_t terms) {
  std::cout << label << ": " << to_display(z) << "\n";
  std::cout << "  numerator P=" << poly_text(z.excess_numerator()) << " den_t=" << z.den_t();
  if (z.den_lambda()) std::cout << " den_Lt=" << z.den_lambda();
  std::cout << "\n  series " << series_text(series_expand(z, terms)) << "\n";
}

int cmd_zeta(const std::string& germ, std::uint32_t q, std::optional<std::vector<std::uint32_t>> primes,
             std::optional<std::size_t> dmax, std::size_t terms, const Common& common) {
  const auto pres = parse_presentation(germ);
  const auto inv = invariants(pres);
  if (primes) {
    LZetaOptions opts;
    opts.enumeration = common.enum_opts();
    const auto out = punctual_zeta_L(pres, *primes, opts);
    if (common.json_out) {
      json per = json::object();
      for (const auto& [p, r] : out.per_prime) per[std::to_string(p)] = zeta_entry(r, terms);
      json j{{"germ", pres.name}, {"per_prime", per}, {"conjectural", out.conjectural && out.conjectural->conjectural}};
      if (out.conjectural) j["zeta"] = zeta_entry(*out.conjectural, terms);
      if (!out.diagnostic.empty()) j["diagnostic"] = out.diagnostic;
      print_json(j);
      return kOk;
    }
    for (const auto& [p, r] : out.per_prime) print_zeta("q=" + std::to_string(p), r.zeta, terms);
    if (out.conjectural)
      print_zeta(out.conjectural->conjectural ? "L (conjectural)" : "L", out.conjectural->zeta, terms);
    else
      std::cout << "no L-level zeta function: " << out.diagnostic << "\n";
    return kOk;
  }
  const std::size_t d = dmax.value_or(required_dmax(inv));
  StratumTable table;
  table.germ = pres.name;
  table.q = q;
  if (!inv.smooth()) table = stratum_table(enumerate_ideals(pres, inv, q, d, common.enum_opts()));
  const auto r = assemble_punctual_zeta(table, inv);
  if (common.json_out) {
    json per = json::object();
    per[std::to_string(q)] = zeta_entry(r, terms);
    print_json(json{{"germ", pres.name}, {"per_prime", per}, {"conjectural", false}});
    return kOk;
  }
  print_zeta("q=" + std::to_string(q), r.zeta, terms);
  return kOk;
}

int cmd_axes(unsigned n, std::optional<std::size_t> d, bool euler, std::size_t terms, const Common& common) {
  const auto z = axes_zeta(n);
  const std::size_t order = d ? std::max(*d + 1, terms) : terms;
  if (common.json_out) {
    json j{{"N", n}, {"zeta", to_json(z)}, {"display", to_display(z)}, {"series", to_json(series_expand(z, order))}};
    json strata = json::array();
    for (unsigned k = 1; k <= n; ++k) strata.push_back(to_json(gr0(k, n)));
    j["gr0"] = strata;
    if (d) j["class"] = to_json(axes_hilb_class(n, *d));
    if (euler) {
      const auto e = specialize(z, Int(1));
      j["euler"] = to_json(e);
      json s = json::array();
      for (const auto& c : series_expand(e, order).coeffs) s.push_back(to_json(c));
      j["euler_series"] = s;
    }
    print_json(j);
    return kOk;
  }
  std::cout << "Z = " << to_display(z) << "\n";
  for (unsigned k = n; k >= 1; --k) std::cout << "[Gr(" << k << ",V)0] = " << gr0(k, n) << "\n";
  if (d) std::cout << "[Hilb^" << *d << "] = " << axes_hilb_class(n, *d) << "\n";
  if (euler) {
    const auto e = specialize(z, Int(1));
    std::cout << "Z(L=1) = " << to_display(e) << "\n  series [";
    const auto s = series_expand(e, order);
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) std::cout << (i ? ", " : "") << s.coeffs[i];
    std::cout << ", ...]\n";
  }
  return kOk;
}

int cmd_verify(std::vector<std::string> germs, std::vector<std::uint32_t> qs, std::optional<std::size_t> dmax,
               bool seed_fault, const Common& common) {
  if (germs.empty()) germs = {"node", "cusp", "axes:3", "semigroup:3,4"};
  SuiteOptions opts;
  opts.enumeration = common.enum_opts();
  opts.d_max = dmax;
  opts.seed_fault = seed_fault;
  bool ok = true;
  json reports = json::array();
  for (const auto& g : germs) {
    const auto pres = parse_presentation(g);
    for (auto q : qs) {
      const auto r = run_suite(pres, q, opts);
      ok = ok && r.ok();
      if (common.json_out) {
        reports.push_back(to_json(r));
        continue;
      }
      std::cout << r.germ << " q=" << r.q << " d_max=" << r.d_max << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
      for (const auto& c : r.checks) std::cout << "  " << to_string(c.status) << " " << c.name << ": " << c.detail << "\n";
    }
  }
  if (common.json_out) print_json(json{{"ok", ok}, {"reports", reports}});
  return ok ? kOk : kVerifyFailed;
}

int cmd_degenerate(const std::string& germ, std::optional<std::vector<unsigned>> weight, const Common& common) {
  const auto pres = parse_presentation(germ);
  const WeightVector w = weight ? WeightVector{*weight} : choose_weight(pres);
  const auto r = verify_equinormalizable(pres, w);
  if (common.json_out) {
    print_json(to_json(r));
    return r.ok ? kOk : kVerifyFailed;
  }
  std::cout << "weight " << vec_text(r.weight.w) << "\n";
  for (std::size_t i = 0; i < r.monomial.branches; ++i) {
    std::cout << "S_" << i + 1 << " = {";
    for (auto e : r.monomial.exponents[i]) std::cout << e << ",";
    std::cout << r.monomial.conductor[i] << ",...}\n";
  }
  std::cout << "δ source=" << r.delta_source << " monomial=" << r.monomial.delta << ", branches source=" << r.branches_source
            << " monomial=" << r.monomial.branches << ": " << (r.ok ? "ok" : "FAILED") << "\n";
  return r.ok ? kOk : kVerifyFailed;
}

int cmd_global(const std::string& config, const std::vector<std::uint32_t>& primes, std::size_t terms,
               const Common& common) {
  const auto desc = parse_curve_file(config);
  const auto r = curve_zeta(desc, primes);
  if (common.json_out) {
    print_json(json{{"zeta", to_json(r.zeta)},
                    {"display", to_display(r.zeta)},
                    {"conjectural", r.conjectural},
                    {"series", to_json(series_expand(r.zeta, terms))}});
    return kOk;
  }
  std::cout << "Z = " << to_display(r.zeta) << (r.conjectural ? "  (conjectural)" : "") << "\n";
  std::cout << "  series " << series_text(series_expand(r.zeta, terms)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert zeta functions of reduced curve singularities"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json_out, "Emit JSON");
  app.add_option("--dim-limit", common.dim_limit, "Refuse enumeration boxes above this dimension")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::string germ;
  std::uint32_t q = 2;
  std::optional<std::size_t> dmax;
  std::size_t terms = 6;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", common.json_out, "Emit JSON"); };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--dim-limit", common.dim_limit, "Refuse enumeration boxes above this dimension")
        ->check(CLI::PositiveNumber);
  };
  const std::string germ_help = "node, cusp, axes:N, semigroup:g1,...,gm or @file.json";

  auto* analyze = app.add_subcommand("analyze", "Print s, delta, delta_i, c and C");
  analyze->add_option("germ", germ, germ_help)->required();
  add_json(analyze);
  analyze->callback([&] { action = [&] { return cmd_analyze(germ, common); }; });

  auto* strata = app.add_subcommand("strata", "Stratum counts over F_q");
  strata->add_option("germ", germ, germ_help)->required();
  strata->add_option("--q", q, "Prime")->capture_default_str();
  strata->add_option("--dmax", dmax, "Largest colength");
  add_json(strata);
  add_limit(strata);
  strata->callback([&] { action = [&] { return cmd_strata(germ, q, dmax, common); }; });

  auto* zeta = app.add_subcommand("zeta", "Punctual zeta function over F_q, or interpolated in L with --primes");
  std::string primes_text;
  zeta->add_option("germ", germ, germ_help)->required();
  zeta->add_option("--q", q, "Prime")->capture_default_str();
  auto* primes_opt = zeta->add_option("--primes", primes_text, "Primes for interpolation (default 2,3,5)")->expected(0, 1);
  zeta->add_option("--dmax", dmax, "Largest colength enumerated");
  zeta->add_option("--terms", terms, "Series terms to print")->capture_default_str();
  add_json(zeta);
  add_limit(zeta);
  zeta->callback([&] {
    action = [&]() -> int {
      std::optional<std::vector<std::uint32_t>> primes;
      if (primes_opt->count() > 0) {
        std::vector<std::uint32_t> ps;
        std::stringstream ss(primes_text.empty() ? "2,3,5" : primes_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            ps.push_back(static_cast<std::uint32_t>(std::stoul(item)));
          } catch (const std::exception&) {
            throw InvalidInput("bad prime '" + item + "'");
          }
        }
        primes = ps;
      }
      return cmd_zeta(germ, q, primes, dmax, terms, common);
    };
  });

  auto* axes = app.add_subcommand("axes", "Closed form for the coordinate axes in A^N");
  unsigned n = 0;
  std::optional<std::size_t> axes_d;
  bool euler = false;
  axes->add_option("--n", n, "Number of axes")->required()->check(CLI::PositiveNumber);
  axes->add_option("--d", axes_d, "Print [Hilb^d]");
  axes->add_flag("--euler", euler, "Specialize at L=1");
  axes->add_option("--terms", terms, "Series terms to print")->capture_default_str();
  add_json(axes);
  axes->callback([&] { action = [&] { return cmd_axes(n, axes_d, euler, terms, common); }; });

  auto* verify = app.add_subcommand("verify", "Run the invariant suite (all presets when no germ is given)");
  std::vector<std::string> germs;
  std::vector<std::uint32_t> qs{2, 3};
  bool seed_fault = false;
  verify->add_option("germ", germs, germ_help);
  verify->add_option("--q", qs, "Primes")->delimiter(',')->capture_default_str();
  verify->add_option("--dmax", dmax, "Largest colength enumerated");
  verify->add_flag("--seed-fault", seed_fault, "Corrupt one stratum count (the suite must fail)");
  add_json(verify);
  add_limit(verify);
  verify->callback([&] { action = [&] { return cmd_verify(germs, qs, dmax, seed_fault, common); }; });

  auto* degenerate = app.add_subcommand("degenerate", "Monomial degeneration and its delta");
  std::optional<std::vector<unsigned>> weight;
  degenerate->add_option("germ", germ, germ_help)->required();
  degenerate->add_option("--weight", weight, "Weight vector w1,w2,...")->delimiter(',');
  add_json(degenerate);
  degenerate->callback([&] { action = [&] { return cmd_degenerate(germ, weight, common); }; });

  auto* global = app.add_subcommand("global", "Hilbert zeta function of a curve");
  std::string config;
  std::vector<std::uint32_t> global_primes{2, 3, 5};
  global->add_option("--config", config, "Curve description JSON")->required();
  global->add_option("--primes", global_primes, "Primes for non-axes singularities")->delimiter(',');
  global->add_option("--terms", terms, "Series terms to print")->capture_default_str();
  add_json(global);
  global->callback([&] { action = [&] { return cmd_global(config, global_primes, terms, common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    return action();
  } catch (const ResourceGuard& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kGuard;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
