#pragma once

// Reduced curve germs R inside their normalization prod_i k[[x_i]], modeled
// in the finite quotient prod_i k[x_i]/(x_i^{b_i}) for a truncation box b.

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbzeta/field.hpp"
#include "hilbzeta/motive.hpp"
#include "hilbzeta/subspace.hpp"

namespace hilbzeta {

/// Per-branch exponent vector; used both for filtration indices F^a and for
/// truncation boxes.
using FiltrationIndex = std::vector<std::size_t>;

/// A germ given by generators of R as an algebra; generators[g][i] is the
/// coefficient list of generator g on branch i (index 0 is the constant term).
struct GermPresentation {
  std::string name = "custom";
  std::size_t branches = 0;
  std::vector<std::vector<std::vector<Int>>> generators;
  /// Input series are known modulo x_i^truncation[i]; nullopt means the
  /// series are exact polynomials.
  std::vector<std::optional<std::size_t>> truncation;

  /// N for an axes:N (or node) preset.
  std::optional<unsigned> axes_count() const;
};

GermPresentation preset_axes(unsigned n);
GermPresentation preset_semigroup(const std::vector<unsigned>& gens);

/// Accepts "node", "cusp", "axes:N", "semigroup:g1,...,gm", "@file.json" or a
/// path ending in ".json".
GermPresentation parse_presentation(std::string_view doc);
inline GermPresentation parse_presentation(const std::string& doc) { return parse_presentation(std::string_view(doc)); }
inline GermPresentation parse_presentation(const char* doc) { return parse_presentation(std::string_view(doc)); }
/// Custom germ JSON: {"branches": s, "truncation": n, "generators": [...]}.
GermPresentation parse_presentation(const nlohmann::json& doc);

/// Throws InvalidInput when the presentation is not a local germ with finite
/// branches.
void validate(const GermPresentation& pres);

struct GermInvariants {
  std::size_t branches = 0;
  std::size_t delta = 0;
  std::vector<std::size_t> delta_i;
  FiltrationIndex conductor;
  std::size_t big_c = 0;
  /// Box at which delta and the conductor were seen to stabilize.
  FiltrationIndex box;

  bool smooth() const noexcept { return delta == 0; }
};

/// delta, per-branch delta, conductor and C; computed over Q with doubling
/// boxes 4, 8, ... capped at 64 per branch.
GermInvariants invariants(const GermPresentation& pres);

/// Valuation on one branch. `at_least` means the projection vanishes in the
/// truncation and `order` is the box bound b_i.
struct BranchValue {
  std::size_t order = 0;
  bool at_least = false;
  friend bool operator==(const BranchValue&, const BranchValue&) = default;
};

template <class Field>
class GermModel {
 public:
  using Elem = typename Field::Elem;
  using Vector = std::vector<Elem>;

  const Field& field() const noexcept { return field_; }
  const FiltrationIndex& box() const noexcept { return box_; }
  std::size_t branches() const noexcept { return box_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t index(std::size_t branch, std::size_t exponent) const { return offset_[branch] + exponent; }

  /// Echelon basis of the image of R.
  const Subspace<Field>& basis() const noexcept { return image_; }
  const std::vector<Vector>& generators() const noexcept { return generators_; }

  Vector one() const;
  Vector monomial(std::size_t branch, std::size_t exponent) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Multiplication by generator g.
  Vector apply_generator(std::size_t g, const Vector& v) const { return multiply(generators_[g], v); }
  /// Multiplication by xi_i: x_i on branch i, 1 elsewhere.
  Vector twist(std::size_t branch, const Vector& v) const;

  std::size_t delta() const noexcept { return delta_; }
  const std::vector<std::size_t>& delta_i() const noexcept { return delta_i_; }
  const FiltrationIndex& conductor() const noexcept { return conductor_; }
  std::size_t big_c() const noexcept { return big_c_; }

  template <class F>
  friend GermModel<F> build_model(const GermPresentation& pres, const FiltrationIndex& box, F field);

 private:
  GermModel(Field field, FiltrationIndex box);

  Field field_;
  FiltrationIndex box_;
  std::vector<std::size_t> offset_;
  std::size_t ambient_ = 0;
  Subspace<Field> image_;
  std::vector<Vector> generators_;
  std::size_t delta_ = 0;
  std::vector<std::size_t> delta_i_;
  FiltrationIndex conductor_;
  std::size_t big_c_ = 0;
};

/// Span closure of 1 and the generators under multiplication in the
/// truncated normalization. Fails when the box exceeds the input truncation.
template <class Field>
GermModel<Field> build_model(const GermPresentation& pres, const FiltrationIndex& box, Field field);

/// F^a intersected with the image of R.
template <class Field>
Subspace<Field> filtration_subspace(const GermModel<Field>& model, const FiltrationIndex& a);

template <class Field>
std::vector<BranchValue> branch_valuation(const GermModel<Field>& model,
                                          const typename GermModel<Field>::Vector& element);

/// Subalgebra generated by the i-th components of the generators.
GermPresentation branch_presentation(const GermPresentation& pres, std::size_t branch);

}  // namespace hilbzeta
