#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hilbzeta/field.hpp"

namespace hilbzeta {

/// A linear subspace of F^n held as a reduced row echelon basis. Rows are
/// sorted by pivot column and every pivot column is zero in all other rows,
/// so two subspaces are equal iff their row lists are equal.
template <class Field>
class Subspace {
 public:
  using Elem = typename Field::Elem;
  using Vector = std::vector<Elem>;

  Subspace(Field field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  Vector zero_vector() const { return Vector(ambient_, field_.zero()); }

  Vector unit_vector(std::size_t j) const {
    Vector v = zero_vector();
    v[j] = field_.one();
    return v;
  }

  void reduce(Vector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem f = v[pivots_[r]];
      if (field_.is_zero(f)) continue;
      axpy(v, field_.neg(f), rows_[r]);
    }
  }

  bool contains(Vector v) const {
    reduce(v);
    return is_zero_vector(v);
  }

  bool contains(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vector& r) { return contains(r); });
  }

  /// Adds v to the span; returns whether the dimension grew.
  bool insert(Vector v) {
    reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && field_.is_zero(v[p])) ++p;
    if (p == ambient_) return false;
    const Elem scale = field_.inv(v[p]);
    for (std::size_t j = p; j < ambient_; ++j) v[j] = field_.mul(v[j], scale);
    for (auto& row : rows_) {
      const Elem f = row[p];
      if (!field_.is_zero(f)) axpy(row, field_.neg(f), v);
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
  }

  bool is_zero_vector(const Vector& v) const {
    return std::all_of(v.begin(), v.end(), [&](const Elem& e) { return field_.is_zero(e); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  // v += f * w
  void axpy(Vector& v, const Elem& f, const Vector& w) const {
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!field_.is_zero(w[j])) v[j] = field_.add(v[j], field_.mul(f, w[j]));
  }

  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// The part of `s` supported on coordinates j with allowed[j] true.
template <class Field>
Subspace<Field> intersect_with_support(const Subspace<Field>& s, const std::vector<bool>& allowed) {
  using Vector = typename Subspace<Field>::Vector;
  const std::size_t n = s.ambient_dim();
  // Column order with forbidden coordinates first; echelon rows whose pivot
  // lands in the allowed block vanish on every forbidden coordinate.
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    if (!allowed[j]) order.push_back(j);
  const std::size_t forbidden = order.size();
  for (std::size_t j = 0; j < n; ++j)
    if (allowed[j]) order.push_back(j);

  Subspace<Field> permuted(s.field(), n);
  for (const auto& row : s.rows()) {
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = row[order[k]];
    permuted.insert(std::move(v));
  }
  Subspace<Field> out(s.field(), n);
  for (std::size_t r = 0; r < permuted.dim(); ++r) {
    if (permuted.pivots()[r] < forbidden) continue;
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[order[k]] = permuted.rows()[r][k];
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace hilbzeta
