#pragma once

// Exact arithmetic in Z[L] and for rational functions of t whose
// denominator is (1-t)^a (1-lambda t)^b.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hilbzeta/error.hpp"

namespace hilbzeta {

using Int = boost::multiprecision::cpp_int;

/// Integer polynomial in the Lefschetz class L. Coefficients are stored in
/// ascending degree with no trailing zero; the zero polynomial is empty.
class LPoly {
 public:
  LPoly() = default;
  LPoly(long long c);  // NOLINT(google-explicit-constructor)
  LPoly(const Int& c);  // NOLINT(google-explicit-constructor)
  explicit LPoly(std::vector<Int> coeffs);

  static LPoly L();
  static LPoly monomial(const Int& c, std::size_t k);

  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
  std::size_t term_count() const;

  Int eval(const Int& v) const;

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o);
  LPoly operator-() const;

  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(LPoly a, const LPoly& b) { return a *= b; }
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "L^2 + L - 2"
  std::string to_string() const;
  /// "L^2+L-2"
  std::string to_compact_string() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LPoly& p);

Int lpoly_eval(const LPoly& p, const Int& v);
Int binomial(unsigned n, unsigned k);
LPoly lpoly_pow(const LPoly& base, unsigned e);

/// Gaussian binomial coefficient [n choose k] in L; zero when k > n.
LPoly gauss_binomial(unsigned n, unsigned k);

inline bool is_zero(const Int& x) { return x.is_zero(); }
inline bool is_zero(const LPoly& p) { return p.is_zero(); }

template <class Coeff>
struct ZetaTraits;

template <>
struct ZetaTraits<LPoly> {
  static LPoly default_lambda() { return LPoly::L(); }
  static std::string lambda_name(const LPoly&) { return "L"; }
};

template <>
struct ZetaTraits<Int> {
  static Int default_lambda() { return Int(1); }
  static std::string lambda_name(const Int& v) { return v.str(); }
};

template <class Coeff>
struct PowerSeries {
  std::vector<Coeff> coeffs;
  std::size_t order() const noexcept { return coeffs.size(); }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

namespace detail {

template <class Coeff>
void trim(std::vector<Coeff>& v) {
  while (!v.empty() && is_zero(v.back())) v.pop_back();
}

template <class Coeff>
std::vector<Coeff> poly_mul(const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Coeff> out(a.size() + b.size() - 1, Coeff(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

template <class Coeff>
std::vector<Coeff> poly_add(std::vector<Coeff> a, const std::vector<Coeff>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Coeff(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

// (1 - lambda t)^e
template <class Coeff>
std::vector<Coeff> linear_power(const Coeff& lambda, unsigned e) {
  std::vector<Coeff> out{Coeff(1)};
  const std::vector<Coeff> factor{Coeff(1), Coeff(0) - lambda};
  for (unsigned i = 0; i < e; ++i) out = poly_mul(out, factor);
  return out;
}

// Exact division by (1 - lambda t); false when there is a remainder.
template <class Coeff>
bool divide_linear(std::vector<Coeff>& num, const Coeff& lambda) {
  if (num.empty()) return true;
  std::vector<Coeff> q(num.size(), Coeff(0));
  Coeff carry(0);
  for (std::size_t k = 0; k < num.size(); ++k) {
    carry = num[k] + lambda * carry;
    q[k] = carry;
  }
  if (!is_zero(q.back())) return false;
  q.pop_back();
  trim(q);
  num = std::move(q);
  return true;
}

}  // namespace detail

/// Rational function N(t) / ((1-t)^den_t (1-lambda t)^den_lambda), kept in
/// canonical form: no factor (1-t) or (1-lambda t) of the denominator
/// divides the numerator.
template <class Coeff>
class BasicZeta {
 public:
  BasicZeta() : numerator_{Coeff(1)}, lambda_(ZetaTraits<Coeff>::default_lambda()) {}

  explicit BasicZeta(std::vector<Coeff> numerator, unsigned den_t = 0, unsigned den_lambda = 0,
                     Coeff lambda = ZetaTraits<Coeff>::default_lambda())
      : numerator_(std::move(numerator)),
        den_t_(den_t),
        den_lambda_(den_lambda),
        lambda_(std::move(lambda)) {
    canonicalize();
  }

  const std::vector<Coeff>& numerator() const noexcept { return numerator_; }
  unsigned den_t() const noexcept { return den_t_; }
  unsigned den_lambda() const noexcept { return den_lambda_; }
  const Coeff& lambda() const noexcept { return lambda_; }

  std::vector<Coeff> denominator() const {
    return detail::poly_mul(detail::linear_power(Coeff(1), den_t_),
                            detail::linear_power(lambda_, den_lambda_));
  }

  /// P with Z = 1 + P / D, where D is the denominator.
  std::vector<Coeff> excess_numerator() const {
    auto d = denominator();
    for (auto& c : d) c = Coeff(0) - c;
    return detail::poly_add(numerator_, d);
  }

  Coeff constant_term() const { return numerator_.empty() ? Coeff(0) : numerator_.front(); }

  BasicZeta& operator*=(const BasicZeta& o) {
    check_lambda(o);
    if (o.den_lambda_ > 0) lambda_ = o.lambda_;
    numerator_ = detail::poly_mul(numerator_, o.numerator_);
    den_t_ += o.den_t_;
    den_lambda_ += o.den_lambda_;
    canonicalize();
    return *this;
  }

  BasicZeta& operator+=(const BasicZeta& o) {
    check_lambda(o);
    if (o.den_lambda_ > 0) lambda_ = o.lambda_;
    const unsigned t = std::max(den_t_, o.den_t_);
    const unsigned l = std::max(den_lambda_, o.den_lambda_);
    auto lift = [&](const BasicZeta& z) {
      auto n = detail::poly_mul(z.numerator_, detail::linear_power(Coeff(1), t - z.den_t_));
      return detail::poly_mul(n, detail::linear_power(lambda_, l - z.den_lambda_));
    };
    numerator_ = detail::poly_add(lift(*this), lift(o));
    den_t_ = t;
    den_lambda_ = l;
    canonicalize();
    return *this;
  }

  friend BasicZeta operator*(BasicZeta a, const BasicZeta& b) { return a *= b; }
  friend BasicZeta operator+(BasicZeta a, const BasicZeta& b) { return a += b; }

  friend bool operator==(const BasicZeta& a, const BasicZeta& b) {
    if (a.numerator_ != b.numerator_ || a.den_t_ != b.den_t_ || a.den_lambda_ != b.den_lambda_)
      return false;
    return a.den_lambda_ == 0 || a.lambda_ == b.lambda_;
  }

 private:
  void check_lambda(const BasicZeta& o) const {
    if (den_lambda_ > 0 && o.den_lambda_ > 0 && !(lambda_ == o.lambda_))
      throw PreconditionError("zeta functions with different (1 - lambda t) factors");
  }

  void canonicalize() {
    detail::trim(numerator_);
    if (numerator_.empty()) {
      den_t_ = den_lambda_ = 0;
      return;
    }
    if (lambda_ == Coeff(1)) {
      den_t_ += den_lambda_;
      den_lambda_ = 0;
    } else if (is_zero(lambda_)) {
      den_lambda_ = 0;
    }
    while (den_t_ > 0 && detail::divide_linear(numerator_, Coeff(1))) --den_t_;
    while (den_lambda_ > 0 && detail::divide_linear(numerator_, lambda_)) --den_lambda_;
  }

  std::vector<Coeff> numerator_;
  unsigned den_t_ = 0;
  unsigned den_lambda_ = 0;
  Coeff lambda_;
};

using ZetaRat = BasicZeta<LPoly>;
using IntZeta = BasicZeta<Int>;

/// Maclaurin coefficients t^0 .. t^(order-1).
template <class Coeff>
PowerSeries<Coeff> series_expand(const BasicZeta<Coeff>& z, std::size_t order) {
  if (order == 0) throw PreconditionError("series order must be at least 1");
  std::vector<Coeff> c(order, Coeff(0));
  for (std::size_t k = 0; k < std::min(order, z.numerator().size()); ++k) c[k] = z.numerator()[k];
  for (unsigned r = 0; r < z.den_t(); ++r)
    for (std::size_t k = 1; k < order; ++k) c[k] += c[k - 1];
  for (unsigned r = 0; r < z.den_lambda(); ++r)
    for (std::size_t k = 1; k < order; ++k) c[k] += z.lambda() * c[k - 1];
  return PowerSeries<Coeff>{std::move(c)};
}

/// Substitute L = v. The result has denominator (1-t)^a (1-v t)^b.
IntZeta specialize(const ZetaRat& z, const Int& v);

/// "1 + (t + (L-1)t^2)/(1-t)^2"
std::string to_display(const ZetaRat& z);
std::string to_display(const IntZeta& z);
std::string to_display(const std::vector<LPoly>& poly_in_t);
std::string to_display(const std::vector<Int>& poly_in_t);

std::ostream& operator<<(std::ostream& os, const ZetaRat& z);
std::ostream& operator<<(std::ostream& os, const IntZeta& z);

}  // namespace hilbzeta
