#include "hilbzeta/motive.hpp"

#include <sstream>

namespace hilbzeta {

LPoly::LPoly(long long c) : coeffs_{Int(c)} { trim(); }

LPoly::LPoly(const Int& c) : coeffs_{c} { trim(); }

LPoly::LPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LPoly LPoly::L() { return monomial(Int(1), 1); }

LPoly LPoly::monomial(const Int& c, std::size_t k) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return LPoly(std::move(v));
}

void LPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t LPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return !c.is_zero(); }));
}

Int LPoly::eval(const Int& v) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

LPoly& LPoly::operator*=(const LPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

// Monomial |c| L^k without sign.
std::string lmonomial(const Int& mag, std::size_t k) {
  std::string s;
  if (k == 0) return mag.str();
  if (mag != 1) s = mag.str();
  s += "L";
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

std::string join_lterms(const std::vector<Int>& c, const char* plus, const char* minus) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const bool neg = c[k] < 0;
    const Int mag = neg ? Int(-c[k]) : c[k];
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? minus : plus;
    s += lmonomial(mag, k);
    first = false;
  }
  return s;
}

}  // namespace

std::string LPoly::to_string() const { return join_lterms(coeffs_, " + ", " - "); }

std::string LPoly::to_compact_string() const { return join_lterms(coeffs_, "+", "-"); }

std::ostream& operator<<(std::ostream& os, const LPoly& p) { return os << p.to_string(); }

Int lpoly_eval(const LPoly& p, const Int& v) { return p.eval(v); }

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LPoly lpoly_pow(const LPoly& base, unsigned e) {
  LPoly r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

LPoly gauss_binomial(unsigned n, unsigned k) {
  if (k > n) return LPoly();
  // row[j] = [m choose j], built by [m choose j] = [m-1 choose j-1] + L^j [m-1 choose j]
  std::vector<LPoly> row{LPoly(1)};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<LPoly> next(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
      LPoly v;
      if (j >= 1) v += row[j - 1];
      if (j < m) v += LPoly::monomial(Int(1), j) * row[j];
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

IntZeta specialize(const ZetaRat& z, const Int& v) {
  std::vector<Int> num;
  num.reserve(z.numerator().size());
  for (const auto& c : z.numerator()) num.push_back(c.eval(v));
  return IntZeta(std::move(num), z.den_t(), z.den_lambda(), v);
}

namespace {

struct CoeffText {
  bool negative = false;
  bool single = true;  // prints without parentheses
  bool unit = false;   // magnitude 1 and degree 0
  std::string body;    // magnitude text
};

CoeffText describe(const Int& c) {
  CoeffText t;
  t.negative = c < 0;
  const Int mag = t.negative ? Int(-c) : c;
  t.unit = mag == 1;
  t.body = mag.str();
  return t;
}

CoeffText describe(const LPoly& c) {
  CoeffText t;
  if (c.term_count() == 1) {
    const auto k = static_cast<std::size_t>(c.degree());
    const Int& lead = c.coeffs()[k];
    t.negative = lead < 0;
    const Int mag = t.negative ? Int(-lead) : lead;
    t.unit = (mag == 1 && k == 0);
    t.body = lmonomial(mag, k);
  } else {
    t.single = false;
    t.body = c.to_compact_string();
  }
  return t;
}

template <class Coeff>
std::string poly_in_t(const std::vector<Coeff>& p) {
  std::string s;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (is_zero(p[k])) continue;
    CoeffText c = describe(p[k]);
    if (first)
      s += c.negative ? "-" : "";
    else
      s += c.negative ? " - " : " + ";
    first = false;
    if (k == 0) {
      s += c.single ? c.body : "(" + c.body + ")";
      continue;
    }
    if (!c.single)
      s += "(" + c.body + ")";
    else if (!c.unit)
      s += c.body;
    s += "t";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return first ? "0" : s;
}

template <class Coeff>
std::size_t nonzero_terms(const std::vector<Coeff>& p) {
  return static_cast<std::size_t>(
      std::count_if(p.begin(), p.end(), [](const Coeff& c) { return !is_zero(c); }));
}

template <class Coeff>
std::string denominator_text(const BasicZeta<Coeff>& z, bool& two_factors) {
  std::string s;
  int factors = 0;
  if (z.den_t() > 0) {
    s += "(1-t)";
    if (z.den_t() > 1) s += "^" + std::to_string(z.den_t());
    ++factors;
  }
  if (z.den_lambda() > 0) {
    CoeffText lam = describe(z.lambda());
    std::string body = lam.single ? (lam.unit ? "" : lam.body) : "(" + lam.body + ")";
    s += std::string("(1") + (lam.negative ? "+" : "-") + body + "t)";
    if (z.den_lambda() > 1) s += "^" + std::to_string(z.den_lambda());
    ++factors;
  }
  two_factors = factors > 1;
  return s;
}

template <class Coeff>
std::string display(const BasicZeta<Coeff>& z) {
  const auto& n = z.numerator();
  if (z.den_t() == 0 && z.den_lambda() == 0) return poly_in_t(n);
  bool two = false;
  std::string den = denominator_text(z, two);
  if (two) den = "(" + den + ")";
  if (n.size() == 1) return poly_in_t(n) + "/" + den;
  if (n.front() == Coeff(1)) {
    auto p = z.excess_numerator();
    std::string ps = poly_in_t(p);
    if (nonzero_terms(p) > 1) ps = "(" + ps + ")";
    return "1 + " + ps + "/" + den;
  }
  return "(" + poly_in_t(n) + ")/" + den;
}

}  // namespace

std::string to_display(const ZetaRat& z) { return display(z); }
std::string to_display(const IntZeta& z) { return display(z); }
std::string to_display(const std::vector<LPoly>& p) { return poly_in_t(p); }
std::string to_display(const std::vector<Int>& p) { return poly_in_t(p); }

std::ostream& operator<<(std::ostream& os, const ZetaRat& z) { return os << to_display(z); }
std::ostream& operator<<(std::ostream& os, const IntZeta& z) { return os << to_display(z); }

}  // namespace hilbzeta
