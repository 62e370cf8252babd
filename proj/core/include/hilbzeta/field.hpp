#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "hilbzeta/error.hpp"
#include "hilbzeta/motive.hpp"

namespace hilbzeta {

using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) throw InvalidInput("not a supported prime: " + std::to_string(p));
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool is_zero(Elem a) const noexcept { return a == 0; }

  Elem from_int(const Int& v) const {
    Int r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw PreconditionError("inverse of zero in F_p");
    // a^(p-2)
    std::uint64_t base = a, result = 1;
    std::uint32_t e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Elem>(result);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Exact arithmetic in Q.
class RationalField {
 public:
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem from_int(const Int& v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw PreconditionError("inverse of zero in Q");
    return Elem(1) / a;
  }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hilbzeta
