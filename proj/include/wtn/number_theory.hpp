#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wtn/matrix.hpp"

namespace wtn {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Characteristic of the ground field: 0 or a prime.
class FieldChar {
 public:
  constexpr FieldChar() = default;
  explicit FieldChar(unsigned value) : value_(value) {
    if (value != 0 && !is_prime(value))
      throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                  std::to_string(value));
  }
  constexpr unsigned value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }
  friend constexpr bool operator==(FieldChar, FieldChar) = default;

 private:
  unsigned value_ = 0;
};

/// Largest power of p dividing n (n != 0). For p = 0 this is 1 by convention.
inline Integer p_part(Integer n, unsigned p) {
  if (n == 0) throw std::invalid_argument("p_part of zero");
  if (n < 0) n = -n;
  Integer part = 1;
  if (p == 0) return part;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

/// n with every factor p removed; |n| in characteristic 0.
inline Integer p_prime_part(Integer n, FieldChar ch) {
  if (n < 0) n = -n;
  if (ch.is_zero() || n == 0) return n;
  return n / p_part(n, ch.value());
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) f.emplace_back(d, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0)");
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer ipow(Integer base, unsigned e) {
  Integer r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Integer gcd(Integer a, Integer b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

}  // namespace wtn
