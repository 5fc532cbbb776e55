#pragma once

// Elements of order k in the component N_w = n_w T of the torus normalizer.
//
// With d = ord(w), (n_w t)^d = n_w^d beta_w(t), where beta_w has matrix
// B_w = E + Phi_w + ... + Phi_w^{d-1} on characters. The kernel of beta_w has m(w)
// components, each a coset of the (r - sigma(w))-dimensional torus T(w), the image of
// alpha_w(t) = phi_w^{-1}(t) t^{-1} with matrix A_w = Phi_w^{-1} - E.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/exact_linalg.hpp"
#include "wtn/number_theory.hpp"
#include "wtn/root_data.hpp"
#include "wtn/tits_lift.hpp"
#include "wtn/weyl_group.hpp"

namespace wtn {

/// B_w = E + Phi_w + ... + Phi_w^{ord(w)-1}.
inline IntMatrix matrix_B(const WeylElement& w) {
  const auto n = static_cast<std::size_t>(w.rank());
  const int d = order(w);
  IntMatrix b = IntMatrix::zero(n, n);
  IntMatrix p = IntMatrix::identity(n);
  for (int k = 0; k < d; ++k) {
    b = b + p;
    p = p * w.matrix();
  }
  return b;
}

/// A_w = Phi_w^{-1} - E.
inline IntMatrix matrix_A(const WeylElement& w) {
  const auto n = static_cast<std::size_t>(w.rank());
  return w.inverse().matrix() - IntMatrix::identity(n);
}

/// m(w): the multiplicity of B_w.
inline Integer m_of(const WeylElement& w, FieldChar ch = {}) { return multiplicity(matrix_B(w), ch); }

/// Cycle type k_1 >= ... >= k_t >= 1 of a permutation.
class CycleType {
 public:
  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("cycle type must be non-empty");
    for (int k : parts_)
      if (k < 1) throw std::invalid_argument("cycle lengths must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const {
    int s = 0;
    for (int k : parts_) s += k;
    return s;
  }
  int t() const noexcept { return static_cast<int>(parts_.size()); }
  Integer order() const {
    Integer d = 1;
    for (int k : parts_) d = lcm(d, Integer(k));
    return d;
  }
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + "]";
  }

 private:
  std::vector<int> parts_;
};

/// d^{t-1} gcd(k_1..k_t) / (k_1 ... k_t) for a permutation of cycle type [k_1..k_t].
inline Integer m_typeA_closed(const CycleType& ct) {
  if (ct.n() < 2) throw std::invalid_argument("the closed formula needs n >= 2");
  const Integer d = ct.order();
  Integer g = 0;
  Integer prod = 1;
  for (int k : ct.parts()) {
    g = gcd(g, Integer(k));
    prod *= k;
  }
  const Integer num = ipow(d, static_cast<unsigned>(ct.t() - 1)) * g;
  if (num % prod != 0) throw std::logic_error("closed formula for m(w) is not an integer for " + ct.str());
  return num / prod;
}

/// Number of elements of order k in an r-dimensional torus: sum_{e | k} mu(k/e) e^r, and 0
/// when the characteristic divides k.
inline Integer nu(std::uint64_t k, unsigned r, FieldChar ch = {}) {
  if (k < 1) throw std::invalid_argument("nu: order must be positive");
  if (!ch.is_zero() && k % ch.value() == 0) return 0;
  Integer total = 0;
  for (auto e : divisors(k)) {
    const int mu = mobius(k / e);
    if (mu != 0) total += mu * ipow(Integer(e), r);
  }
  return total;
}

class NotElliptic : public std::invalid_argument {
 public:
  explicit NotElliptic(int sigma)
      : std::invalid_argument("tau(w) is finite only for elliptic w; here sigma(w) = " + std::to_string(sigma)),
        sigma(sigma) {}
  int sigma;
};

/// Number of fixed points of phi_w on T: the multiplicity of Phi_w - E (w elliptic).
inline Integer tau(const WeylElement& w, FieldChar ch = {}) {
  const int s = sigma(w);
  if (s != 0) throw NotElliptic(s);
  const auto n = static_cast<std::size_t>(w.rank());
  return multiplicity(w.matrix() - IntMatrix::identity(n), ch);
}

enum class CountCase { a, b, c_odd, c_even };

inline std::string to_string(CountCase c) {
  switch (c) {
    case CountCase::a: return "a";
    case CountCase::b: return "b";
    case CountCase::c_odd: return "c-odd";
    case CountCase::c_even: return "c-even";
  }
  return "?";
}

struct OrderCountReport {
  std::uint64_t k = 1;
  CountCase count_case = CountCase::a;
  std::optional<std::uint64_t> s;  // k / d(w) outside case a
  Integer num_components = 0;
  int component_dim = 0;  // r - sigma(w)
  Integer m_w = 1;
  int sigma_w = 0;
  int ord_w = 1;
  int d_w = 1;
  FieldChar characteristic;
  std::string note;
};

/// Components of D_k(w), the elements of order k in N_w.
inline OrderCountReport count_components(const WeylElement& w, std::uint64_t k, FieldChar ch = {}) {
  if (k < 1) throw std::invalid_argument("count_components: order must be positive");
  OrderCountReport rep;
  rep.k = k;
  rep.characteristic = ch;
  rep.sigma_w = sigma(w);
  rep.component_dim = w.rank() - rep.sigma_w;
  rep.m_w = m_of(w, ch);
  const LiftOrderReport lift = minimal_lift_order(w, ch);
  rep.ord_w = lift.ord_w;
  rep.d_w = lift.d_w;
  const auto d = static_cast<std::uint64_t>(rep.d_w);
  const auto sig = static_cast<unsigned>(rep.sigma_w);

  if (k % d != 0) {
    rep.count_case = CountCase::a;
    rep.num_components = 0;
    rep.note = "d(w) does not divide k";
    return rep;
  }
  const std::uint64_t s = k / d;
  rep.s = s;
  if (rep.d_w == rep.ord_w) {
    rep.count_case = CountCase::b;
    rep.num_components = rep.m_w * nu(s, sig, ch);
  } else if (s % 2 == 1) {
    rep.count_case = CountCase::c_odd;
    rep.num_components = rep.m_w * (nu(s, sig, ch) + nu(2 * s, sig, ch));
  } else {
    rep.count_case = CountCase::c_even;
    rep.num_components = rep.m_w * nu(2 * s, sig, ch);
  }
  if (!ch.is_zero() && k % ch.value() == 0)
    rep.note = "characteristic " + std::to_string(ch.value()) + " divides k; only torus elements of order prime to it contribute";
  return rep;
}

}  // namespace wtn
