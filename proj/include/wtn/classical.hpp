#pragma once

// Classical realisations: W(A_{n-1}) = S_n on e_1..e_n and W(B_n), W(C_n), W(D_n) as signed
// permutations. Used to build Weyl elements from cycle types and from the partitions that
// label elliptic classes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/root_data.hpp"
#include "wtn/weyl_group.hpp"

namespace wtn {

using Partition = std::vector<int>;

/// Signed permutation: image[i] = +-(j + 1) means e_i -> +-e_j.
using SignedPermutation = std::vector<int>;

/// Number of coordinates of the standard realisation (n + 1 for A_n).
inline int classical_dimension(const RootSystemType& t) {
  if (!t.is_classical()) throw std::invalid_argument(t.name() + " has no classical realisation");
  return t.family == Family::A ? t.rank + 1 : t.rank;
}

/// All partitions of n, parts in non-increasing order, reverse-lexicographic.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace detail {

inline std::vector<std::int64_t> classical_simple_root(const RootSystemType& t, int i) {
  const int dim = classical_dimension(t);
  const int n = t.rank;
  std::vector<std::int64_t> v(static_cast<std::size_t>(dim), 0);
  if (i < n - 1 || t.family == Family::A) {
    v[i] = 1;
    v[i + 1] = -1;
    return v;
  }
  switch (t.family) {
    case Family::B: v[n - 1] = 1; break;
    case Family::C: v[n - 1] = 2; break;
    case Family::D:
      v[n - 2] = 1;
      v[n - 1] = 1;
      break;
    default: break;
  }
  return v;
}

inline std::vector<std::int64_t> apply_signed(const SignedPermutation& p, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int img = p[i];
    const std::size_t j = static_cast<std::size_t>(std::abs(img) - 1);
    out[j] += (img > 0 ? 1 : -1) * v[i];
  }
  return out;
}

// p <- p * s_i, with s_i acting on the standard basis.
inline void right_multiply_classical(SignedPermutation& p, const RootSystemType& t, int i) {
  const int n = t.rank;
  if (i < n - 1 || t.family == Family::A) {
    std::swap(p[i], p[i + 1]);
  } else if (t.family == Family::D) {
    const int a = p[n - 2];
    const int b = p[n - 1];
    p[n - 2] = -b;
    p[n - 1] = -a;
  } else {
    p[n - 1] = -p[n - 1];
  }
}

inline bool is_negative_vector(const std::vector<std::int64_t>& v) {
  for (auto c : v)
    if (c != 0) return c < 0;
  return false;
}

}  // namespace detail

/// Weyl element from a signed permutation of the standard coordinates.
inline WeylElement from_signed_permutation(const DatumPtr& datum, SignedPermutation p) {
  const RootSystemType& t = datum->type;
  const int dim = classical_dimension(t);
  if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("signed permutation has wrong size");
  {
    std::vector<int> seen(static_cast<std::size_t>(dim), 0);
    int negatives = 0;
    for (int img : p) {
      if (img == 0 || std::abs(img) > dim || seen[std::abs(img) - 1]++) throw std::invalid_argument("not a signed permutation");
      if (img < 0) ++negatives;
    }
    if (t.family == Family::A && negatives) throw std::invalid_argument("type A elements are unsigned permutations");
    if (t.family == Family::D && negatives % 2) throw std::invalid_argument("W(D_n) elements flip an even number of signs");
  }
  // Peel right descents: w(alpha_i) < 0 iff l(w s_i) < l(w).
  Word reversed;
  for (;;) {
    int i = 0;
    for (; i < t.rank; ++i)
      if (detail::is_negative_vector(detail::apply_signed(p, detail::classical_simple_root(t, i)))) break;
    if (i == t.rank) break;
    reversed.push_back(static_cast<std::uint8_t>(i));
    detail::right_multiply_classical(p, t, i);
  }
  return WeylElement::from_word(datum, Word(reversed.rbegin(), reversed.rend()));
}

/// Permutation of 1..n given as disjoint cycles, e.g. {{1,2},{3,4,5}}; e_i -> e_{pi(i)}.
inline WeylElement from_cycles(const DatumPtr& datum, const std::vector<std::vector<int>>& cycles) {
  if (datum->type.family != Family::A) throw std::invalid_argument("cycle notation needs type A");
  const int n = datum->rank + 1;
  SignedPermutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<int> used(static_cast<std::size_t>(n), 0);
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int a = cyc[k];
      const int b = cyc[(k + 1) % cyc.size()];
      if (a < 1 || a > n || used[a - 1]++) throw std::invalid_argument("invalid cycle entry " + std::to_string(a));
      p[a - 1] = b;
    }
  return from_signed_permutation(datum, p);
}

/// Permutation with the given cycle type on consecutive blocks, e.g. [2,1] -> (12)(3).
inline WeylElement from_cycle_type(const DatumPtr& datum, const Partition& parts) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int k : parts) {
    if (k < 1) throw std::invalid_argument("cycle lengths must be positive");
    std::vector<int> cyc;
    for (int j = 0; j < k; ++j) cyc.push_back(next++);
    cycles.push_back(cyc);
  }
  if (next - 1 != datum->rank + 1) throw std::invalid_argument("cycle type must sum to rank + 1");
  return from_cycles(datum, cycles);
}

/// Product of negative cycles on consecutive blocks: e_a -> e_{a+1} -> ... -> e_{a+k-1} -> -e_a.
/// These represent the elliptic classes of W(B_n), W(C_n) and W(D_n).
inline WeylElement from_negative_cycles(const DatumPtr& datum, const Partition& parts) {
  const int n = datum->rank;
  SignedPermutation p(static_cast<std::size_t>(n));
  int start = 0;
  for (int k : parts) {
    if (k < 1) throw std::invalid_argument("cycle lengths must be positive");
    for (int j = 0; j < k; ++j) {
      const int src = start + j;
      p[src] = j + 1 < k ? src + 2 : -(start + 1);
    }
    start += k;
  }
  if (start != n) throw std::invalid_argument("partition must sum to the rank");
  return from_signed_permutation(datum, p);
}

/// Size of the conjugacy class of a product of negative cycles of the given lengths in
/// W(B_n); the class lies in W(D_n) (without splitting) when the number of parts is even.
inline Integer negative_cycle_class_size(const Partition& parts) {
  int n = 0;
  std::vector<int> mult;
  for (int k : parts) {
    n += k;
    if (static_cast<int>(mult.size()) <= k) mult.resize(static_cast<std::size_t>(k) + 1, 0);
    ++mult[static_cast<std::size_t>(k)];
  }
  Integer centralizer = 1;
  for (std::size_t k = 1; k < mult.size(); ++k)
    centralizer *= ipow(Integer(2 * static_cast<int>(k)), static_cast<unsigned>(mult[k])) * factorial(static_cast<unsigned>(mult[k]));
  return ipow(Integer(2), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n)) / centralizer;
}

}  // namespace wtn
