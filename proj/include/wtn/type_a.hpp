#pragma once

// Type A specifics: m(w) for permutations on both extreme lattices, and a brute-force
// count of the order-k locus in a component of the normalizer in PGL_n, working directly
// with monomial matrices over the N-th roots of unity.

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/classical.hpp"
#include "wtn/component_counter.hpp"
#include "wtn/number_theory.hpp"
#include "wtn/root_data.hpp"

namespace wtn {

struct TypeAMultiplicities {
  Integer root_lattice;    // adjoint torus, characters spanned by e_i - e_{i+1}
  Integer weight_lattice;  // simply connected torus, characters Z^n / Z(1,...,1)
  Integer closed_formula;
  bool lattices_differ() const { return root_lattice != weight_lattice; }
};

inline TypeAMultiplicities m_typeA_lattices(const CycleType& ct) {
  const RootSystemType type{Family::A, ct.n() - 1};
  const auto ad = build_datum(type, Isogeny::adjoint);
  const auto sc = build_datum(type, Isogeny::simply_connected);
  return {m_of(from_cycle_type(ad, ct.parts())), m_of(from_cycle_type(sc, ct.parts())), m_typeA_closed(ct)};
}

class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Permutation of {0..n-1}: perm[i] is the image of i.
using Permutation = std::vector<int>;

inline std::vector<std::vector<int>> permutation_cycles(const Permutation& perm) {
  const std::size_t n = perm.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      cyc.push_back(j);
    }
    cycles.push_back(cyc);
  }
  return cycles;
}

/// Counts the classes P t (P the permutation matrix, t = diag(zeta^{a_1}, ..., zeta^{a_n}),
/// a_n = 0 normalising the scalar) of exact order k in PGL_n, and divides by N^{n - #cycles},
/// the number of N-torsion points on each component. The division must be exact.
inline Integer oracle_count_pgl(int n, const Permutation& perm, std::uint64_t k, std::uint64_t N) {
  if (n < 2 || static_cast<int>(perm.size()) != n) throw std::invalid_argument("oracle_count_pgl: need a permutation of n >= 2 letters");
  {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i) throw std::invalid_argument("oracle_count_pgl: not a permutation");
  }
  if (k < 1 || N < 1) throw std::invalid_argument("oracle_count_pgl: k and N must be positive");

  const auto cycles = permutation_cycles(perm);
  std::uint64_t perm_order = 1;
  for (const auto& c : cycles) perm_order = std::lcm(perm_order, static_cast<std::uint64_t>(c.size()));
  const auto dim = static_cast<unsigned>(n - static_cast<int>(cycles.size()));

  std::uint64_t count = 0;
  if (k % perm_order == 0) {
    // (P t)^j e_i = zeta^{a_i + a_{pi(i)} + ... + a_{pi^{j-1}(i)}} e_{pi^j(i)}; for j = q * perm_order
    // the exponent on a cycle c is (j / |c|) * (sum of a over c).
    const std::uint64_t q_target = k / perm_order;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> sums(cycles.size());
    for (;;) {
      for (std::size_t c = 0; c < cycles.size(); ++c) {
        std::uint64_t s = 0;
        for (int i : cycles[c]) s += a[static_cast<std::size_t>(i)];
        sums[c] = s % N;
      }
      std::uint64_t q_min = 0;
      for (std::uint64_t q = 1; q <= q_target; ++q) {
        const std::uint64_t j = q * perm_order;
        const std::uint64_t first = (j / cycles[0].size()) % N * sums[0] % N;
        bool scalar = true;
        for (std::size_t c = 1; c < cycles.size() && scalar; ++c)
          scalar = (j / cycles[c].size()) % N * sums[c] % N == first;
        if (scalar) {
          q_min = q;
          break;
        }
      }
      if (q_min == q_target) ++count;
      // Next exponent vector with a_{n-1} = 0.
      std::size_t pos = 0;
      while (pos + 1 < static_cast<std::size_t>(n) && ++a[pos] == N) a[pos++] = 0;
      if (pos + 1 == static_cast<std::size_t>(n)) break;
    }
  }
  const Integer per_component = ipow(Integer(N), dim);
  if (Integer(count) % per_component != 0)
    throw OracleFailure("oracle_count_pgl: " + std::to_string(count) + " points do not split into components of " +
                        per_component.str() + " points (N = " + std::to_string(N) + " too small?)");
  return Integer(count) / per_component;
}

/// The Weyl element of PGL_n (adjoint A_{n-1}) for a 0-based permutation.
inline WeylElement pgl_element(const DatumPtr& adjoint_a, const Permutation& perm) {
  SignedPermutation p(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p[i] = perm[i] + 1;
  return from_signed_permutation(adjoint_a, p);
}

/// 2 k m(w), with m(w) from the Smith form of B_w on the adjoint lattice: every component
/// of D_k(w) then meets the N-torsion of the torus.
inline std::uint64_t oracle_modulus(const WeylElement& w, std::uint64_t k) {
  return 2 * k * static_cast<std::uint64_t>(m_of(w));
}

}  // namespace wtn
