#pragma once

// Root systems of types A-G, their Cartan matrices and degrees, and the two extreme
// character lattices of a semisimple group of the given type.
//
// Simple roots follow Bourbaki numbering:
//
//   A_n   1 - 2 - ... - n
//   B_n   1 - 2 - ... - (n-1) => n         (alpha_n short)
//   C_n   1 - 2 - ... - (n-1) <= n         (alpha_n long)
//   D_n   1 - 2 - ... - (n-2) < (n-1), n
//   E_n   1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//   F_4   1 - 2 => 3 - 4                   (alpha_1, alpha_2 long)
//   G_2   1 <= 2                           (alpha_1 short)
//
// Indices are 0-based in the API and 1-based whenever a word is shown to a user.
//
// cartan(i, j) = <alpha_i, alpha_j^vee>. Adjoint groups use the root lattice with the
// simple roots as basis; simply connected groups use the weight lattice with the
// fundamental weights as basis. In both cases the cocharacter lattice carries the dual
// basis (fundamental coweights, resp. simple coroots).

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/exact_linalg.hpp"
#include "wtn/matrix.hpp"
#include "wtn/number_theory.hpp"

namespace wtn {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

enum class Isogeny { adjoint, simply_connected };

inline std::string to_string(Isogeny iso) { return iso == Isogeny::adjoint ? "ad" : "sc"; }

inline Isogeny parse_isogeny(const std::string& s) {
  if (s == "ad" || s == "adjoint") return Isogeny::adjoint;
  if (s == "sc" || s == "simply_connected" || s == "simply-connected") return Isogeny::simply_connected;
  throw std::invalid_argument("unknown isogeny '" + s + "' (expected ad or sc)");
}

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
      default: break;
    }
  }
  throw std::invalid_argument("unknown root system family '" + s + "'");
}

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  RootSystemType() = default;
  RootSystemType(Family f, int r) : family(f), rank(r) { validate(); }

  void validate() const {
    bool ok = false;
    switch (family) {
      case Family::A: ok = rank >= 1; break;
      case Family::B:
      case Family::C: ok = rank >= 2; break;
      case Family::D: ok = rank >= 4; break;
      case Family::E: ok = rank >= 6 && rank <= 8; break;
      case Family::F: ok = rank == 4; break;
      case Family::G: ok = rank == 2; break;
    }
    if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " + std::string(1, static_cast<char>(family)));
  }

  bool is_classical() const noexcept {
    return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
  }

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

namespace detail {

// Symmetric Gram matrix of the simple roots, scaled to be integral.
inline SmallMatrix gram_matrix(const RootSystemType& t) {
  const int n = t.rank;
  SmallMatrix g(n, n);
  auto link = [&](int i, int j, std::int64_t v) {  // 1-based
    g(i - 1, j - 1) = v;
    g(j - 1, i - 1) = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 2;
      g(n - 1, n - 1) = 1;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 2;
      g(n - 1, n - 1) = 4;
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case Family::E:
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g(0, 0) = g(1, 1) = 4;
      g(2, 2) = g(3, 3) = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case Family::G:
      g(0, 0) = 2;
      g(1, 1) = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

}  // namespace detail

/// A root system together with the character lattice of a chosen isogeny type.
struct RootDatum {
  RootSystemType type;
  Isogeny isogeny = Isogeny::adjoint;
  int rank = 0;
  SmallMatrix cartan;                      // <alpha_i, alpha_j^vee>
  std::vector<int> degrees;                // ascending
  int coxeter_number = 0;
  std::size_t num_roots = 0;
  std::vector<std::vector<std::int64_t>> positive_roots;  // simple-root coordinates

  // Lattice data.
  SmallMatrix root_in_basis;               // column j: alpha_j in the lattice basis
  std::vector<SmallMatrix> reflections;    // simple reflections on the lattice
  std::vector<SmallMatrix> root_reflections;  // simple reflections on the root lattice
  std::vector<SmallMatrix> coreflections_mod2;  // transposes (action on cocharacters), mod 2
  std::vector<std::vector<std::uint8_t>> coroot_mod2;  // simple coroots, cocharacter coords mod 2

  Integer group_order() const {
    Integer n = 1;
    for (int d : degrees) n *= d;
    return n;
  }
  Integer elliptic_count() const {
    Integer n = 1;
    for (int d : degrees) n *= (d - 1);
    return n;
  }
  std::string name() const { return type.name() + (isogeny == Isogeny::adjoint ? "ad" : "sc"); }
};

using DatumPtr = std::shared_ptr<const RootDatum>;

inline SmallMatrix cartan_matrix(const RootSystemType& t) {
  const SmallMatrix g = detail::gram_matrix(t);
  const std::size_t n = g.rows();
  SmallMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = 2 * g(i, j) / g(j, j);
  return c;
}

namespace detail {

// Simple reflection s_i on simple-root coordinates: s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i.
inline SmallMatrix root_reflection(const SmallMatrix& cartan, std::size_t i) {
  const std::size_t n = cartan.rows();
  SmallMatrix s = SmallMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) s(i, j) -= cartan(j, i);
  return s;
}

// Simple reflection on fundamental-weight coordinates: s_i(omega_j) = omega_j - delta_ij alpha_i.
inline SmallMatrix weight_reflection(const SmallMatrix& cartan, std::size_t i) {
  const std::size_t n = cartan.rows();
  SmallMatrix s = SmallMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) s(k, i) -= cartan(i, k);
  return s;
}

inline std::vector<std::vector<std::int64_t>> close_positive_roots(const SmallMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto beta = queue[head];
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan(j, i);
      auto image = beta;
      image[i] -= pairing;
      bool positive = true;
      for (auto c : image) positive = positive && c >= 0;
      if (positive && seen.insert(image).second) queue.push_back(image);
    }
  }
  return queue;
}

// Exponents from the height distribution of the positive roots: the number of exponents
// that are >= k equals the number of positive roots of height k.
inline std::vector<int> degrees_from_heights(const std::vector<std::vector<std::int64_t>>& positive) {
  std::map<std::int64_t, int> per_height;
  for (const auto& beta : positive) {
    std::int64_t h = 0;
    for (auto c : beta) h += c;
    ++per_height[h];
  }
  std::vector<int> degrees;
  for (auto [height, count] : per_height) {
    auto next = per_height.find(height + 1);
    const int exactly = count - (next == per_height.end() ? 0 : next->second);
    for (int k = 0; k < exactly; ++k) degrees.push_back(static_cast<int>(height) + 1);
  }
  return degrees;
}

}  // namespace detail

inline DatumPtr build_datum(const RootSystemType& type, Isogeny isogeny) {
  type.validate();
  auto d = std::make_shared<RootDatum>();
  d->type = type;
  d->isogeny = isogeny;
  d->rank = type.rank;
  d->cartan = cartan_matrix(type);
  d->positive_roots = detail::close_positive_roots(d->cartan);
  d->num_roots = 2 * d->positive_roots.size();
  d->degrees = detail::degrees_from_heights(d->positive_roots);
  d->coxeter_number = static_cast<int>(d->num_roots / static_cast<std::size_t>(d->rank));

  const std::size_t n = static_cast<std::size_t>(d->rank);
  d->root_in_basis = isogeny == Isogeny::adjoint ? SmallMatrix::identity(n) : d->cartan.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    d->root_reflections.push_back(detail::root_reflection(d->cartan, i));
    d->reflections.push_back(isogeny == Isogeny::adjoint ? d->root_reflections.back()
                                                         : detail::weight_reflection(d->cartan, i));
    SmallMatrix co = d->reflections.back().transpose();
    for (auto i2 = 0u; i2 < n; ++i2)
      for (auto j2 = 0u; j2 < n; ++j2) co(i2, j2) = ((co(i2, j2) % 2) + 2) % 2;
    d->coreflections_mod2.push_back(co);

    // alpha_i^vee: coweight coordinates <alpha_j, alpha_i^vee> (adjoint), or e_i (simply connected).
    std::vector<std::uint8_t> coroot(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t c = isogeny == Isogeny::adjoint ? d->cartan(j, i) : (i == j ? 1 : 0);
      coroot[j] = static_cast<std::uint8_t>(((c % 2) + 2) % 2);
    }
    d->coroot_mod2.push_back(coroot);
  }
  return d;
}

inline IntMatrix simple_reflection(const RootDatum& datum, int i) {
  if (i < 0 || i >= datum.rank)
    throw std::out_of_range("simple reflection index " + std::to_string(i + 1) + " outside 1.." + std::to_string(datum.rank));
  return to_int_matrix(datum.reflections[static_cast<std::size_t>(i)]);
}

/// |det(Cartan)|, or its p'-part: the order of the centre of the simply connected group.
inline Integer center_order(const RootSystemType& type, FieldChar ch = {}) {
  return p_prime_part(determinant(to_int_matrix(cartan_matrix(type))), ch);
}

}  // namespace wtn
