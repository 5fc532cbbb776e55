#pragma once

// Weyl group elements as integer matrices on the datum's character lattice, carried
// together with their lexicographically least reduced word.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/exact_linalg.hpp"
#include "wtn/number_theory.hpp"
#include "wtn/root_data.hpp"

namespace wtn {

/// Word in the simple reflections, 0-based letters.
using Word = std::vector<std::uint8_t>;

/// 1-based, comma separated; the empty word prints as "e".
inline std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(static_cast<int>(w[k]) + 1);
  }
  return s;
}

inline Word parse_word(const std::string& text, int rank) {
  Word w;
  if (text.empty() || text == "e") return w;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("malformed word '" + text + "'");
    std::size_t used = 0;
    int letter = std::stoi(tok, &used);
    if (used != tok.size() || letter < 1 || letter > rank)
      throw std::invalid_argument("word letter '" + tok + "' outside 1.." + std::to_string(rank));
    w.push_back(static_cast<std::uint8_t>(letter - 1));
  }
  return w;
}

namespace detail {

// A column of a matrix on the root lattice is a root, hence all of one sign.
inline bool column_is_negative(const SmallMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, j) != 0) return m(i, j) < 0;
  return false;
}

// m <- m * s_i on the root lattice: column j picks up -<alpha_j, alpha_i^vee> times column i.
inline void right_multiply_reflection(SmallMatrix& m, const SmallMatrix& cartan, std::size_t i) {
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r) {
    const std::int64_t mi = m(r, i);
    if (mi == 0) continue;
    for (std::size_t j = 0; j < n; ++j) m(r, j) -= cartan(j, i) * mi;
  }
}

}  // namespace detail

/// Element of the Weyl group of a root datum.
class WeylElement {
 public:
  static WeylElement identity(DatumPtr datum) { return from_word(std::move(datum), {}); }
  static WeylElement simple(DatumPtr datum, int i) {
    if (i < 0 || i >= datum->rank) throw std::out_of_range("simple reflection index out of range");
    return from_word(std::move(datum), Word{static_cast<std::uint8_t>(i)});
  }

  /// Any word; the stored word is the lexicographically least reduced word of the product.
  static WeylElement from_word(DatumPtr datum, const Word& word) {
    const std::size_t n = static_cast<std::size_t>(datum->rank);
    for (auto letter : word)
      if (letter >= n) throw std::out_of_range("word letter outside the rank");
    // Matrix of w^{-1} on the root lattice.
    SmallMatrix inv = SmallMatrix::identity(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) detail::right_multiply_reflection(inv, datum->cartan, *it);
    return from_inverse_root_matrix(std::move(datum), std::move(inv));
  }

  const DatumPtr& datum() const noexcept { return datum_; }
  int rank() const noexcept { return datum_->rank; }
  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  /// Phi_w: action on the datum's character lattice (column j = image of basis vector j).
  const IntMatrix& matrix() const noexcept { return matrix_; }
  /// Action on the root lattice, simple-root coordinates.
  const SmallMatrix& root_matrix() const noexcept { return root_matrix_; }

  WeylElement inverse() const {
    Word rev(word_.rbegin(), word_.rend());
    return from_word(datum_, rev);
  }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    Word w = a.word_;
    w.insert(w.end(), b.word_.begin(), b.word_.end());
    return from_word(a.datum_, w);
  }

  WeylElement pow(unsigned k) const {
    Word w;
    for (unsigned i = 0; i < k; ++i) w.insert(w.end(), word_.begin(), word_.end());
    return from_word(datum_, w);
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.datum_->type == b.datum_->type && a.matrix_ == b.matrix_;
  }

 private:
  static WeylElement from_inverse_root_matrix(DatumPtr datum, SmallMatrix inv) {
    const std::size_t n = static_cast<std::size_t>(datum->rank);
    WeylElement w;
    // Greedy smallest left descent: s_i w < w iff w^{-1}(alpha_i) < 0.
    SmallMatrix q = inv;
    for (;;) {
      std::size_t i = 0;
      while (i < n && !detail::column_is_negative(q, i)) ++i;
      if (i == n) break;
      w.word_.push_back(static_cast<std::uint8_t>(i));
      detail::right_multiply_reflection(q, datum->cartan, i);
    }
    SmallMatrix root = SmallMatrix::identity(n);
    SmallMatrix lattice = SmallMatrix::identity(n);
    for (auto letter : w.word_) {
      root = root * datum->root_reflections[letter];
      lattice = lattice * datum->reflections[letter];
    }
    w.root_matrix_ = std::move(root);
    w.matrix_ = to_int_matrix(lattice);
    w.datum_ = std::move(datum);
    return w;
  }

  WeylElement() = default;

  DatumPtr datum_;
  Word word_;
  IntMatrix matrix_;
  SmallMatrix root_matrix_;
};

/// Same Weyl group element realised on another datum of the same type.
inline WeylElement transport(const WeylElement& w, DatumPtr other) {
  if (!(other->type == w.datum()->type)) throw std::invalid_argument("transport: root system type mismatch");
  return WeylElement::from_word(std::move(other), w.word());
}

inline int order(const WeylElement& w) {
  const SmallMatrix& m = w.root_matrix();
  SmallMatrix p = m;
  int d = 1;
  while (!p.is_identity()) {
    p = p * m;
    ++d;
  }
  return d;
}

/// Dimension of the fixed subspace of w on the rational character space.
inline int sigma(const WeylElement& w) {
  const auto n = static_cast<std::size_t>(w.rank());
  return w.rank() - static_cast<int>(rank(w.matrix() - IntMatrix::identity(n)));
}

inline bool is_elliptic(const WeylElement& w) { return sigma(w) == 0; }

/// Minimal number of reflections with product w; equals r - sigma(w).
inline int reflection_length(const WeylElement& w) { return w.rank() - sigma(w); }

inline bool is_reflection(const WeylElement& w) {
  return sigma(w) == w.rank() - 1 && w.pow(2).length() == 0;
}

/// Product s_1 s_2 ... s_r of all simple reflections in Bourbaki order.
inline WeylElement coxeter_element(const DatumPtr& datum) {
  Word w;
  for (int i = 0; i < datum->rank; ++i) w.push_back(static_cast<std::uint8_t>(i));
  return WeylElement::from_word(datum, w);
}

/// Number of Coxeter elements, |W| / h.
inline Integer count_coxeter(const RootDatum& datum) { return datum.group_order() / datum.coxeter_number; }

/// Coefficients a_0..a_r of prod_i (1 + (d_i - 1) t).
inline std::vector<Integer> solomon_coefficients(const RootDatum& datum) {
  std::vector<Integer> poly{1};
  for (int d : datum.degrees) {
    std::vector<Integer> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] += poly[k] * (d - 1);
    }
    poly = std::move(next);
  }
  return poly;
}

/// Conjugacy fingerprint: (order, sigma of each power, trace of each power on the root lattice).
struct ClassFingerprint {
  int order = 1;
  std::vector<int> power_sigmas;
  std::vector<std::int64_t> power_traces;
  friend auto operator<=>(const ClassFingerprint&, const ClassFingerprint&) = default;
};

inline ClassFingerprint class_fingerprint(const WeylElement& w) {
  ClassFingerprint f;
  f.order = order(w);
  const std::size_t n = static_cast<std::size_t>(w.rank());
  SmallMatrix p = SmallMatrix::identity(n);
  for (int k = 1; k <= f.order; ++k) {
    p = p * w.root_matrix();
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += p(i, i);
    f.power_traces.push_back(tr);
    f.power_sigmas.push_back(w.rank() - static_cast<int>(rank(to_int_matrix(p) - IntMatrix::identity(n))));
  }
  return f;
}

}  // namespace wtn
