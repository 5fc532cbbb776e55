#pragma once

// The extension of W by the 2-torsion T[2] of the torus generated by lifts n_i of the
// simple reflections with n_i^2 = alpha_i^vee(-1), n_i t n_i^{-1} = s_i(t) and the braid
// relations. T[2] is modelled as Y/2Y, Y the cocharacter lattice of the datum.
//
// An element t * n_w is stored as (t, w), where n_w is the product of the generator lifts
// along the lexicographically least reduced word of w.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/exact_linalg.hpp"
#include "wtn/number_theory.hpp"
#include "wtn/root_data.hpp"
#include "wtn/weyl_group.hpp"

namespace wtn {

using TorusMod2 = std::vector<std::uint8_t>;

namespace detail {

// y <- M y over Z/2.
inline TorusMod2 apply_mod2(const SmallMatrix& m, const TorusMod2& y) {
  TorusMod2 out(y.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < y.size(); ++j) acc += static_cast<unsigned>(m(i, j) & 1) * y[j];
    out[i] = static_cast<std::uint8_t>(acc & 1u);
  }
  return out;
}

inline SmallMatrix multiply_mod2(const SmallMatrix& a, const SmallMatrix& b) {
  SmallMatrix c = a * b;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) &= 1;
  return c;
}

// Action of w on Y/2Y (column convention), from its word.
inline SmallMatrix cocharacter_action_mod2(const RootDatum& datum, const Word& word) {
  SmallMatrix p = SmallMatrix::identity(static_cast<std::size_t>(datum.rank));
  for (auto letter : word) p = multiply_mod2(p, datum.coreflections_mod2[letter]);
  return p;
}

}  // namespace detail

/// t * n_w with t in Y/2Y.
class ExtendedElement {
 public:
  ExtendedElement(TorusMod2 torus, WeylElement weyl) : torus_(std::move(torus)), weyl_(std::move(weyl)) {
    if (torus_.size() != static_cast<std::size_t>(weyl_.rank())) throw std::invalid_argument("torus part has wrong rank");
    for (auto& c : torus_) c &= 1;
  }

  static ExtendedElement identity(const DatumPtr& datum) {
    return {TorusMod2(static_cast<std::size_t>(datum->rank), 0), WeylElement::identity(datum)};
  }
  /// The canonical lift n_w.
  static ExtendedElement lift(const WeylElement& w) { return {TorusMod2(static_cast<std::size_t>(w.rank()), 0), w}; }
  static ExtendedElement torus(const DatumPtr& datum, TorusMod2 t) { return {std::move(t), WeylElement::identity(datum)}; }

  const TorusMod2& torus_part() const noexcept { return torus_; }
  const WeylElement& weyl_part() const noexcept { return weyl_; }
  const DatumPtr& datum() const noexcept { return weyl_.datum(); }
  bool is_identity() const {
    for (auto c : torus_)
      if (c) return false;
    return weyl_.length() == 0;
  }

  friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) {
    return a.torus_ == b.torus_ && a.weyl_ == b.weyl_;
  }

 private:
  TorusMod2 torus_;
  WeylElement weyl_;
};

/// n_i, the lift of the i-th simple reflection (0-based).
inline ExtendedElement generator_lift(const DatumPtr& datum, int i) { return ExtendedElement::lift(WeylElement::simple(datum, i)); }

/// (t1 n_x)(t2 n_y) = t1 x(t2) n_x n_y; n_x n_y is rewritten letter by letter along the word
/// of y, and n_u n_i = u s_i(alpha_i^vee)(-1) n_{u s_i} whenever l(u s_i) < l(u).
inline ExtendedElement multiply(const ExtendedElement& a, const ExtendedElement& b) {
  const RootDatum& datum = *a.datum();
  if (a.datum() != b.datum() && !(datum.type == b.datum()->type && datum.isogeny == b.datum()->isogeny))
    throw std::invalid_argument("multiply: elements belong to different root data");
  const Word& xw = a.weyl_part().word();
  SmallMatrix py = detail::cocharacter_action_mod2(datum, xw);
  TorusMod2 t = a.torus_part();
  const TorusMod2 moved = detail::apply_mod2(py, b.torus_part());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] ^= moved[k];

  SmallMatrix root = a.weyl_part().root_matrix();
  for (auto letter : b.weyl_part().word()) {
    const bool descends = detail::column_is_negative(root, letter);
    detail::right_multiply_reflection(root, datum.cartan, letter);
    py = detail::multiply_mod2(py, datum.coreflections_mod2[letter]);
    if (descends) {
      const TorusMod2 corr = detail::apply_mod2(py, datum.coroot_mod2[letter]);
      for (std::size_t k = 0; k < t.size(); ++k) t[k] ^= corr[k];
    }
  }
  return {t, a.weyl_part() * b.weyl_part()};
}

inline ExtendedElement power(const ExtendedElement& x, unsigned k) {
  ExtendedElement acc = ExtendedElement::identity(x.datum());
  for (unsigned i = 0; i < k; ++i) acc = multiply(acc, x);
  return acc;
}

/// t_0 = n_w^{ord(w)}, an element of T[2].
inline TorusMod2 lift_power(const WeylElement& w) {
  const ExtendedElement p = power(ExtendedElement::lift(w), static_cast<unsigned>(order(w)));
  if (p.weyl_part().length() != 0) throw std::logic_error("lift_power: n_w^ord(w) left the torus");
  return p.torus_part();
}

struct LiftOrderReport {
  Word word;
  int ord_w = 1;
  int d_w = 1;
  bool t0_trivial = true;
  bool t0_in_image = true;
  FieldChar characteristic;
};

/// d(w) = ord(w) iff t_0 lies in the image S(w) of beta_w; in characteristic 2 the torus has
/// no 2-torsion and d(w) = ord(w).
inline LiftOrderReport minimal_lift_order(const WeylElement& w, FieldChar ch = {}) {
  LiftOrderReport rep;
  rep.word = w.word();
  rep.ord_w = order(w);
  rep.characteristic = ch;
  if (ch.value() == 2) {
    rep.d_w = rep.ord_w;
    return rep;
  }
  const TorusMod2 t0 = lift_power(w);
  std::vector<Integer> lambda(t0.begin(), t0.end());
  for (auto c : t0) rep.t0_trivial = rep.t0_trivial && c == 0;
  if (rep.t0_trivial) {
    rep.d_w = rep.ord_w;
    return rep;
  }
  const auto n = static_cast<std::size_t>(w.rank());
  IntMatrix b = IntMatrix::zero(n, n);
  IntMatrix p = IntMatrix::identity(n);
  for (int k = 0; k < rep.ord_w; ++k) {
    b = b + p;
    p = p * w.matrix();
  }
  rep.t0_in_image = torsion_membership(b, lambda, Integer(2));
  rep.d_w = rep.t0_in_image ? rep.ord_w : 2 * rep.ord_w;
  return rep;
}

}  // namespace wtn
