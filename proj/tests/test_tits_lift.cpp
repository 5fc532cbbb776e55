#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "wtn/classical.hpp"
#include "wtn/enumeration.hpp"
#include "wtn/tits_lift.hpp"
#include "monomial.hpp"

namespace {

using namespace wtn;
using namespace wtn::testing;

// Signs of diag(+-1) in SL_n from a cocharacter mod 2 in simple-coroot coordinates.
std::vector<int> torus_signs(const TorusMod2& y) {
  const std::size_t n = y.size() + 1;
  std::vector<int> s(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int a = (j > 0 ? y[j - 1] : 0) + (j < y.size() ? y[j] : 0);
    s[j] = a % 2 ? -1 : 1;
  }
  return s;
}

TEST(TitsLift, GeneratorRelations) {
  for (RootSystemType t : {RootSystemType{Family::B, 3}, {Family::C, 4}, {Family::G, 2}, {Family::F, 4}, {Family::E, 6}})
    for (Isogeny iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
      const auto d = build_datum(t, iso);
      for (int i = 0; i < t.rank; ++i) {
        const auto n = generator_lift(d, i);
        const auto sq = multiply(n, n);
        EXPECT_TRUE(sq.weyl_part() == WeylElement::identity(d));
        EXPECT_EQ(sq.torus_part(), d->coroot_mod2[static_cast<std::size_t>(i)]) << d->name();
        EXPECT_TRUE(power(n, 4).is_identity());
      }
    }
}

TEST(TitsLift, MultiplicationMatchesSLnMatrices) {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 5; ++n) {
    const auto sc = build_datum({Family::A, n - 1}, Isogeny::simply_connected);
    const long R = 2;
    std::uniform_int_distribution<int> letter(0, n - 2), len(0, 10);
    for (int trial = 0; trial < 60; ++trial) {
      auto random_element = [&] {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& l : w) l = static_cast<std::uint8_t>(letter(rng));
        TorusMod2 y(static_cast<std::size_t>(n - 1));
        for (auto& c : y) c = static_cast<std::uint8_t>(rng() & 1u);
        return ExtendedElement(y, WeylElement::from_word(sc, w));
      };
      auto to_matrix = [&](const ExtendedElement& x) {
        Monomial t = monomial_identity(n, R);
        const auto s = torus_signs(x.torus_part());
        for (std::size_t j = 0; j < s.size(); ++j) t.exps[j] = s[j] < 0 ? 1 : 0;
        return t * sl_lift(x.weyl_part(), R);
      };
      const auto a = random_element(), b = random_element();
      const Monomial want = to_matrix(a) * to_matrix(b);
      const Monomial got = to_matrix(multiply(a, b));
      EXPECT_EQ(got.perm, want.perm);
      EXPECT_EQ(got.exps, want.exps) << "SL_" << n;
    }
  }
}

TEST(TitsLift, LiftPowerMatchesSLnMatrices) {
  for (int n = 2; n <= 5; ++n) {
    const auto sc = build_datum({Family::A, n - 1}, Isogeny::simply_connected);
    const WeylEnumeration w(sc);
    for (std::size_t x = 0; x < w.size(); ++x) {
      const WeylElement e = w.element(static_cast<WeylEnumeration::Index>(x));
      const Monomial p = monomial_power(sl_lift(e, 2), order(e));
      const auto s = torus_signs(lift_power(e));
      for (std::size_t j = 0; j < s.size(); ++j) {
        EXPECT_EQ(p.perm[j], static_cast<int>(j));
        EXPECT_EQ(p.exps[j], s[j] < 0 ? 1 : 0) << format_word(e.word());
      }
    }
  }
}

// Smallest order of a lift of a permutation to SL_n (or PGL_n), by searching t * P over
// torus elements with exponents in Z/M.
int brute_lift_order_typeA(const std::vector<int>& perm, int ord, bool adjoint) {
  const int n = static_cast<int>(perm.size());
  const long M = 2L * ord * n;
  const long R = 2 * M;  // signs need zeta_{2M}
  Monomial p = monomial_identity(n, R);
  p.perm = perm;
  // Make det(P) = 1 for SL_n by one sign.
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  int parity = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    parity += len - 1;
  }
  if (!adjoint && parity % 2) p.exps[0] = M;
  std::vector<long> a(static_cast<std::size_t>(n), 0);
  for (;;) {
    long sum = 0;
    for (int i = 0; i + 1 < n; ++i) sum += a[static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(n) - 1] = adjoint ? 0 : ((-sum) % M + M) % M;
    Monomial t = monomial_identity(n, R);
    for (std::size_t i = 0; i < a.size(); ++i) t.exps[i] = 2 * a[i];
    const Monomial q = monomial_power(t * p, ord);
    bool identity = true;
    for (int j = 0; j < n; ++j) identity = identity && q.perm[static_cast<std::size_t>(j)] == j;
    for (int j = 0; j < n && identity; ++j)
      identity = adjoint ? q.exps[static_cast<std::size_t>(j)] == q.exps[0] : q.exps[static_cast<std::size_t>(j)] == 0;
    if (identity) return ord;
    int k = 0;
    while (k < n - 1 && ++a[static_cast<std::size_t>(k)] == M) a[static_cast<std::size_t>(k++)] = 0;
    if (k == n - 1) return 2 * ord;
  }
}

TEST(MinimalLiftOrder, TypeAMatchesTorusSearch) {
  for (int n = 2; n <= 4; ++n)
    for (Isogeny iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
      const auto d = build_datum({Family::A, n - 1}, iso);
      const WeylEnumeration w(d);
      for (std::size_t x = 0; x < w.size(); ++x) {
        const WeylElement e = w.element(static_cast<WeylEnumeration::Index>(x));
        const int ord = order(e);
        EXPECT_EQ(minimal_lift_order(e).d_w, brute_lift_order_typeA(weyl_to_permutation(e), ord, iso == Isogeny::adjoint))
            << d->name() << " w = " << format_word(e.word());
      }
    }
}

// ---------------------------------------------------------------------------
// Clifford algebra Cl(N) over Z with e_i^2 = 1: blades are bitmasks.

using Multivector = std::map<unsigned, Integer>;

int blade_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned x = a >> 1; x; x >>= 1) swaps += __builtin_popcount(x & b);
  return swaps % 2 ? -1 : 1;
}

Multivector clifford_mul(const Multivector& a, const Multivector& b) {
  Multivector c;
  for (const auto& [ba, ca] : a)
    for (const auto& [bb, cb] : b) c[ba ^ bb] += blade_sign(ba, bb) * ca * cb;
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

// Signed permutation of R^N as g(e_j) = sign[j] e_{perm[j]}, written as a product of
// reflections in e_a - e_b and e_a; returns the product of those vectors.
Multivector pin_lift(std::vector<int> perm, std::vector<int> sign) {
  const std::size_t N = perm.size();
  std::vector<Multivector> vectors;
  // Left-multiply by reflections until g is the identity; g = r_1 ... r_m.
  for (std::size_t j = 0; j < N; ++j) {
    if (perm[j] != static_cast<int>(j)) {
      const auto b = static_cast<std::size_t>(perm[j]);
      vectors.push_back({{1u << j, 1}, {1u << b, -1}});
      // swap coordinates j and b in the image
      for (std::size_t k = 0; k < N; ++k) {
        if (perm[k] == static_cast<int>(j))
          perm[k] = static_cast<int>(b);
        else if (perm[k] == static_cast<int>(b))
          perm[k] = static_cast<int>(j);
      }
    }
    if (sign[j] < 0) {
      vectors.push_back({{1u << j, 1}});
      sign[j] = 1;
    }
  }
  Multivector x{{0u, 1}};
  for (const auto& v : vectors) x = clifford_mul(x, v);
  return x;
}

// Embedding of a signed permutation of the torus coordinates into SO(N): coordinate i
// becomes the plane (2i, 2i+1), conjugated when the sign is negative.
void orthogonal_signed_permutation(const SignedPermutation& p, std::size_t N, std::vector<int>& perm, std::vector<int>& sign) {
  perm.assign(N, 0);
  sign.assign(N, 1);
  std::iota(perm.begin(), perm.end(), 0);
  int negatives = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto j = static_cast<std::size_t>(std::abs(p[i]) - 1);
    perm[2 * i] = static_cast<int>(2 * j);
    perm[2 * i + 1] = static_cast<int>(2 * j + 1);
    if (p[i] < 0) {
      sign[2 * i + 1] = -1;
      ++negatives;
    }
  }
  if (N % 2) sign[N - 1] = negatives % 2 ? -1 : 1;
}

SignedPermutation negative_cycles(const Partition& parts) {
  SignedPermutation p;
  int start = 0;
  for (int k : parts) {
    for (int j = 0; j < k; ++j) p.push_back(j + 1 < k ? start + j + 2 : -(start + 1));
    start += k;
  }
  return p;
}

// Minimal lift order of an elliptic signed permutation in Spin(N): every lift has the same
// ord-th power, which is +-1 up to a positive scalar.
int spin_lift_order(const SignedPermutation& p, std::size_t N, int ord) {
  std::vector<int> perm, sign;
  orthogonal_signed_permutation(p, N, perm, sign);
  const Multivector x = pin_lift(perm, sign);
  Multivector pw{{0u, 1}};
  for (int k = 0; k < ord; ++k) pw = clifford_mul(pw, x);
  EXPECT_EQ(pw.size(), 1u);
  EXPECT_EQ(pw.begin()->first, 0u);
  return pw.begin()->second > 0 ? ord : 2 * ord;
}

// Minimal lift order of an elliptic signed permutation in Sp(2n) or PSp(2n).
int symplectic_lift_order(const SignedPermutation& p, int ord, bool adjoint) {
  const std::size_t n = p.size();
  // Basis e_0..e_{n-1}, f_0..f_{n-1}; e_i -> e_j, f_i -> f_j, or e_i -> f_j, f_i -> -e_j.
  SmallMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(std::abs(p[i]) - 1);
    if (p[i] > 0) {
      m(j, i) = 1;
      m(n + j, n + i) = 1;
    } else {
      m(n + j, i) = 1;
      m(j, n + i) = -1;
    }
  }
  SmallMatrix q = SmallMatrix::identity(2 * n);
  for (int k = 0; k < ord; ++k) q = q * m;
  if (q.is_identity()) return ord;
  if (adjoint && (q + SmallMatrix::identity(2 * n)).is_zero()) return ord;
  return 2 * ord;
}

TEST(MinimalLiftOrder, SpinGroupsMatchCliffordLifts) {
  for (Family f : {Family::B, Family::D})
    for (int n = f == Family::B ? 2 : 4; n <= 5; ++n) {
      const auto sc = build_datum({f, n}, Isogeny::simply_connected);
      const std::size_t N = f == Family::B ? static_cast<std::size_t>(2 * n + 1) : static_cast<std::size_t>(2 * n);
      for (const auto& parts : partitions(n)) {
        if (f == Family::D && parts.size() % 2) continue;
        const WeylElement w = from_negative_cycles(sc, parts);
        const int ord = order(w);
        EXPECT_EQ(minimal_lift_order(w).d_w, spin_lift_order(negative_cycles(parts), N, ord))
            << sc->name() << " negative cycles " << ::testing::PrintToString(parts);
      }
    }
}

// Spin(9) and F4 share a maximal torus, so elliptic elements of W(B4) in W(F4) have the
// same minimal lift order in both normalizers.
TEST(MinimalLiftOrder, F4MatchesSpin9CliffordLifts) {
  // Simple roots of F4 in 2 e_i coordinates: e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2.
  SmallMatrix s(4, 4);
  const std::int64_t cols[4][4] = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) s(i, j) = cols[j][i];
  const auto f4 = build_datum({Family::F, 4}, Isogeny::simply_connected);
  const WeylEnumeration w(f4);
  std::vector<int> order_four_lifts;
  for (const auto& parts : partitions(4)) {
    const SignedPermutation p = negative_cycles(parts);
    SmallMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(static_cast<std::size_t>(std::abs(p[i]) - 1), i) = p[i] > 0 ? 1 : -1;
    const SmallMatrix target = m * s;
    std::size_t found = 0;
    for (std::size_t x = 0; x < w.size(); ++x) {
      const WeylElement e = w.element(static_cast<WeylEnumeration::Index>(x));
      if (!(s * e.root_matrix() == target)) continue;
      ++found;
      const int ord = order(e);
      const int d = minimal_lift_order(e).d_w;
      EXPECT_TRUE(is_elliptic(e));
      EXPECT_EQ(d, spin_lift_order(p, 9, ord)) << "negative cycles " << ::testing::PrintToString(parts);
      if (ord == 4) order_four_lifts.push_back(d);
    }
    EXPECT_EQ(found, 1u) << ::testing::PrintToString(parts);
  }
  std::sort(order_four_lifts.begin(), order_four_lifts.end());
  EXPECT_EQ(order_four_lifts, (std::vector<int>{4, 8}));
}

TEST(MinimalLiftOrder, SymplecticGroupsMatchMatrixLifts) {
  for (int n = 2; n <= 6; ++n)
    for (Isogeny iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
      const auto d = build_datum({Family::C, n}, iso);
      for (const auto& parts : partitions(n)) {
        const WeylElement w = from_negative_cycles(d, parts);
        const int ord = order(w);
        EXPECT_EQ(minimal_lift_order(w).d_w, symplectic_lift_order(negative_cycles(parts), ord, iso == Isogeny::adjoint))
            << d->name() << " negative cycles " << ::testing::PrintToString(parts);
      }
    }
}

TEST(MinimalLiftOrder, ConjugationInvariantAndBounded) {
  for (RootSystemType t : {RootSystemType{Family::B, 3}, {Family::C, 3}, {Family::G, 2}, {Family::D, 4}})
    for (Isogeny iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
      const auto d = build_datum(t, iso);
      const WeylEnumeration w(d);
      std::vector<int> by_class(w.classes().size(), 0);
      for (std::size_t x = 0; x < w.size(); ++x) {
        const auto ix = static_cast<WeylEnumeration::Index>(x);
        const auto rep = minimal_lift_order(w.element(ix));
        EXPECT_TRUE(rep.d_w == rep.ord_w || rep.d_w == 2 * rep.ord_w);
        int& seen = by_class[w.class_of(ix)];
        if (seen == 0) seen = rep.d_w;
        EXPECT_EQ(seen, rep.d_w) << d->name();
      }
    }
}

TEST(MinimalLiftOrder, CharacteristicTwo) {
  const auto sc = build_datum({Family::C, 3}, Isogeny::simply_connected);
  const WeylElement c = coxeter_element(sc);
  EXPECT_EQ(minimal_lift_order(c).d_w, 12);
  EXPECT_EQ(minimal_lift_order(c, FieldChar(2)).d_w, 6);
}

TEST(LiftPower, RequiresWeylOrder) {
  const auto d = build_datum({Family::A, 2}, Isogeny::simply_connected);
  const ExtendedElement n = generator_lift(d, 0);
  EXPECT_FALSE(power(n, 2).is_identity());
  EXPECT_TRUE(power(n, 4).is_identity());
  EXPECT_THROW(ExtendedElement(TorusMod2{1}, WeylElement::identity(d)), std::invalid_argument);
}

}  // namespace
