#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "wtn/exact_linalg.hpp"
#include "wtn/root_data.hpp"

namespace {

using namespace wtn;

struct Known {
  RootSystemType type;
  std::vector<int> degrees;
  std::size_t roots;
  long det_cartan;
};

std::vector<Known> known_types() {
  return {
      {{Family::A, 1}, {2}, 2, 2},
      {{Family::A, 4}, {2, 3, 4, 5}, 20, 5},
      {{Family::B, 3}, {2, 4, 6}, 18, 2},
      {{Family::C, 4}, {2, 4, 6, 8}, 32, 2},
      {{Family::D, 4}, {2, 4, 4, 6}, 24, 4},
      {{Family::D, 5}, {2, 4, 5, 6, 8}, 40, 4},
      {{Family::G, 2}, {2, 6}, 12, 1},
      {{Family::F, 4}, {2, 6, 8, 12}, 48, 1},
      {{Family::E, 6}, {2, 5, 6, 8, 9, 12}, 72, 3},
      {{Family::E, 7}, {2, 6, 8, 10, 12, 14, 18}, 126, 2},
      {{Family::E, 8}, {2, 8, 12, 14, 18, 20, 24, 30}, 240, 1},
  };
}

TEST(RootData, DegreesRootsAndCartanDeterminants) {
  for (const auto& k : known_types()) {
    const auto d = build_datum(k.type, Isogeny::adjoint);
    EXPECT_EQ(d->degrees, k.degrees) << k.type.name();
    EXPECT_EQ(d->num_roots, k.roots) << k.type.name();
    EXPECT_EQ(d->coxeter_number, k.degrees.back()) << k.type.name();
    EXPECT_EQ(static_cast<std::size_t>(d->coxeter_number * d->rank), k.roots) << k.type.name();
    EXPECT_EQ(determinant(to_int_matrix(d->cartan)), k.det_cartan) << k.type.name();
    EXPECT_EQ(center_order(k.type), k.det_cartan) << k.type.name();
  }
}

TEST(RootData, BourbakiNumbering) {
  // B3: alpha_3 short; C3: alpha_3 long; G2: alpha_1 short; F4: alpha_3, alpha_4 short.
  const SmallMatrix b3 = cartan_matrix({Family::B, 3});
  EXPECT_EQ(b3(1, 2), -2);
  EXPECT_EQ(b3(2, 1), -1);
  const SmallMatrix c3 = cartan_matrix({Family::C, 3});
  EXPECT_EQ(c3(1, 2), -1);
  EXPECT_EQ(c3(2, 1), -2);
  const SmallMatrix g2 = cartan_matrix({Family::G, 2});
  EXPECT_EQ(g2(0, 1), -1);
  EXPECT_EQ(g2(1, 0), -3);
  const SmallMatrix f4 = cartan_matrix({Family::F, 4});
  EXPECT_EQ(f4(1, 2), -2);
  EXPECT_EQ(f4(2, 1), -1);
  // E6: alpha_2 attached to alpha_4.
  const SmallMatrix e6 = cartan_matrix({Family::E, 6});
  EXPECT_EQ(e6(1, 3), -1);
  EXPECT_EQ(e6(1, 2), 0);
  EXPECT_EQ(e6(0, 2), -1);
  // D5: alpha_3 branches to alpha_4 and alpha_5.
  const SmallMatrix d5 = cartan_matrix({Family::D, 5});
  EXPECT_EQ(d5(2, 3), -1);
  EXPECT_EQ(d5(2, 4), -1);
  EXPECT_EQ(d5(3, 4), 0);
}

TEST(RootData, ReflectionsAreInvolutionsOnBothLattices) {
  for (const auto& k : known_types())
    for (Isogeny iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
      const auto d = build_datum(k.type, iso);
      const auto n = static_cast<std::size_t>(d->rank);
      for (int i = 0; i < d->rank; ++i) {
        const SmallMatrix& s = d->reflections[static_cast<std::size_t>(i)];
        EXPECT_TRUE((s * s).is_identity()) << d->name();
        EXPECT_EQ(determinant(to_int_matrix(s)), -1) << d->name();
        // s_i(alpha_i) = -alpha_i in lattice coordinates.
        std::vector<std::int64_t> a(n);
        for (std::size_t r = 0; r < n; ++r) a[r] = d->root_in_basis(r, static_cast<std::size_t>(i));
        auto img = s.apply(a);
        for (std::size_t r = 0; r < n; ++r) EXPECT_EQ(img[r], -a[r]) << d->name();
      }
      // Index of the root lattice in the character lattice.
      const Integer index = abs(determinant(to_int_matrix(d->root_in_basis)));
      EXPECT_EQ(index, iso == Isogeny::adjoint ? Integer(1) : Integer(k.det_cartan)) << d->name();
    }
}

TEST(RootData, CorootsModTwo) {
  const auto ad = build_datum({Family::B, 3}, Isogeny::adjoint);
  const auto sc = build_datum({Family::B, 3}, Isogeny::simply_connected);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(sc->coroot_mod2[i][j], i == j ? 1 : 0);
      EXPECT_EQ(ad->coroot_mod2[i][j], ((ad->cartan(j, i) % 2) + 2) % 2);
    }
  }
}

TEST(RootData, CenterOrderInPositiveCharacteristic) {
  EXPECT_EQ(center_order({Family::A, 3}, FieldChar(2)), 1);
  EXPECT_EQ(center_order({Family::A, 5}, FieldChar(3)), 2);
  EXPECT_EQ(center_order({Family::E, 6}, FieldChar(3)), 1);
  EXPECT_EQ(center_order({Family::D, 6}, FieldChar(2)), 1);
  EXPECT_EQ(center_order({Family::D, 6}, FieldChar(5)), 4);
}

TEST(RootData, InvalidTypesAndParsing) {
  EXPECT_THROW(RootSystemType(Family::B, 1), std::invalid_argument);
  EXPECT_THROW(RootSystemType(Family::D, 3), std::invalid_argument);
  EXPECT_THROW(RootSystemType(Family::E, 5), std::invalid_argument);
  EXPECT_THROW(RootSystemType(Family::G, 3), std::invalid_argument);
  EXPECT_THROW(parse_family("Q"), std::invalid_argument);
  EXPECT_THROW(parse_isogeny("xx"), std::invalid_argument);
  EXPECT_EQ(parse_family("e"), Family::E);
  EXPECT_EQ(parse_isogeny("sc"), Isogeny::simply_connected);
  EXPECT_EQ(RootSystemType(Family::F, 4).name(), "F4");
}

}  // namespace
