#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "wtn/cache.hpp"
#include "wtn/class_data.hpp"
#include "wtn/component_counter.hpp"
#include "wtn/enumeration.hpp"
#include "wtn/reference.hpp"
#include "wtn/tables.hpp"
#include "wtn/verify.hpp"

namespace {

using namespace wtn;

TEST(GroupedNotation, Parse) {
  const auto g = parse_grouped("16,9,{4,8},{1,4_2},2");
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g[2], (GroupedEntry{4, 8}));
  EXPECT_EQ(g[3], (GroupedEntry{1, 4, 4}));
  EXPECT_EQ(parse_grouped("2,3,8_2,6_3,8")[2], (GroupedEntry{8, 8}));
  EXPECT_TRUE(parse_grouped("+").empty());
  EXPECT_THROW(parse_grouped("{1,2"), std::invalid_argument);
  EXPECT_THROW(parse_grouped("1_0"), std::invalid_argument);
}

TEST(GroupedNotation, RenderRoundTrip) {
  for (const std::string text : {"16,9,{4,8},{1,4_2},2", "2,3,4_2,6_3,8", "27,{3,12},3", "{1_2,4_2,9,16}"}) {
    const auto g = parse_grouped(text);
    EXPECT_EQ(parse_grouped(render_grouped(g)), g) << text;
  }
  EXPECT_EQ(render_grouped(parse_grouped("4_2")), "4_2");
  EXPECT_EQ(render_grouped({}), "-");
}

TEST(Reference, ClassicalClosedFormsSmallCases) {
  // A_2: S_3.
  auto r = classical_reference({Family::A, 2});
  EXPECT_EQ(r.group_order, 6);
  EXPECT_EQ(r.l_c, 2);
  EXPECT_EQ(r.n_c_sc, 3);
  // B_3: n = 3 is 3 mod 4.
  r = classical_reference({Family::B, 3});
  EXPECT_EQ(r.group_order, 48);
  EXPECT_EQ(r.n_c_sc, 6);
  EXPECT_EQ(r.l_e, 15);
  EXPECT_EQ(classical_reference({Family::B, 5}).n_c_sc, 20);
  EXPECT_EQ(classical_reference({Family::D, 5}).n_c_sc, 8);
  EXPECT_EQ(classical_reference({Family::D, 6}).n_c_sc, 20);
  EXPECT_THROW(classical_reference({Family::E, 6}), std::invalid_argument);
}

bool satisfies(LiftClaim claim, int d, int ord) {
  switch (claim) {
    case LiftClaim::equal: return d == ord;
    case LiftClaim::doubled: return d == 2 * ord;
    case LiftClaim::either: return d == ord || d == 2 * ord;
  }
  return false;
}

TEST(Reference, ClassicalEllipticLiftClaims) {
  for (Family f : {Family::B, Family::C, Family::D}) {
    const auto claim = classical_elliptic_reference(f);
    for (int n = f == Family::D ? 4 : 2; n <= 7; ++n)
      for (const auto& c : elliptic_partition_classes({f, n})) {
        const std::string label = RootSystemType{f, n}.name() + ' ' + CycleType(c.parts).str();
        EXPECT_TRUE(satisfies(claim.ad, c.record.d_ad, c.record.order)) << label << " ad d = " << c.record.d_ad;
        EXPECT_TRUE(satisfies(claim.sc, c.record.d_sc, c.record.order)) << label << " sc d = " << c.record.d_sc;
      }
  }
  EXPECT_THROW(classical_elliptic_reference(Family::A), std::invalid_argument);
}

TEST(Reference, ClassicalSubgroupIndices) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = f == Family::D ? 4 : 2; r <= 6; ++r) {
      const RootSystemType t{f, r};
      const auto rep = subgroup_rows(WeylEnumeration(build_datum(t, Isogeny::adjoint)));
      EXPECT_EQ(rep.derived_index(), classical_derived_index(t)) << t.name();
      EXPECT_EQ(rep.coxeter_index(), classical_coxeter_index(t)) << t.name();
    }
  EXPECT_THROW(classical_coxeter_index({Family::E, 6}), std::invalid_argument);
}

TEST(Tables, ClassicalRowsMatchClosedForms) {
  TableOptions opt;
  opt.subgroups = false;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = f == Family::D ? 4 : 2; r <= 6; ++r) {
      const auto rep = build_table({f, r}, opt);
      EXPECT_TRUE(compare_classical(rep).empty()) << rep.type.name() << ": " << ::testing::PrintToString(compare_classical(rep));
    }
}

TEST(Tables, E6MatchesTranscribedTable) {
  TableOptions opt;
  opt.use_cache = false;
  const auto rep = build_table({Family::E, 6}, opt);
  EXPECT_EQ(rep.source, "enumeration");
  const auto bad = compare_exceptional(rep, exceptional_reference({Family::E, 6}));
  EXPECT_TRUE(bad.empty()) << ::testing::PrintToString(bad);
}

TEST(Tables, G2ClassDataIsDihedral) {
  // W(G2) is dihedral of order 12: besides the Coxeter class, -1 (order 2) and the
  // rotations of order 3 form one class each.
  TableOptions opt;
  opt.use_cache = false;
  const auto rep = build_table({Family::G, 2}, opt);
  ASSERT_TRUE(rep.elliptic);
  ASSERT_EQ(rep.elliptic->size(), 2u);
  EXPECT_EQ((*rep.elliptic)[0].order, 2);
  EXPECT_EQ((*rep.elliptic)[0].tau, Integer(4));
  EXPECT_EQ((*rep.elliptic)[1].order, 3);
  EXPECT_EQ((*rep.elliptic)[1].size, 2);
  EXPECT_EQ((*rep.elliptic)[1].tau, Integer(3));
}

TEST(Tables, E8UsesDegreeFormulas) {
  const auto rep = build_table({Family::E, 8});
  EXPECT_EQ(rep.source, "degrees");
  EXPECT_FALSE(rep.elliptic);
  const auto ref = exceptional_reference({Family::E, 8});
  EXPECT_EQ(rep.group_order, ref.group_order);
  EXPECT_EQ(rep.l_c, ref.l_c);
  EXPECT_EQ(rep.l_e, ref.l_e);
  EXPECT_EQ(rep.tau_c, 1);
  EXPECT_EQ(rep.w_c, 30);
}

TEST(Tables, CharacteristicAdjustsColumns) {
  TableOptions opt;
  opt.characteristic = FieldChar(2);
  opt.subgroups = false;
  const auto rep = build_table({Family::C, 3}, opt);
  EXPECT_EQ(rep.n_c_sc, rep.w_c);
  EXPECT_EQ(rep.tau_c, 1);
  opt.characteristic = FieldChar(3);
  EXPECT_EQ(build_table({Family::E, 6}, opt).tau_c, 1);
}

TEST(Json, SchemaFields) {
  TableOptions opt;
  opt.use_cache = false;
  const auto j = to_json(build_table({Family::F, 4}, opt));
  EXPECT_EQ(j["type"], "F4");
  EXPECT_EQ(j["group_order"], "1152");
  EXPECT_EQ(j["n_c_sc"], 12);
  EXPECT_EQ(j["subgroups"]["derived_index"], "4");
  int classes = 0;
  for (const auto& e : j["w_e"]) classes += e["count"].get<int>();
  EXPECT_EQ(classes, 8);
  EXPECT_EQ(j["rows"].size(), 14u);
  const auto b = to_json(build_table({Family::B, 3}, opt));
  EXPECT_EQ(b["elliptic_partitions"].size(), 3u);
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("wtn-cache-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir_);
    ::setenv("WTN_CACHE_DIR", dir_.c_str(), 1);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CacheTest, RoundTripAndUse) {
  const ClassCache cache = build_cache({Family::F, 4});
  EXPECT_EQ(cache.records.size(), 25u);
  std::istringstream in(cache_to_string(cache));
  const ClassCache back = read_cache(in);
  EXPECT_EQ(back.records, cache.records);
  EXPECT_EQ(back.group_order, 1152);

  save_cache(cache, cache_path({Family::F, 4}));
  TableOptions opt;
  opt.subgroups = false;
  const auto from_cache = build_table({Family::F, 4}, opt);
  EXPECT_EQ(from_cache.source, "cache");
  opt.use_cache = false;
  const auto fresh = build_table({Family::F, 4}, opt);
  EXPECT_EQ(*from_cache.elliptic, *fresh.elliptic);
}

TEST_F(CacheTest, RejectsCorruptFiles) {
  const std::string good = cache_to_string(build_cache({Family::G, 2}));
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_cache(in);
  };
  EXPECT_NO_THROW(parse(good));
  EXPECT_THROW(parse(""), CacheFormatError);
  EXPECT_THROW(parse("WTN-CACHE v2 G2 12\n"), CacheFormatError);
  // Drop the last record: class sizes no longer sum to |W|.
  const std::string truncated = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
  EXPECT_THROW(parse(truncated), CacheFormatError);
  EXPECT_THROW(parse(good + "1 1 2\n"), CacheFormatError);
  EXPECT_FALSE(load_cache(dir_ / "missing.wtncache"));
}

}  // namespace
