#include <gtest/gtest.h>

#include <map>

#include "orbidiamond/errors.hpp"
#include "orbidiamond/fermat_group.hpp"
#include "orbidiamond/orbifold_diamond.hpp"

using namespace orbidiamond;

namespace {

GroupElement q5(std::vector<int> a) { return GroupElement(5, std::move(a)); }

TableEntries entries(std::initializer_list<std::tuple<int, int, std::uint64_t>> list) {
  TableEntries out;
  for (auto [q, p, dim] : list) out[{q, p}] = dim;
  return out;
}

}  // namespace

TEST(Variant, ParseRoundTrip) {
  for (auto v : {TableVariant::HOmegaSum, TableVariant::HOmegaInvariant, TableVariant::HTSum,
                 TableVariant::HTInvariant})
    EXPECT_EQ(parse_variant(to_string(v)), v);
  EXPECT_EQ(parse_variant("ht-INVARIANT"), TableVariant::HTInvariant);
  EXPECT_THROW(parse_variant("HT"), InvalidArgument);
  EXPECT_TRUE(is_invariant(TableVariant::HOmegaInvariant));
  EXPECT_FALSE(is_polyvector(TableVariant::HOmegaInvariant));
  EXPECT_TRUE(is_polyvector(TableVariant::HTSum));
}

TEST(SectorDiamonds, UntwistedQuintic) {
  const auto g = GroupElement::identity(5, 4);
  EXPECT_EQ(cr_sector(g, true),
            entries({{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {3, 0, 1}, {2, 1, 1}, {1, 2, 1},
                     {0, 3, 1}}));
  const auto sum = cr_sector(g, false);
  EXPECT_EQ(sum.at({2, 1}), 101u);
  EXPECT_EQ(sum.at({1, 2}), 101u);
  EXPECT_EQ(ht_sector_cy(g, false).at({1, 1}), 101u);
  EXPECT_EQ(ht_sector_cy(g, false).at({0, 0}), 1u);
  EXPECT_EQ(ht_sector_cy(g, false).at({3, 0}), 1u);
}

TEST(SectorDiamonds, TypeTwoCurve) {
  const auto g = q5({1, 4, 0, 0, 0});
  ASSERT_EQ(quintic_type(g), QuinticType::Two);
  EXPECT_EQ(cr_sector(g, false), entries({{1, 1, 1}, {2, 1, 6}, {1, 2, 6}, {2, 2, 1}}));
  EXPECT_EQ(cr_sector(g, true), entries({{1, 1, 1}, {2, 2, 1}}));
  EXPECT_EQ(ht_sector_cy(g, false), entries({{2, 1, 1}, {1, 1, 6}, {2, 2, 6}, {1, 2, 1}}));
  EXPECT_EQ(ht_sector_cy(g, true), entries({{2, 1, 1}, {1, 2, 1}}));
}

TEST(SectorDiamonds, TypeThreePoints) {
  const auto g = q5({1, 1, 4, 4, 0});
  ASSERT_EQ(quintic_type(g), QuinticType::Three);
  EXPECT_EQ(cr_sector(g, false), entries({{1, 1, 5}, {2, 2, 5}}));
  EXPECT_EQ(cr_sector(g, true), entries({{1, 1, 1}, {2, 2, 1}}));
  EXPECT_EQ(ht_sector_cy(g, false), entries({{2, 1, 5}, {1, 2, 5}}));
  EXPECT_EQ(ht_sector_cy(g, true), entries({{2, 1, 1}, {1, 2, 1}}));
}

TEST(SectorDiamonds, FreeElementsContributeNothing) {
  const auto g = q5({1, 2, 3, 4, 0});
  ASSERT_EQ(quintic_type(g), QuinticType::Four);
  EXPECT_TRUE(cr_sector(g, false).empty());
  EXPECT_TRUE(ht_sector_cy(g, true).empty());
}

TEST(QuinticTable, InvariantDiamond) {
  const auto t = cr_table(5, 4, true);
  for (int j = 0; j <= 3; ++j) EXPECT_EQ(t.at(3 - j, j), 1u);
  EXPECT_EQ(t.at(0, 0), 1u);
  EXPECT_EQ(t.at(1, 1), 101u);
  EXPECT_EQ(t.at(2, 2), 101u);
  EXPECT_EQ(t.at(3, 3), 1u);
  EXPECT_EQ(t.total(), 208u);
  EXPECT_TRUE(greek_cross_check(t));
  EXPECT_TRUE(has_diamond_symmetry(t));

  // 101 = 1 (untwisted) + 40 (type two) + 60 (type three).
  std::map<QuinticType, std::uint64_t> by_type;
  for (const auto& s : t.sectors) {
    auto it = s.entries.find({1, 1});
    if (it != s.entries.end()) by_type[quintic_type(s.g)] += it->second;
  }
  EXPECT_EQ(by_type[QuinticType::One], 1u);
  EXPECT_EQ(by_type[QuinticType::Two], 40u);
  EXPECT_EQ(by_type[QuinticType::Three], 60u);
  EXPECT_EQ(by_type.count(QuinticType::Four), 0u);
}

TEST(QuinticTable, SumDiamond) {
  const auto t = cr_table(5, 4, false);
  EXPECT_EQ(t.at(1, 1), 1u + 40u + 60u * 5u);
  EXPECT_EQ(t.at(2, 1), 101u + 40u * 6u);
  EXPECT_TRUE(has_diamond_symmetry(t));
}

TEST(QuinticTable, PolyvectorIsFlip) {
  for (bool inv : {true, false}) {
    const auto cr = cr_table(5, 4, inv);
    const auto ht = ht_table_cy(5, 4, inv);
    EXPECT_EQ(ht.entries, flip_q(cr.entries, 3));
    EXPECT_EQ(ht.total(), cr.total());
  }
  const auto vh = vl_hl_dims(ht_table_cy(5, 4, true));
  EXPECT_EQ(vh.vl, (std::vector<std::uint64_t>{1, 1, 1, 1}));
  EXPECT_EQ(vh.hl, 204u);
}

TEST(SmallTables, EllipticCurve) {
  const auto t = ht_table_cy(3, 2, true);
  EXPECT_EQ(t.entries, entries({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  const auto vh = vl_hl_dims(t);
  EXPECT_EQ(vh.vl, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(vh.hl, 2u);
}

TEST(SmallTables, QuarticSurface) {
  const auto t = ht_table_cy(4, 3, true);
  EXPECT_EQ(t.at(1, 1), 20u);
  for (auto [q, p] : {std::pair{0, 0}, {2, 0}, {0, 2}, {2, 2}}) EXPECT_EQ(t.at(q, p), 1u);
  EXPECT_EQ(t.total(), 24u);
  const auto vh = vl_hl_dims(t);
  EXPECT_EQ(vh.vl, (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(vh.hl, 21u);
}

TEST(Symmetries, HoldAcrossCalabiYauCases) {
  for (int d = 3; d <= 6; ++d) {
    const int n = d - 1;
    for (auto v : {TableVariant::HOmegaSum, TableVariant::HOmegaInvariant, TableVariant::HTSum,
                   TableVariant::HTInvariant}) {
      const auto t = compute_table(d, n, v);
      EXPECT_TRUE(t.is_integral());
      EXPECT_TRUE(has_diamond_symmetry(t)) << d << " " << to_string(v);
      if (is_invariant(v)) EXPECT_TRUE(greek_cross_check(t)) << d << " " << to_string(v);
    }
  }
}

TEST(Symmetries, InverseSectorIsDual) {
  // Serre duality on each component plus age(g) + age(g^-1) = codim.
  for (int d = 2; d <= 6; ++d)
    for (int n = 2; n <= 4; ++n) {
      if (group_order(d, n) > 400) continue;
      const int top = n - 1;
      for (const auto& g : enumerate(d, n)) {
        for (bool inv : {false, true}) {
          const auto mine = cr_sector(g, inv);
          const auto other = cr_sector(g.inverse(), inv);
          TableEntries dual;
          for (const auto& [b, dim] : mine) dual[{top - b.q, top - b.p}] = dim;
          EXPECT_EQ(dual, other) << g.to_string();
        }
      }
    }
}

TEST(NonCalabiYau, PolyvectorRejected) {
  EXPECT_THROW(ht_table_cy(4, 4, true), NonCalabiYau);
  EXPECT_THROW(ht_sector_cy(GroupElement::identity(3, 3), false), NonCalabiYau);
  EXPECT_THROW(compute_table(5, 3, TableVariant::HTSum), NonCalabiYau);
}

TEST(NonCalabiYau, FormsTableAllowsFractionalDegrees) {
  const auto t = cr_table(4, 4, true);
  EXPECT_FALSE(t.is_integral());
  EXPECT_GT(t.total(), 0u);
  EXPECT_TRUE(has_diamond_symmetry(t));
  EXPECT_THROW(vl_hl_dims(t), InvalidArgument);
}

TEST(Tables, SectorsOptional) {
  TableOptions opts;
  opts.keep_sectors = false;
  const auto t = cr_table(5, 4, true, opts);
  EXPECT_TRUE(t.sectors.empty());
  EXPECT_EQ(t.entries, cr_table(5, 4, true).entries);
  opts.cap = 10;
  EXPECT_THROW(cr_table(5, 4, true, opts), EnumerationCapExceeded);
}

TEST(Tables, ThreadCountDoesNotMatter) {
  TableOptions one;
  one.parallelism.threads = 1;
  TableOptions four;
  four.parallelism.threads = 4;
  EXPECT_EQ(cr_table(6, 5, false, one).entries, cr_table(6, 5, false, four).entries);
}
