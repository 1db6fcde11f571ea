#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "orbidiamond/errors.hpp"
#include "orbidiamond/orbifold_diamond.hpp"

using namespace orbidiamond;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("orbidiamond_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(TableJson, RoundTripsEveryVariant) {
  for (int d = 3; d <= 5; ++d)
    for (auto v : {TableVariant::HOmegaSum, TableVariant::HOmegaInvariant, TableVariant::HTSum,
                   TableVariant::HTInvariant}) {
      const auto t = compute_table(d, d - 1, v);
      const auto back = table_from_json(nlohmann::json::parse(to_json(t).dump()));
      EXPECT_EQ(back.d, t.d);
      EXPECT_EQ(back.n, t.n);
      EXPECT_EQ(back.variant, t.variant);
      EXPECT_EQ(back.entries, t.entries);
    }
}

TEST(TableJson, FractionalDegreesSurvive) {
  const auto t = cr_table(4, 4, false);
  ASSERT_FALSE(t.is_integral());
  const auto j = to_json(t);
  bool saw_string = false;
  for (const auto& e : j["entries"]) saw_string |= e["q"].is_string();
  EXPECT_TRUE(saw_string);
  EXPECT_EQ(table_from_json(j).entries, t.entries);
}

TEST(TableJson, MalformedInputRejected) {
  EXPECT_THROW(table_from_json(nlohmann::json{{"d", 3}}), InvalidArgument);
  EXPECT_THROW(table_from_json(nlohmann::json{{"d", 3}, {"n", 2}, {"variant", "nope"}, {"entries", {}}}),
               InvalidArgument);
}

TEST(TableCsv, Layout) {
  const auto csv = to_csv(ht_table_cy(3, 2, true));
  EXPECT_EQ(csv, "q,p,dim\n0,0,1\n0,1,1\n1,0,1\n1,1,1\n");
}

TEST(Diamond, EllipticCurve) {
  EXPECT_EQ(render_diamond(ht_table_cy(3, 2, true)), "  1\n1   1\n  1\n");
}

TEST(Diamond, QuinticHasSevenRows) {
  const auto text = render_diamond(cr_table(5, 4, true));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
  EXPECT_NE(text.find("101"), std::string::npos);
}

TEST(Cache, StoreThenLoad) {
  const auto dir = fresh_dir("cache");
  TableCache cache(dir);
  EXPECT_FALSE(cache.load(5, 4, TableVariant::HTInvariant).has_value());
  const auto t = ht_table_cy(5, 4, true);
  cache.store(t);
  EXPECT_EQ(cache.path_for(5, 4, TableVariant::HTInvariant).filename(), "d5_n4_HT-invariant.json");
  const auto loaded = cache.load(5, 4, TableVariant::HTInvariant);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->entries, t.entries);
  EXPECT_FALSE(cache.load(5, 4, TableVariant::HTSum).has_value());
  std::filesystem::remove_all(dir);
}

TEST(Cache, CorruptFileIsAMiss) {
  const auto dir = fresh_dir("corrupt");
  TableCache cache(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(cache.path_for(3, 2, TableVariant::HTSum)) << "{ not json";
  EXPECT_FALSE(cache.load(3, 2, TableVariant::HTSum).has_value());
  std::filesystem::remove_all(dir);
}

TEST(Cache, EnvironmentDirectory) {
  ::setenv("ORBIDIAMOND_CACHE", "/tmp/somewhere", 1);
  EXPECT_EQ(TableCache::directory_from_env(), std::filesystem::path("/tmp/somewhere"));
  ::setenv("ORBIDIAMOND_CACHE", "", 1);
  EXPECT_FALSE(TableCache::directory_from_env().has_value());
  ::unsetenv("ORBIDIAMOND_CACHE");
  EXPECT_FALSE(TableCache::directory_from_env().has_value());
}
