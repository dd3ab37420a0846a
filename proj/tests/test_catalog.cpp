#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "ellab/catalog.hpp"
#include "ellab/error.hpp"
#include "oracles.hpp"
#include "quartic_oracle.hpp"

using namespace ellab;

namespace {

std::set<Partition> table_partitions(std::span<const ClassColumn> cols) {
  std::set<Partition> out;
  for (const auto& c : cols)
    for (const auto& r : c.rows) out.insert(partition_of(r));
  return out;
}

}  // namespace

TEST(Admissible, Examples) {
  EXPECT_EQ(admissible({4, 4, 2, 2}), Admissibility::Admissible);
  EXPECT_EQ(admissible({5, 2, 2, 2, 1}), Admissibility::NotAdmissible);
  EXPECT_EQ(admissible({2, 2, 2, 2, 2, 2}), Admissibility::UnknownBeyondCatalog);
  EXPECT_THROW(admissible({3, 3, 3, 2}), Error);
}

// Oracle: enumerate every partition of 12 into 4 or 5 parts and compare with
// the partitions named in the class tables.
TEST(Admissible, MatchesEnumeratedPartitions) {
  const auto four = oracle::partitions(12, 4);
  const auto five = oracle::partitions(12, 5);
  ASSERT_EQ(four.size(), 15u);
  ASSERT_EQ(five.size(), 13u);

  const std::set<Partition> four_ok = {{3, 3, 3, 3}, {4, 4, 2, 2}, {5, 5, 1, 1},
                                       {6, 3, 2, 1}, {8, 2, 1, 1}, {9, 1, 1, 1}};
  EXPECT_EQ(table_partitions(four_fiber_classes()), four_ok);
  for (const auto& p : four) {
    EXPECT_EQ(admissible(p) == Admissibility::Admissible, four_ok.contains(p)) << compact_indices(p);
  }

  std::set<Partition> excluded;
  const auto five_ok = table_partitions(five_fiber_classes());
  EXPECT_EQ(five_ok.size(), 10u);
  for (const auto& p : five) {
    if (admissible(p) == Admissibility::NotAdmissible) excluded.insert(p);
    EXPECT_EQ(admissible(p) == Admissibility::Admissible, five_ok.contains(p)) << compact_indices(p);
  }
  EXPECT_EQ(excluded, (std::set<Partition>{{5, 2, 2, 2, 1}, {4, 3, 3, 1, 1}, {3, 3, 2, 2, 2}}));

  for (int parts = 6; parts <= 12; ++parts) {
    for (const auto& p : oracle::partitions(12, parts)) {
      EXPECT_EQ(admissible(p), Admissibility::UnknownBeyondCatalog);
    }
  }
}

TEST(CatalogLookup, Examples) {
  const auto e6321 = catalog_lookup({6, 3, 2, 1});
  ASSERT_TRUE(e6321);
  EXPECT_EQ(e6321->quartic, "(x-z)(x-t+2z)(x^2+t^2-z^2)");
  EXPECT_EQ(e6321->degrees, (std::vector<int>{2, 1, 1}));

  const auto e33321 = catalog_lookup({3, 3, 3, 2, 1});
  ASSERT_TRUE(e33321);
  EXPECT_EQ(e33321->degrees, (std::vector<int>{3, 1}));
  EXPECT_EQ(e33321->i2_node_induced, true);

  const auto e72111 = catalog_lookup({7, 2, 1, 1, 1});
  ASSERT_TRUE(e72111);
  EXPECT_FALSE(e72111->quartic);
  EXPECT_FALSE(e72111->degrees);

  EXPECT_FALSE(catalog_lookup({5, 2, 2, 2, 1}));
  // Lookup sorts its argument.
  EXPECT_TRUE(catalog_lookup({1, 2, 3, 6}));
}

TEST(CatalogLookup, StoredDegrees) {
  const std::vector<std::pair<Partition, std::vector<int>>> expected = {
      {{3, 3, 3, 3}, {3, 1}},          {{4, 4, 2, 2}, {1, 1, 1, 1}}, {{5, 5, 1, 1}, {3, 1}},
      {{6, 3, 2, 1}, {2, 1, 1}},       {{8, 2, 1, 1}, {2, 1, 1}},    {{9, 1, 1, 1}, {3, 1}},
      {{3, 3, 3, 2, 1}, {3, 1}},       {{4, 4, 2, 1, 1}, {2, 1, 1}}, {{6, 2, 2, 1, 1}, {2, 1, 1}},
  };
  for (const auto& [p, d] : expected) {
    const auto e = catalog_lookup(p);
    ASSERT_TRUE(e) << compact_indices(p);
    EXPECT_EQ(e->degrees, d) << compact_indices(p);
  }
  for (const Partition p : {Partition{4, 4, 2, 1, 1}, Partition{6, 2, 2, 1, 1}, Partition{3, 3, 3, 2, 1}}) {
    EXPECT_EQ(catalog_lookup(p)->i2_node_induced, true);
  }
  EXPECT_EQ(catalog_lookup({6, 2, 2, 1, 1})->distinguished, (std::vector<int>{2}));
}

// Oracle: the stored degrees of each four-fiber surface equal the degrees of
// the factors of its quartic, measured by evaluating the quartic text.
TEST(CatalogLookup, DegreesMatchQuarticFactors) {
  int checked = 0;
  for (const auto& e : Catalog::embedded().entries()) {
    if (!e.quartic) continue;
    std::vector<int> measured;
    for (const auto& f : oracle::top_level_factors(*e.quartic)) {
      measured.push_back(oracle::homogeneous_degree(f));
    }
    std::sort(measured.begin(), measured.end(), std::greater<>());
    EXPECT_EQ(e.degrees, measured) << *e.quartic;
    ++checked;
  }
  EXPECT_EQ(checked, 6);
}

TEST(Catalog, Invariants) {
  for (const auto& e : Catalog::embedded().entries()) {
    int sum = 0;
    for (int k : e.partition) sum += k;
    EXPECT_EQ(sum, 12);
    EXPECT_TRUE(std::is_sorted(e.partition.begin(), e.partition.end(), std::greater<>()));
    if (e.degrees) {
      int dsum = 0;
      for (int d : *e.degrees) dsum += d;
      EXPECT_EQ(dsum, 4);
    }
  }
  EXPECT_EQ(Catalog::embedded().entries().size(), 16u);
}

TEST(Catalog, JsonRoundTripIsByteStable) {
  const std::string text = Catalog::embedded().dump();
  const Catalog back = Catalog::parse(text);
  EXPECT_EQ(back.entries(), Catalog::embedded().entries());
  EXPECT_EQ(back.dump(), text);
  EXPECT_EQ(Catalog::parse(back.dump()).dump(), text);
}

TEST(Catalog, ParseRejectsBadEntries) {
  EXPECT_THROW(Catalog::parse("{}"), Error);
  EXPECT_THROW(Catalog::parse("not json"), Error);
  EXPECT_THROW(Catalog::parse(R"([{"partition":[3,3,3,2]}])"), Error);
  EXPECT_THROW(Catalog::parse(R"([{"partition":[3,3,3,3],"degrees":[2,1]}])"), Error);
  EXPECT_THROW(Catalog::parse(R"([{"partition":[1,3,3,5]}])"), Error);
  EXPECT_NO_THROW(Catalog::parse(R"([{"partition":[3,3,3,3]}])"));
}

TEST(Catalog, EnvironmentOverride) {
  const auto path = std::filesystem::temp_directory_path() / "ellab_catalog_override.json";
  {
    std::ofstream out(path);
    out << R"([{"partition":[3,3,3,3],"degrees":[2,2]}])";
  }
  ::setenv("ELLAB_CATALOG", path.c_str(), 1);
  const Catalog c = Catalog::from_environment();
  ::unsetenv("ELLAB_CATALOG");
  std::filesystem::remove(path);
  ASSERT_EQ(c.entries().size(), 1u);
  EXPECT_EQ(c.lookup({3, 3, 3, 3})->degrees, (std::vector<int>{2, 2}));
  EXPECT_EQ(Catalog::from_environment().entries().size(), Catalog::embedded().entries().size());
}
