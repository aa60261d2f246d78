#include <gtest/gtest.h>

#include "generators.hpp"
#include "trigonal/serialize.hpp"

using namespace trigonal;
using trigonal::testing::Gen;
using trigonal::testing::kTrials;
using nlohmann::json;

TEST(Serialize, EisensteinEncoding) {
  EXPECT_EQ(json(EisensteinInt::theta()).dump(), "[-1,2]");
  EXPECT_EQ(json::parse("[3,-4]").get<EisensteinInt>(), EisensteinInt(3, -4));
  EXPECT_THROW(json::parse("[1]").get<EisensteinInt>(), std::invalid_argument);
  EXPECT_THROW(json::parse("\"x\"").get<EisensteinInt>(), std::invalid_argument);
}

TEST(Serialize, GramExport) {
  const auto g = gram_json();
  ASSERT_EQ(g.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    ASSERT_EQ(g[i].size(), 10u);
    EXPECT_EQ(g[i][i], json::parse("[-3,0]"));
    if (i + 1 < 10) {
      EXPECT_EQ(g[i][i + 1], json::parse("[-1,2]"));
      EXPECT_EQ(g[i + 1][i], json::parse("[1,-2]"));
    }
  }
  EXPECT_EQ(g[0][2], json::parse("[0,0]"));
}

TEST(Serialize, F3VectorRejectsBadEntries) {
  EXPECT_THROW(json::parse("[0,1,2,3,0,0,0,0,0,0]").get<F3Vector>(), std::invalid_argument);
  EXPECT_THROW(json::parse("[0,1]").get<F3Vector>(), std::invalid_argument);
}

TEST(Serialize, ClassesExport) {
  const ClassTable table;
  const auto j = classes_json(table);
  EXPECT_EQ(j["count"], kClassCount);
  EXPECT_EQ(j["raw_count"], 177144);
  EXPECT_EQ(j["classes"].size(), kClassCount);
  EXPECT_EQ(j["classes"][0]["index"], 0);
  EXPECT_EQ(j["classes"][0]["tuple"], table.at(0).to_string());
}

TEST(Serialize, OrbitExportAndDot) {
  const PermutationAction action({Permutation({1, 0, 2}), Permutation({0, 2, 1})});
  const Point seed = 0;
  const auto tree = orbit(std::span<const Point>(&seed, 1), action);
  const auto j = orbit_json(tree);
  EXPECT_EQ(j["size"], 3);
  EXPECT_EQ(j["parent"][0], -1);
  EXPECT_EQ(j["parent"][1], 0);
  EXPECT_EQ(j["generator"][1], 1);
  const auto dot = orbit_dot(tree, action, "g");
  EXPECT_EQ(dot.rfind("digraph g {", 0), 0u);
  EXPECT_NE(dot.find("0 -> 1 [label=1]"), std::string::npos);
  EXPECT_NE(dot.find("dashed"), std::string::npos);
}

TEST(Serialize, DumpIsDeterministic) {
  const auto a = dump(gram_json());
  const auto b = dump(gram_json());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
}

// Properties

TEST(SerializeProperty, RoundTrips) {
  Gen g(71);
  for (int t = 0; t < kTrials; ++t) {
    const auto x = g.eisenstein();
    EXPECT_EQ(json(x).get<EisensteinInt>(), x);
    const auto v = g.lattice_vector();
    EXPECT_EQ(json::parse(json(v).dump()).get<LatticeVector>(), v);
    const auto f = g.f3_vector();
    EXPECT_EQ(json::parse(json(f).dump()).get<F3Vector>(), f);
  }
  for (int i = 1; i <= kRank; ++i) {
    const auto m = triflection(i);
    EXPECT_EQ(json::parse(json(m).dump()).get<UnitaryMatrix>(), m);
  }
}
