#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "trigonal/permutation.hpp"

using namespace trigonal;
using trigonal::testing::Gen;

namespace {

// Two generators on 0..5: a 3-cycle on {0,1,2} and the swap (2 3); 4 and 5 isolated.
PermutationAction small_action() {
  return PermutationAction({Permutation({1, 2, 0, 3, 4, 5}), Permutation({0, 1, 3, 2, 4, 5})});
}

Permutation random_permutation(Gen& g, std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Point>(k);
  std::shuffle(img.begin(), img.end(), g.engine());
  return Permutation(img);
}

}  // namespace

TEST(Permutation, Basics) {
  const Permutation p({1, 2, 0, 3});
  EXPECT_EQ(p.degree(), 4u);
  EXPECT_EQ(p.order(), 3);
  EXPECT_EQ(p.fixed_point_count(), 1u);
  EXPECT_TRUE(p.after(p.inverse()).is_identity());
  EXPECT_EQ(p.after(p)(0), 2u);
  EXPECT_TRUE(Permutation::identity(5).is_identity());
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(validate_permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(validate_permutation({0, 3}), std::invalid_argument);
  EXPECT_NO_THROW(validate_permutation({2, 0, 1}));
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
}

TEST(Permutation, WordsActLeftToRight) {
  const auto action = small_action();
  GeneratorWord w{{{1, 1}, {2, 1}}};
  // 1 -> 2 under g1, then 2 -> 3 under g2
  EXPECT_EQ(action.apply(w, 1), 3u);
  EXPECT_EQ(action.apply(w.inverse(), 3), 1u);
  EXPECT_EQ(action.apply(Letter{1, -1}, 0), 2u);
  EXPECT_EQ((w * w.inverse()).size(), 4u);
  EXPECT_FALSE(w.to_string().empty());
}

TEST(Permutation, OrbitAndSchreierTree) {
  const auto action = small_action();
  const Point seeds[] = {0, 4};
  const auto tree = orbit(seeds, action);
  EXPECT_EQ(tree.size(), 5u);
  EXPECT_TRUE(tree.contains(3));
  EXPECT_FALSE(tree.contains(5));
  EXPECT_EQ(tree.roots(), (std::vector<Point>{0, 4}));
  EXPECT_EQ(tree.root_of(3), 0u);
  EXPECT_EQ(tree.generator(0), 0);
  for (Point p : tree.points()) {
    const auto w = tree.word_to(p);
    EXPECT_EQ(action.apply(w, tree.root_of(p)), p);
    EXPECT_EQ(w.size(), tree.depth(p));
    EXPECT_LE(tree.depth(p), tree.max_depth());
  }
}

TEST(Permutation, SchreierGeneratorsFixTheSeed) {
  Gen g(51);
  for (int t = 0; t < 20; ++t) {
    const PermutationAction action({random_permutation(g, 30), random_permutation(g, 30), random_permutation(g, 30)});
    const Point seed = static_cast<Point>(g.integer(0, 29));
    const auto tree = orbit(std::span<const Point>(&seed, 1), action);
    const auto words = schreier_generators(tree, action, 25);
    EXPECT_LE(words.size(), 25u);
    for (std::size_t k = 0; k < words.size(); ++k) {
      EXPECT_EQ(action.apply(words[k], seed), seed);
      EXPECT_LE(words[k].size(), 2 * tree.max_depth() + 1);
      if (k > 0) EXPECT_LE(words[k - 1].size(), words[k].size());
    }
  }
}

TEST(Permutation, OrbitIsClosedUnderGenerators) {
  Gen g(52);
  for (int t = 0; t < 20; ++t) {
    const PermutationAction action({random_permutation(g, 40), random_permutation(g, 40)});
    const Point seed = 0;
    const auto tree = orbit(std::span<const Point>(&seed, 1), action);
    for (Point p : tree.points())
      for (int k = 1; k <= 2; ++k) {
        EXPECT_TRUE(tree.contains(action.generator(k)(p)));
        EXPECT_TRUE(tree.contains(action.apply(Letter{k, -1}, p)));
      }
  }
}
