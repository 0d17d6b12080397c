#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hecke/roots.hpp"

using hecke::WeightVector;

TEST(BuildTypeA, RankThree) {
  const auto sys = hecke::build_type_a(3);
  ASSERT_EQ(sys.num_roots(), 3U);
  EXPECT_EQ(sys.positive_roots()[0].coords, (std::vector<int>{1, 0}));
  EXPECT_EQ(sys.positive_roots()[1].coords, (std::vector<int>{1, 1}));
  EXPECT_EQ(sys.positive_roots()[2].coords, (std::vector<int>{0, 1}));
}

TEST(BuildTypeA, CountsAndOrder) {
  EXPECT_EQ(hecke::build_type_a(2).num_roots(), 1U);
  EXPECT_EQ(hecke::build_type_a(2).positive_roots()[0].coords, (std::vector<int>{1}));
  EXPECT_EQ(hecke::build_type_a(4).num_roots(), 6U);
  for (int n = 2; n <= 8; ++n) {
    const auto sys = hecke::build_type_a(n);
    EXPECT_EQ(sys.num_roots(), static_cast<std::size_t>(n * (n - 1) / 2));
    std::size_t k = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j, ++k) {
        EXPECT_EQ(sys.positive_roots()[k].i, i);
        EXPECT_EQ(sys.positive_roots()[k].j, j);
        EXPECT_EQ(sys.index_of(i, j), k);
      }
    }
  }
}

TEST(BuildTypeA, RootsAreIntervalsOfSimpleRoots) {
  for (int n = 2; n <= 7; ++n) {
    const auto sys = hecke::build_type_a(n);
    for (const auto& r : sys.positive_roots()) {
      // Reconstruct the endpoints from the 0/1 coordinates.
      int first = -1;
      int last = -1;
      for (int c = 0; c < n - 1; ++c) {
        if (r.coords[static_cast<std::size_t>(c)] == 1) {
          if (first < 0) first = c + 1;
          last = c + 1;
        } else {
          EXPECT_EQ(r.coords[static_cast<std::size_t>(c)], 0);
        }
      }
      EXPECT_EQ(first, r.i);
      EXPECT_EQ(last + 1, r.j);
      for (int c = first; c <= last; ++c) EXPECT_EQ(r.coords[static_cast<std::size_t>(c - 1)], 1);
    }
  }
}

TEST(BuildTypeA, RankTooSmall) {
  EXPECT_THROW(hecke::build_type_a(1), hecke::RankTooSmall);
  EXPECT_THROW(hecke::build_type_a(0), hecke::RankTooSmall);
}

TEST(LambdaFromHooks, PrefixSums) {
  const std::vector<int> b1{1, 1};
  EXPECT_EQ(hecke::lambda_from_hooks(b1), (WeightVector{1, 2}));
  const std::vector<int> b2{0, 0, 0};
  EXPECT_EQ(hecke::lambda_from_hooks(b2), (WeightVector{0, 0, 0}));
  const std::vector<int> b3{1, 2, -1};
  EXPECT_EQ(hecke::lambda_from_hooks(b3), (WeightVector{1, 3, 2}));
}

TEST(LambdaFromHooks, LinearAndInvertible) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int it = 0; it < 200; ++it) {
    const int r = len(rng);
    std::vector<int> b(static_cast<std::size_t>(r));
    std::vector<int> c(static_cast<std::size_t>(r));
    for (auto& x : b) x = val(rng);
    for (auto& x : c) x = val(rng);
    std::vector<int> sum(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) sum[k] = b[k] + c[k];

    const auto lb = hecke::lambda_from_hooks(b);
    const auto lc = hecke::lambda_from_hooks(c);
    const auto ls = hecke::lambda_from_hooks(sum);
    for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(ls[k], lb[k] + lc[k]);
    EXPECT_EQ(hecke::hooks_from_lambda(lb), b);
  }
}

TEST(InPositiveCone, Examples) {
  EXPECT_TRUE(hecke::in_positive_cone(WeightVector{2, 1}));
  EXPECT_FALSE(hecke::in_positive_cone(WeightVector{1, -1}));
  EXPECT_TRUE(hecke::in_positive_cone(WeightVector{0, 0}));
}
