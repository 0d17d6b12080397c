#include <vector>

#include <gtest/gtest.h>

#include "hecke/kostant.hpp"
#include "oracles.hpp"

using hecke::KostantPartition;
using hecke::LaurentPoly;
using hecke::WeightVector;

namespace {

// Every weight in [0, cap]^{n-1}.
std::vector<WeightVector> box(int n, int cap) {
  std::vector<WeightVector> out;
  std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    out.emplace_back(a);
    std::size_t k = a.size();
    while (k > 0 && a[k - 1] == cap) a[--k] = 0;
    if (k == 0) break;
    ++a[k - 1];
  }
  return out;
}

}  // namespace

TEST(Wt, SmallValues) {
  EXPECT_EQ(hecke::wt(0), LaurentPoly(1));
  EXPECT_EQ(hecke::wt(1).to_string(), "+1*q^1 -2 +1*q^-1");
  EXPECT_EQ(hecke::wt(2).to_string(), "+1*q^2 -2*q^1 +2 -2*q^-1 +1*q^-2");
}

TEST(Wt, BarInvariantAndVanishesAtOne) {
  for (int r = 1; r <= 12; ++r) {
    const auto w = hecke::wt(r);
    EXPECT_EQ(w.bar(), w) << r;
    EXPECT_EQ(w.value_at_one(), 0) << r;
    EXPECT_EQ(w.max_exp(), r);
    EXPECT_EQ(w.min_exp(), -r);
  }
}

TEST(Wt, TelescopingForm) {
  // (q + 1) wt(r) = (q - 1)(q^r - q^{-r})
  const LaurentPoly q_plus_one{{1, 1}, {0, 1}};
  const LaurentPoly q_minus_one{{1, 1}, {0, -1}};
  for (int r = 1; r <= 10; ++r) {
    const LaurentPoly diff{{r, 1}, {-r, -1}};
    EXPECT_EQ(q_plus_one * hecke::wt(r), q_minus_one * diff);
  }
}

TEST(Wt, NegativeIndex) {
  EXPECT_THROW(hecke::wt(-1), hecke::NegativeIndex);
}

TEST(EnumerateKostant, RankThreeExample) {
  const auto sys = hecke::build_type_a(3);
  const auto parts = hecke::enumerate_kostant(sys, WeightVector{2, 1});
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0].multiplicities, (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(parts[1].multiplicities, (std::vector<int>{2, 0, 1}));
}

TEST(EnumerateKostant, EdgeCases) {
  const auto sys = hecke::build_type_a(3);
  const auto zero = hecke::enumerate_kostant(sys, WeightVector{0, 0});
  ASSERT_EQ(zero.size(), 1U);
  EXPECT_EQ(zero[0].multiplicities, (std::vector<int>{0, 0, 0}));
  EXPECT_TRUE(hecke::enumerate_kostant(sys, WeightVector{1, -1}).empty());
  EXPECT_THROW(hecke::enumerate_kostant(sys, WeightVector{1, 1, 1}), hecke::DimensionMismatch);
}

TEST(EnumerateKostant, MatchesBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    const auto sys = hecke::build_type_a(n);
    for (const auto& lambda : box(n, n == 4 ? 3 : 4)) {
      const auto parts = hecke::enumerate_kostant(sys, lambda);
      EXPECT_EQ(parts, hecke::testing::brute_force_kostant(n, lambda)) << to_string(lambda);
      for (const auto& p : parts) EXPECT_EQ(hecke::weight_of(sys, p), lambda);
    }
  }
}

TEST(TraceKostant, FrozenValues) {
  const auto sys = hecke::build_type_a(3);
  EXPECT_EQ(hecke::trace_kostant(sys, WeightVector{2, 1}).to_string(),
            "+1*q^3 -3*q^2 +3*q^1 -2 +3*q^-1 -3*q^-2 +1*q^-3");
  EXPECT_EQ(hecke::trace_kostant(sys, WeightVector{1, 2}).to_string(),
            "+1*q^3 -3*q^2 +3*q^1 -2 +3*q^-1 -3*q^-2 +1*q^-3");
  EXPECT_EQ(hecke::trace_kostant(sys, WeightVector{0, 0}), LaurentPoly(1));
  EXPECT_TRUE(hecke::trace_kostant(sys, WeightVector{1, -1}).is_zero());
  EXPECT_EQ(hecke::trace_kostant(hecke::build_type_a(2), WeightVector{1}), hecke::wt(1));
}

TEST(TraceKostant, DpMatchesNaive) {
  for (int n = 2; n <= 4; ++n) {
    const auto sys = hecke::build_type_a(n);
    hecke::KostantEvaluator eval(n);
    for (const auto& lambda : box(n, 4)) {
      EXPECT_EQ(eval.trace(lambda), hecke::trace_kostant_naive(sys, lambda)) << to_string(lambda);
    }
    EXPECT_GT(eval.memo_size(), 0U);
  }
}

TEST(TraceKostant, BarInvariantWithKnownValueAtOne) {
  // At q = 1 every wt(r) with r > 0 vanishes, so only the empty partition survives.
  for (int n = 2; n <= 5; ++n) {
    hecke::KostantEvaluator eval(n);
    for (const auto& lambda : box(n, 3)) {
      const auto t = eval.trace(lambda);
      EXPECT_EQ(t.bar(), t);
      EXPECT_EQ(t.value_at_one(), lambda.is_zero() ? 1 : 0);
    }
  }
}

TEST(TraceKostant, EvaluatorRejectsWrongRank) {
  hecke::KostantEvaluator eval(4);
  EXPECT_THROW(eval.trace(WeightVector{1, 1}), hecke::DimensionMismatch);
}
