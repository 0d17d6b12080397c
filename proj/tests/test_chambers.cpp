#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hecke/chambers.hpp"

using hecke::ChamberStatus;
using hecke::Permutation;
using hecke::WeightVector;

namespace {

std::vector<std::string> words(const std::vector<Permutation>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

}  // namespace

TEST(ClassifyChamber, Interior) {
  EXPECT_EQ(hecke::classify_chamber(WeightVector{2, 1}).to_string(), "interior(m=1)");
  EXPECT_EQ(hecke::classify_chamber(WeightVector{1, 2}).to_string(), "interior(m=2)");
  EXPECT_EQ(hecke::classify_chamber(WeightVector{3, 1, 2}).to_string(), "interior(m=2)");
  EXPECT_EQ(hecke::classify_chamber(WeightVector{5}).to_string(), "interior(m=1)");
}

TEST(ClassifyChamber, Boundary) {
  const auto c = hecke::classify_chamber(WeightVector{1, 1});
  EXPECT_EQ(c.status, ChamberStatus::Boundary);
  EXPECT_EQ(c.boundary, (std::vector<int>{1, 2}));
  EXPECT_EQ(c.to_string(), "boundary{1,2}");
  EXPECT_EQ(hecke::classify_chamber(WeightVector{0, 0}).to_string(), "boundary{1,2}");
  EXPECT_EQ(hecke::classify_chamber(WeightVector{0}).to_string(), "boundary{1}");
  EXPECT_EQ(hecke::classify_chamber(WeightVector{2, 2, 1}).to_string(), "boundary{1}");
}

TEST(ClassifyChamber, OutsideAndNoChamber) {
  EXPECT_EQ(hecke::classify_chamber(WeightVector{1, -1}).to_string(), "outside_Q+");
  EXPECT_EQ(hecke::classify_chamber(WeightVector{1, 2, 1}).to_string(), "inside_Q+_no_chamber");
}

TEST(ChamberGenerators, RankThree) {
  const auto g1 = hecke::chamber_generators({3, 1});
  ASSERT_EQ(g1.size(), 2U);
  EXPECT_EQ(g1[0].coords, (std::vector<int>{1, 0}));
  EXPECT_EQ(g1[1].coords, (std::vector<int>{1, 1}));
  const auto g2 = hecke::chamber_generators({3, 2});
  ASSERT_EQ(g2.size(), 2U);
  EXPECT_EQ(g2[0].coords, (std::vector<int>{0, 1}));
  EXPECT_EQ(g2[1].coords, (std::vector<int>{1, 1}));
  EXPECT_THROW(hecke::chamber_generators({3, 3}), hecke::OutOfRange);
  EXPECT_THROW(hecke::chamber_generators({1, 1}), hecke::RankTooSmall);
}

TEST(ChamberGenerators, InteriorPointsAreStrictlyInside) {
  // A strictly positive combination of the generators is interior to its chamber.
  for (int n = 2; n <= 7; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
      int weight = 1;
      for (const auto& g : hecke::chamber_generators({n, m})) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += weight * g.coords[k];
        weight += 1;
      }
      const auto c = hecke::classify_chamber(WeightVector(a));
      EXPECT_TRUE(c.interior()) << n << "," << m << ": " << c.to_string();
      EXPECT_EQ(c.m, m);
    }
  }
}

TEST(BareissDeterminant, SmallMatrices) {
  using M = std::vector<std::vector<hecke::BigInt>>;
  EXPECT_EQ(hecke::bareiss_determinant(M{}), 1);
  EXPECT_EQ(hecke::bareiss_determinant(M{{5}}), 5);
  EXPECT_EQ(hecke::bareiss_determinant(M{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(hecke::bareiss_determinant(M{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
  EXPECT_EQ(hecke::bareiss_determinant(M{{1, 2}, {2, 4}}), 0);
}

TEST(ConeContainsChamber, RankThreePerPermutation) {
  // Images {|w alpha_1|, |w alpha_2|} for each w in S_3 and the chambers they cover.
  const std::set<std::string> m1{"123", "213", "312", "321"};
  const std::set<std::string> m2{"123", "132", "231", "321"};
  for (const auto& w : hecke::all_permutations(3)) {
    const auto basis = hecke::image_of_simple_roots(w);
    EXPECT_EQ(hecke::cone_contains_chamber({3, 1}, basis), m1.count(w.to_string()) == 1)
        << w.to_string();
    EXPECT_EQ(hecke::cone_contains_chamber({3, 2}, basis), m2.count(w.to_string()) == 1)
        << w.to_string();
  }
}

TEST(ConeContainsChamber, Errors) {
  const std::vector<hecke::RootVector> dependent{hecke::make_root(3, 1, 2), hecke::make_root(3, 1, 2)};
  EXPECT_THROW(hecke::cone_contains_chamber({3, 1}, dependent), hecke::SingularBasis);
  const std::vector<hecke::RootVector> short_basis{hecke::make_root(3, 1, 2)};
  EXPECT_THROW(hecke::cone_contains_chamber({3, 1}, short_basis), hecke::DimensionMismatch);
}

TEST(Wset, SmallCases) {
  EXPECT_EQ(words(hecke::wset(2, 1)), (std::vector<std::string>{"12", "21"}));
  EXPECT_EQ(words(hecke::wset(3, 1)), (std::vector<std::string>{"123", "213", "312", "321"}));
  EXPECT_EQ(words(hecke::wset(3, 2)), (std::vector<std::string>{"123", "132", "231", "321"}));
  EXPECT_THROW(hecke::wset(3, 0), hecke::OutOfRange);
}

TEST(Wset, RecursionMatchesDirectFilter) {
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      const auto rec = hecke::wset(n, m);
      EXPECT_EQ(rec, hecke::wset_direct(n, m)) << n << "," << m;
      EXPECT_EQ(rec.size(), std::size_t{1} << (n - 1));
    }
  }
}

TEST(Wset, MirrorSymmetry) {
  // Conjugation by w_0 swaps the chambers m and n - m.
  for (int n = 2; n <= 7; ++n) {
    const auto w0 = Permutation::longest(n);
    for (int m = 1; m <= n - 1; ++m) {
      std::vector<Permutation> mirrored;
      for (const auto& w : hecke::wset(n, m)) mirrored.push_back(w0 * w * w0);
      std::sort(mirrored.begin(), mirrored.end());
      EXPECT_EQ(mirrored, hecke::wset(n, n - m)) << n << "," << m;
    }
  }
}

TEST(Wset, ClosedUnderRightLongest) {
  for (int n = 2; n <= 7; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      const auto ws = hecke::wset(n, m);
      const std::set<Permutation> s(ws.begin(), ws.end());
      for (const auto& w : ws) EXPECT_EQ(s.count(w.times_longest()), 1U);
    }
  }
}

TEST(Permutation, Basics) {
  const Permutation w({2, 3, 1});
  EXPECT_EQ(w.inverse(), Permutation({3, 1, 2}));
  EXPECT_EQ(w * w.inverse(), Permutation::identity(3));
  EXPECT_EQ(Permutation::identity(3).times_longest(), Permutation::longest(3));
  EXPECT_EQ(Permutation({2, 1}).embedded(1, 4), Permutation({1, 3, 2, 4}));
  EXPECT_EQ(hecke::all_permutations(4).size(), 24U);
  EXPECT_THROW(Permutation({1, 1, 2}), hecke::OutOfRange);
  EXPECT_THROW(Permutation({0, 1}), hecke::OutOfRange);
}
