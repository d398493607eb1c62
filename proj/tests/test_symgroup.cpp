#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <symxform/symgroup.hpp>

using namespace symxform;

TEST(Permutations, CountsAndSigns) {
  const auto p1 = enumerate_permutations(1);
  ASSERT_EQ(p1.size(), 1u);
  EXPECT_EQ(p1[0].sign(), 1);

  const auto p2 = enumerate_permutations(2);
  ASSERT_EQ(p2.size(), 2u);
  EXPECT_EQ(p2[0].mapping(), (std::vector<int>{0, 1}));
  EXPECT_EQ(p2[0].sign(), 1);
  EXPECT_EQ(p2[1].mapping(), (std::vector<int>{1, 0}));
  EXPECT_EQ(p2[1].sign(), -1);

  for (int n = 2; n <= 6; ++n) {
    const auto ps = enumerate_permutations(n);
    EXPECT_EQ(ps.size(), factorial(n));
    int sum = 0;
    for (const auto& p : ps) sum += p.sign();
    EXPECT_EQ(sum, 0) << "n=" << n;
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    EXPECT_EQ(std::set<Permutation>(ps.begin(), ps.end()).size(), ps.size());
  }
}

TEST(Permutations, SignCountsInversions) {
  for (const auto& p : enumerate_permutations(5)) {
    int inv = 0;
    const auto& m = p.mapping();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) inv += m[i] > m[j];
    EXPECT_EQ(p.sign(), inv % 2 ? -1 : 1);
  }
}

TEST(Permutations, SizeLimits) {
  EXPECT_THROW(enumerate_permutations(0), SizeLimitError);
  EXPECT_THROW(enumerate_permutations(11), SizeLimitError);
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
}

TEST(Permutations, SignIsMultiplicative) {
  std::mt19937_64 rng(7);
  const auto& ps = permutations(6);
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto& a = ps[pick(rng)];
    const auto& b = ps[pick(rng)];
    EXPECT_EQ(a.compose(b).sign(), a.sign() * b.sign());
    EXPECT_EQ(a.compose(a.inverse()), Permutation::identity(6));
  }
}

TEST(Permutations, LongestElement) {
  EXPECT_EQ(longest_element(2).mapping(), (std::vector<int>{1, 0}));
  EXPECT_EQ(longest_element(2).sign(), -1);
  EXPECT_EQ(longest_element(3).sign(), -1);
  EXPECT_EQ(longest_element(4).sign(), 1);
  EXPECT_EQ(longest_element(5).sign(), 1);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(longest_element(n).sign(), (n * (n - 1) / 2) % 2 ? -1 : 1);
}

TEST(Weights, Classification) {
  EXPECT_EQ(Weight({3, 2, 1}).dominance(), Dominance::strict);
  EXPECT_EQ(Weight({2, 2, 1}).dominance(), Dominance::weak);
  EXPECT_EQ(Weight({1, 2}).dominance(), Dominance::none);
}

TEST(DominantSort, Examples) {
  const std::vector<double> a{2, 1}, b{1, 2}, c{1, 1, 2};
  auto [wa, sa] = dominant_sort(a);
  EXPECT_EQ(wa.entries(), a);
  EXPECT_EQ(sa, 1);
  auto [wb, sb] = dominant_sort(b);
  EXPECT_EQ(wb.entries(), a);
  EXPECT_EQ(sb, -1);
  EXPECT_THROW(dominant_sort(c, true), DegenerateWeightError);
  EXPECT_NO_THROW(dominant_sort(c, false));
}

TEST(DominantSort, IdempotentAndSignMatchesPermutation) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> v(5);
    for (double& e : v) e = d(rng);
    auto [w, s] = dominant_sort(v, true);
    auto [w2, s2] = dominant_sort(w.entries(), true);
    EXPECT_EQ(w2.entries(), w.entries());
    EXPECT_EQ(s2, 1);
    // sign equals parity of the number of inversions of v
    int inv = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) inv += v[i] < v[j];
    EXPECT_EQ(s, inv % 2 ? -1 : 1);
  }
}

TEST(Stabilizer, Examples) {
  EXPECT_EQ(stabilizer_order(std::vector<int>{3, 2, 1}), 1u);
  EXPECT_EQ(stabilizer_order(std::vector<int>{2, 2, 1}), 2u);
  EXPECT_EQ(stabilizer_order(std::vector<int>{3, 3, 3}), 6u);
  EXPECT_EQ(stabilizer_order(std::vector<int>{1, 1, 2, 2, 2}), 12u);
}

TEST(Stabilizer, CountsFixingPermutationsAndDividesGroupOrder) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> m(5);
    for (int& e : m) e = d(rng);
    std::uint64_t fixing = 0;
    for (const auto& p : permutations(5)) fixing += p.apply(m) == m;
    EXPECT_EQ(stabilizer_order(m), fixing);
    EXPECT_EQ(factorial(5) % stabilizer_order(m), 0u);
  }
}

TEST(AffineReduction, Examples) {
  {
    auto [y, w] = reduce_to_affine_fundamental(std::vector<double>{1.3, -0.4});
    EXPECT_NEAR(y[0], 0.6, 1e-12);
    EXPECT_NEAR(y[1], 0.3, 1e-12);
    EXPECT_EQ(w.sign(), -1);
  }
  {
    auto [y, w] = reduce_to_affine_fundamental(std::vector<double>{0.75, 0.25, 0.5});
    EXPECT_EQ(y, (std::vector<double>{0.75, 0.5, 0.25}));
    EXPECT_EQ(w.sign(), -1);
  }
  {
    auto [y, w] = reduce_to_affine_fundamental(std::vector<double>{0.5, 0.5});
    EXPECT_EQ(y, (std::vector<double>{0.5, 0.5}));
    EXPECT_EQ(w, Permutation::identity(2));
  }
  EXPECT_EQ(fractional_part(1.0), 0.0);
  EXPECT_EQ(fractional_part(-0.25), 0.75);
}

TEST(AffineReduction, InvariantUnderIntegerShifts) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0, 1);
  std::uniform_int_distribution<int> shift(-5, 5);
  for (int t = 0; t < 100; ++t) {
    // dyadic coordinates keep x + r exact
    std::vector<double> x(4), xr(4);
    for (int i = 0; i < 4; ++i) {
      x[i] = std::floor(d(rng) * 1024) / 1024;
      xr[i] = x[i] + shift(rng);
    }
    const auto a = reduce_to_affine_fundamental(x).first;
    const auto b = reduce_to_affine_fundamental(xr).first;
    EXPECT_EQ(a, b);
    EXPECT_TRUE(std::is_sorted(a.rbegin(), a.rend()));
    for (double v : a) {
      EXPECT_GE(v, 0.0);
      EXPECT_LT(v, 1.0);
    }
  }
}

TEST(DominantWeights, EnumerationAndErrors) {
  const auto w = dominant_weights(2, 0, 2, Symmetry::anti);
  EXPECT_EQ(w, (std::vector<IntWeight>{{2, 1}, {2, 0}, {1, 0}}));
  EXPECT_EQ(dominant_weights(2, 0, 2, Symmetry::sym).size(), 6u);
  EXPECT_THROW(require_dominant(std::vector<int>{1, 1}, Symmetry::anti), DominanceError);
  EXPECT_THROW(require_dominant(std::vector<int>{1, 2}, Symmetry::sym), DominanceError);
  EXPECT_NO_THROW(require_dominant(std::vector<int>{1, 1}, Symmetry::sym));
}
