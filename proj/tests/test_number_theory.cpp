#include <gtest/gtest.h>

#include <bit>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "powmatch/independence.hpp"
#include "powmatch/number_theory.hpp"
#include "test_support.hpp"

using namespace powmatch;
using namespace powmatch::nt;

using Pairs = std::vector<std::pair<std::uint64_t, unsigned>>;

TEST(Factorize, KnownValues) {
  EXPECT_TRUE(factorize(1).pairs.empty());
  EXPECT_EQ(factorize(12).pairs, (Pairs{{2, 2}, {3, 1}}));
  EXPECT_EQ(factorize(360).pairs, (Pairs{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(999983).pairs, (Pairs{{999983, 1}}));
  EXPECT_THROW(factorize(0), DomainError);
}

TEST(Factorize, ProductRoundTrips) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto f = factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t prev = 0;
    for (const auto& [p, a] : f.pairs) {
      EXPECT_TRUE(is_prime(p));
      EXPECT_GT(p, prev);
      EXPECT_GE(a, 1U);
      prev = p;
      for (unsigned i = 0; i < a; ++i) prod *= p;
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(TauPhi, KnownValues) {
  EXPECT_EQ(tau(36), 9U);
  EXPECT_EQ(phi(36), 12U);
  EXPECT_EQ(tau(30), 8U);
  EXPECT_EQ(phi(30), 8U);
  EXPECT_EQ(tau(1), 1U);
  EXPECT_EQ(phi(1), 1U);
}

TEST(TauPhi, AgreesWithDirectCounting) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t t = 0, p = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (n % k == 0) ++t;
      if (std::gcd(k, n) == 1) ++p;
    }
    ASSERT_EQ(tau(n), t) << n;
    ASSERT_EQ(phi(n), p) << n;
  }
}

TEST(TauLessThanPhi, FailuresAreExactlyTheListedOnes) {
  EXPECT_FALSE(tau_less_than_phi(30));
  EXPECT_TRUE(tau_less_than_phi(31));
  EXPECT_FALSE(tau_less_than_phi(24));
  std::vector<std::uint64_t> failures;
  for (std::uint64_t n = 1; n <= 20000; ++n)
    if (!tau_less_than_phi(n)) failures.push_back(n);
  EXPECT_EQ(failures, (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 10, 12, 18, 24, 30}));
}

TEST(LemmaGap, Examples) {
  const auto g31 = lemma_gap(3, 1);
  EXPECT_EQ(g31.value, 2U);
  EXPECT_EQ(g31.a_plus_one, 2U);
  EXPECT_EQ(g31.part1, LemmaGap::Part1::equality);

  const auto g51 = lemma_gap(5, 1);
  EXPECT_EQ(g51.value, 4U);
  EXPECT_EQ(g51.a_plus_one, 2U);
  EXPECT_EQ(g51.part2, LemmaGap::Part2::equality);

  const auto g21 = lemma_gap(2, 1);
  EXPECT_EQ(g21.part1, LemmaGap::Part1::exception);
  EXPECT_LT(g21.value, g21.a_plus_one);
  EXPECT_EQ(lemma_gap(2, 2).part1, LemmaGap::Part1::exception);
  EXPECT_EQ(lemma_gap(2, 3).part1, LemmaGap::Part1::equality);

  EXPECT_THROW(lemma_gap(4, 1), DomainError);
  EXPECT_THROW(lemma_gap(3, 0), DomainError);
}

TEST(LemmaGap, EqualityCasesOverRange) {
  std::set<std::pair<std::uint64_t, unsigned>> eq1, eq2;
  for (std::uint64_t p = 2; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned a = 1; a <= 20; ++a) {
      const auto g = lemma_gap(p, a);
      EXPECT_NE(g.part1, LemmaGap::Part1::violated) << p << "^" << a;
      EXPECT_NE(g.part2, LemmaGap::Part2::violated) << p << "^" << a;
      if (g.part1 == LemmaGap::Part1::equality) eq1.insert({p, a});
      if (g.part2 == LemmaGap::Part2::equality) eq2.insert({p, a});
    }
  }
  EXPECT_EQ(eq1, (std::set<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 1}}));
  EXPECT_EQ(eq2, (std::set<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 1}}));
}

TEST(LemmaGap, SecondPartAlsoTightAtThreeSquared) {
  // 3^1 * (3 - 1) = 6 = 2 * (2 + 1): a second equality case for the odd-prime bound.
  const auto g = lemma_gap(3, 2);
  EXPECT_EQ(g.value, 6U);
  EXPECT_EQ(2 * g.a_plus_one, 6U);
  EXPECT_EQ(g.part2, LemmaGap::Part2::equality);
}

TEST(Divisors, Sorted) {
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
}

TEST(Antichain, Examples) {
  const auto a12 = max_divisor_antichain(12);
  EXPECT_EQ(a12.size, 2U);
  EXPECT_EQ(a12.witness, (std::vector<std::uint64_t>{2, 3}));
  const auto a30 = max_divisor_antichain(30);
  EXPECT_EQ(a30.size, 3U);
  EXPECT_EQ(a30.witness, (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(max_divisor_antichain(97).size, 1U);
  EXPECT_EQ(max_divisor_antichain(1).size, 1U);
  EXPECT_THROW(max_divisor_antichain(720720, 16), SizeError);
}

TEST(Antichain, WitnessIsAnAntichain) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const auto a = max_divisor_antichain(n);
    ASSERT_EQ(a.witness.size(), a.size);
    for (auto x : a.witness) EXPECT_EQ(n % x, 0U);
    for (std::size_t i = 0; i < a.witness.size(); ++i)
      for (std::size_t j = i + 1; j < a.witness.size(); ++j)
        EXPECT_TRUE(a.witness[j] % a.witness[i] != 0) << n;
  }
}

TEST(Antichain, ExhaustiveSearchOnSmallLattices) {
  // Brute force over all subsets of divisors for tau(n) <= 16.
  for (std::uint64_t n = 1; n <= 720; ++n) {
    const auto d = divisors(n);
    if (d.size() > 16) continue;
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1U << d.size()); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < d.size() && ok; ++i)
        for (std::size_t j = i + 1; j < d.size() && ok; ++j)
          if ((mask >> i & 1U) && (mask >> j & 1U) && d[j] % d[i] == 0) ok = false;
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    ASSERT_EQ(max_divisor_antichain(n).size, best) << n;
  }
}

TEST(Dtk, Examples) {
  EXPECT_EQ(dtk_antichain_size(30), 3U);
  EXPECT_EQ(dtk_antichain_size(12), 2U);
  EXPECT_EQ(dtk_antichain_size(1), 1U);
}

TEST(Dtk, MatchesLatticeWidth) {
  for (std::uint64_t n = 1; n <= 2000; ++n) ASSERT_EQ(max_divisor_antichain(n).size, dtk_antichain_size(n)) << n;
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number_small(power_graph(make_cyclic(6))), 2U);
  EXPECT_EQ(independence_number_small(power_graph(make_cyclic(12))), 2U);
  SimpleGraph k5(5);
  for (Element i = 0; i < 5; ++i)
    for (Element j = i + 1; j < 5; ++j) k5.add_edge(i, j);
  EXPECT_EQ(independence_number_small(k5), 1U);
  EXPECT_EQ(independence_number_small(SimpleGraph(7)), 7U);
  EXPECT_EQ(independence_number_small(SimpleGraph(0)), 0U);
  EXPECT_THROW(independence_number_small(SimpleGraph(65)), SizeError);
  EXPECT_THROW(independence_number_small(SimpleGraph(10), 8), SizeError);
}

TEST(Independence, OracleValuesForCyclicPowerGraphs) {
  EXPECT_EQ(independence_number_small(power_graph(make_cyclic(30))), 3U);
  EXPECT_EQ(independence_number_small(power_graph(make_cyclic(60))), 4U);
}

TEST(Independence, AgreesWithSubsetSearch) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 14;
    const SimpleGraph g = powmatch::testing::random_graph(rng, n, 0.35);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      bool ok = true;
      for (Element i = 0; i < n && ok; ++i)
        for (Element j = i + 1; j < n && ok; ++j)
          if ((mask >> i & 1U) && (mask >> j & 1U) && g.has_edge(i, j)) ok = false;
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    ASSERT_EQ(independence_number_small(g), best) << "trial " << trial;
  }
}

TEST(Independence, CyclicPowerGraphAlphaIsLatticeWidth) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const std::size_t alpha = independence_number_small(power_graph(make_cyclic(n)));
    EXPECT_EQ(alpha, max_divisor_antichain(n).size) << n;
    if (n == 2 || n == 6) {
      EXPECT_EQ(alpha, phi(n)) << n;
    } else if (n > 1) {
      EXPECT_LT(alpha, phi(n)) << n;
    }
  }
}
