#include <algorithm>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "crossfam/family.hpp"
#include "crossfam/random.hpp"

using namespace crossfam;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(30, 3), 4060);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(9, 2), 36);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(7, -1), 0);
  EXPECT_EQ(binomial(-3, 1), 0);
}

TEST(Binomial, PascalIdentityUpTo200) {
  for (int n = 1; n <= 200; ++n)
    for (int r = 1; r <= n; ++r) ASSERT_EQ(binomial(n, r), binomial(n - 1, r) + binomial(n - 1, r - 1)) << n << " " << r;
}

TEST(Binomial, LargeValueIsExact) {
  // C(100, 50) = 100891344545564193334812497256
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Ipow, Basics) {
  EXPECT_EQ(ipow(3, 0), 1);
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_EQ(ipow(2, 100).str(), "1267650600228229401496703205376");
}

TEST(Params, Validation) {
  EXPECT_NO_THROW((Params{5, 2, 1, 1}.validate()));
  EXPECT_NO_THROW((Params{5, 2, 1, 0}.validate()));
  EXPECT_THROW((Params{5, 2, 0, 1}.validate()), InvalidArgument);
  EXPECT_THROW((Params{5, 2, 3, 1}.validate()), InvalidArgument);
  EXPECT_THROW((Params{2, 3, 1, 1}.validate()), InvalidArgument);
  EXPECT_THROW((Params{5, 2, 1, -1}.validate()), InvalidArgument);
}

TEST(Subset, BasicOperations) {
  Subset a(10, {1, 3, 5});
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(3));
  EXPECT_FALSE(a.contains(4));
  EXPECT_EQ(a.elements(), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(a.min_element(), 1);
  EXPECT_EQ(a.max_element(), 5);
  EXPECT_EQ(a.to_string(), "{1,3,5}");
  a.erase(3);
  EXPECT_EQ(a.elements(), (std::vector<int>{1, 5}));
  EXPECT_THROW(a.insert(11), InvalidArgument);
  EXPECT_THROW(a.insert(0), InvalidArgument);
  EXPECT_TRUE(Subset(10, {1, 5}).is_subset_of(Subset(10, {1, 2, 5})));
  EXPECT_FALSE(Subset(10, {1, 6}).is_subset_of(Subset(10, {1, 2, 5})));
  EXPECT_EQ((Subset(6, {1, 2}) | Subset(6, {2, 3})), Subset(6, {1, 2, 3}));
  EXPECT_EQ((Subset(6, {1, 2}) & Subset(6, {2, 3})), Subset(6, {2}));
  EXPECT_EQ((Subset(6, {1, 2}) - Subset(6, {2, 3})), Subset(6, {1}));
  EXPECT_TRUE(Subset(4).empty());
  EXPECT_EQ(Subset::full(4).elements(), (std::vector<int>{1, 2, 3, 4}));
}

TEST(Subset, MultiWordUniverse) {
  Subset a(130, {1, 64, 65, 128, 130});
  Subset b(130, {64, 65, 129, 130});
  EXPECT_EQ(a.size(), 5);
  EXPECT_EQ(intersection_size(a, b), 3);
  EXPECT_EQ(a.max_element(), 130);
  EXPECT_EQ((a & b).elements(), (std::vector<int>{64, 65, 130}));
}

TEST(IntersectionSize, Examples) {
  EXPECT_EQ(intersection_size(Subset(5, {1, 2, 3}), Subset(5, {2, 3, 4})), 2);
  EXPECT_EQ(intersection_size(Subset(5, {1, 2}), Subset(5, {3, 4})), 0);
  const Subset a(9, {2, 4, 6});
  EXPECT_EQ(intersection_size(a, a), 3);
  EXPECT_THROW(intersection_size(Subset(5, {1}), Subset(6, {1})), InvalidArgument);
}

TEST(IntersectionSize, SymmetricAndBounded) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform_int(rng, 1, 150);
    const Subset a = random_k_subset(n, uniform_int(rng, 0, n), rng);
    const Subset b = random_k_subset(n, uniform_int(rng, 0, n), rng);
    const int ab = intersection_size(a, b);
    ASSERT_EQ(ab, intersection_size(b, a));
    ASSERT_LE(ab, std::min(a.size(), b.size()));
    // Element-list oracle.
    const auto ea = a.elements();
    const auto eb = b.elements();
    std::vector<int> common;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
    ASSERT_EQ(ab, static_cast<int>(common.size()));
  }
}

TEST(Subset, OrderMatchesElementListOrder) {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = trial % 2 ? uniform_int(rng, 1, 8) : uniform_int(rng, 60, 140);
    const Subset a = random_k_subset(n, uniform_int(rng, 0, std::min(n, 6)), rng);
    const Subset b = random_k_subset(n, uniform_int(rng, 0, std::min(n, 6)), rng);
    const auto ea = a.elements();
    const auto eb = b.elements();
    ASSERT_EQ(a < b, ea < eb) << a.to_string() << " " << b.to_string();
    ASSERT_EQ(a == b, ea == eb);
  }
  EXPECT_LT(Subset(5, {1, 2}), Subset(5, {1, 2, 3}));
  EXPECT_LT(Subset(5, {1, 2, 5}), Subset(5, {1, 3}));
  EXPECT_LT(Subset(5), Subset(5, {1}));
}

TEST(Enumerate, Examples) {
  std::vector<std::string> got;
  for (const auto& s : enumerate_k_subsets(4, 2)) got.push_back(s.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"{1,2}", "{1,3}", "{1,4}", "{2,3}", "{2,4}", "{3,4}"}));
  EXPECT_EQ(all_k_subsets(3, 3), (std::vector<Subset>{Subset(3, {1, 2, 3})}));
  EXPECT_EQ(all_k_subsets(3, 0), (std::vector<Subset>{Subset(3)}));
  EXPECT_THROW(enumerate_k_subsets(3, 4), InvalidArgument);
}

TEST(Enumerate, StrictlyIncreasingWithBinomialLengthUpTo20) {
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) {
      std::int64_t count = 0;
      Subset prev;
      bool first = true;
      for (const auto& s : enumerate_k_subsets(n, k)) {
        ASSERT_EQ(s.size(), k);
        if (!first) { ASSERT_LT(prev, s); }
        prev = s;
        first = false;
        ++count;
      }
      ASSERT_EQ(BigCount(count), binomial(n, k)) << n << " " << k;
    }
}

TEST(Enumerate, MatchesBitmaskOracle) {
  // Independent oracle: filter all 2^n masks by popcount, then sort element lists.
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<std::vector<int>> expected;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> e;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1u) e.push_back(i + 1);
        if (static_cast<int>(e.size()) == k) expected.push_back(e);
      }
      std::sort(expected.begin(), expected.end());
      std::vector<std::vector<int>> got;
      for (const auto& s : enumerate_k_subsets(n, k)) got.push_back(s.elements());
      ASSERT_EQ(got, expected);
    }
}

TEST(Extensions, AddsSubsetsOfPool) {
  const auto ext = extensions(Subset(6, {1}), Subset(6, {3, 5, 6}), 2);
  ASSERT_EQ(ext.size(), 3u);
  EXPECT_EQ(ext[0], Subset(6, {1, 3, 5}));
  EXPECT_EQ(ext[1], Subset(6, {1, 3, 6}));
  EXPECT_EQ(ext[2], Subset(6, {1, 5, 6}));
}

TEST(SetFamily, ConstructionSortsAndValidates) {
  const SetFamily f(5, 2, {Subset(5, {2, 3}), Subset(5, {1, 4})});
  EXPECT_EQ(f[0], Subset(5, {1, 4}));
  EXPECT_TRUE(f.contains(Subset(5, {2, 3})));
  EXPECT_FALSE(f.contains(Subset(5, {2, 4})));
  EXPECT_THROW(SetFamily(5, 2, {Subset(5, {1, 2}), Subset(5, {1, 2})}), InvalidArgument);
  EXPECT_THROW(SetFamily(5, 2, {Subset(5, {1, 2, 3})}), InvalidArgument);
  EXPECT_THROW(SetFamily(5, 2, {Subset(6, {1, 2})}), InvalidArgument);
  EXPECT_THROW(SetFamily::from_lists(5, 2, {{2, 1}}), InvalidArgument);
  EXPECT_THROW(SetFamily::from_lists(5, 2, {{1, 6}}), InvalidArgument);
  EXPECT_EQ(SetFamily::complete(5, 2).size(), 10u);
}

TEST(SetFamily, SetOperationsAndOrder) {
  const auto a = SetFamily::from_lists(4, 2, {{1, 2}, {1, 3}});
  const auto b = SetFamily::from_lists(4, 2, {{1, 3}, {3, 4}});
  EXPECT_EQ(a.unite(b), SetFamily::from_lists(4, 2, {{1, 2}, {1, 3}, {3, 4}}));
  EXPECT_EQ(a.minus(b), SetFamily::from_lists(4, 2, {{1, 2}}));
  SetFamily c = a;
  EXPECT_TRUE(c.insert(Subset(4, {2, 4})));
  EXPECT_FALSE(c.insert(Subset(4, {2, 4})));
  EXPECT_EQ(c.size(), 3u);
  // Family order: lexicographic over member lists, prefixes first.
  EXPECT_LT(SetFamily::from_lists(4, 2, {{1, 2}}), a);
  EXPECT_LT(a, SetFamily::from_lists(4, 2, {{1, 2}, {1, 4}}));
  EXPECT_LT(SetFamily::from_lists(4, 2, {{1, 2}, {3, 4}}), SetFamily::from_lists(4, 2, {{1, 3}}));
}
