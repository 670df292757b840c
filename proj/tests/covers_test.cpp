#include <gtest/gtest.h>

#include "crossfam/constructions.hpp"
#include "crossfam/covers.hpp"
#include "crossfam/random.hpp"

using namespace crossfam;

TEST(IsTCover, Examples) {
  const Subset Y(8, {1, 2});
  EXPECT_TRUE(is_t_cover(Y, m1(8, Y, 3, 1), 1));
  const SetFamily st = h1(5, Subset::full(5), Subset(5, {1}), 2);
  EXPECT_FALSE(is_t_cover(Subset(5, {2}), st, 1));
  EXPECT_TRUE(is_t_cover(Subset(5, {1}), st, 1));
  EXPECT_THROW(is_t_cover(Subset(5, {1}), SetFamily(5, 2), 1), InvalidArgument);
}

TEST(ComputeCovers, Examples) {
  const CoverResult a = compute_covers(h1(5, Subset::full(5), Subset(5, {1}), 2), 1);
  EXPECT_EQ(a.tau, 1);
  EXPECT_EQ(a.min_covers, (std::vector<Subset>{Subset(5, {1})}));

  const CoverResult b = compute_covers(m1(5, Subset(5, {1, 2}), 2, 1), 1);
  EXPECT_EQ(b.tau, 2);
  EXPECT_EQ(b.min_covers, (std::vector<Subset>{Subset(5, {1, 2})}));
  EXPECT_EQ(b.cover_union, Subset(5, {1, 2}));

  const CoverResult c = compute_covers(SetFamily::from_lists(5, 3, {{1, 2, 3}}), 1);
  EXPECT_EQ(c.tau, 1);
  EXPECT_EQ(c.min_covers, (std::vector<Subset>{Subset(5, {1}), Subset(5, {2}), Subset(5, {3})}));
  EXPECT_EQ(c.cover_union, Subset(5, {1, 2, 3}));

  EXPECT_THROW(compute_covers(SetFamily(5, 2), 1), InvalidArgument);
}

TEST(ComputeCovers, MatchesExhaustiveOracle) {
  for (std::uint64_t seed = 100; seed < 250; ++seed) {
    Rng rng(seed);
    const int n = uniform_int(rng, 2, 10);
    const int k = uniform_int(rng, 1, std::min(4, n));
    const int t = uniform_int(rng, 1, k);
    const SetFamily fam = random_family(n, k, uniform_int(rng, 1, 3), 4, rng);
    const CoverResult fast = compute_covers(fam, t);
    const CoverResult slow = compute_covers_exhaustive(fam, t);
    ASSERT_EQ(fast.tau, slow.tau) << "seed " << seed;
    ASSERT_EQ(fast.min_covers, slow.min_covers) << "seed " << seed;
    ASSERT_EQ(fast.cover_union, slow.cover_union);
    ASSERT_GE(fast.tau, t);
    for (const auto& T : fast.min_covers) {
      ASSERT_EQ(T.size(), fast.tau);
      ASSERT_TRUE(is_t_cover(T, fam, t));
    }
  }
}

TEST(ComputeCovers, StarHasCoveringNumberT) {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for (int t = 1; t <= k; ++t) {
        const Subset W = Subset::range(n, 1, t);
        const CoverResult r = compute_covers(h1(n, Subset::full(n), W, k), t);
        ASSERT_EQ(r.tau, t) << n << " " << k << " " << t;
        ASSERT_EQ(r.min_covers, (std::vector<Subset>{W}));
      }
}

TEST(ComputeCovers, MonotoneUnderAddingMembers) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 3, 9);
    const int k = uniform_int(rng, 1, std::min(n, 4));
    const int t = uniform_int(rng, 1, k);
    SetFamily fam = random_family(n, k, 1, 4, rng);
    const int before = compute_covers(fam, t).tau;
    fam.insert(random_k_subset(n, k, rng));
    ASSERT_GE(compute_covers(fam, t).tau, before);
  }
}

TEST(ComputeCovers, NearStarPairHasCoveringNumbersTAndTPlusOne) {
  for (int n = 6; n <= 14; ++n)
    for (int t = 1; t <= 2; ++t)
      for (int k = t + 1; k <= 4; ++k)
        for (int s = 1; s <= 2; ++s) {
          if (n < k + 1 || binomial(n - k - 1, k - t) < s) continue;
          const FamilyPair p = thm2_pair(n, k, t, s);
          ASSERT_EQ(compute_covers(p.F(), t).tau, t) << n << " " << k << " " << t << " " << s;
          ASSERT_EQ(compute_covers(p.G(), t).tau, t + 1) << n << " " << k << " " << t << " " << s;
        }
}

TEST(ComputeCoversUpTo, StopsAtTheLimit) {
  const SetFamily fam = m1(6, Subset(6, {1, 2}), 2, 1);
  EXPECT_FALSE(compute_covers_up_to(fam, 1, 1).has_value());
  const auto r = compute_covers_up_to(fam, 1, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->tau, 2);
}
