#include <vector>

#include <gtest/gtest.h>

#include "crossfam/bounds.hpp"
#include "crossfam/constructions.hpp"
#include "crossfam/covers.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/random.hpp"
#include "crossfam/search.hpp"

using namespace crossfam;

namespace {

SetFamily star(int n, int k, std::initializer_list<int> center) {
  return h1(n, Subset::full(n), Subset(n, center), k);
}

FamilyPair single_pair(int n, int k, std::vector<int> a, std::vector<int> b, int t, int s) {
  return FamilyPair(SetFamily::from_lists(n, k, {a}), SetFamily::from_lists(n, k, {b}), t, s);
}

// Pairwise oracle for the s-almost property.
bool s_almost_oracle(const FamilyPair& p) {
  for (const auto& f : p.F()) {
    int c = 0;
    for (const auto& g : p.G()) c += intersection_size(f, g) < p.t();
    if (c > p.s()) return false;
  }
  for (const auto& g : p.G()) {
    int c = 0;
    for (const auto& f : p.F()) c += intersection_size(f, g) < p.t();
    if (c > p.s()) return false;
  }
  return true;
}

}  // namespace

TEST(FamilyPair, RejectsEmptyAndMismatched) {
  EXPECT_THROW(FamilyPair(SetFamily(5, 2), star(5, 2, {1}), 1, 1), InvalidArgument);
  EXPECT_THROW(FamilyPair(star(5, 2, {1}), star(6, 2, {1}), 1, 1), InvalidArgument);
  EXPECT_THROW(FamilyPair(star(5, 2, {1}), star(5, 2, {1}), 3, 1), InvalidArgument);
}

TEST(TDisjointMembers, Examples) {
  const SetFamily fam = star(5, 2, {1});
  EXPECT_EQ(t_disjoint_members(fam, Subset(5, {2, 3}), 1), SetFamily::from_lists(5, 2, {{1, 4}, {1, 5}}));
  EXPECT_TRUE(t_disjoint_members(fam, Subset(5, {1, 2}), 1).empty());
  const auto single = SetFamily::from_lists(5, 3, {{1, 2, 3}});
  EXPECT_EQ(t_disjoint_members(single, Subset(5, {1, 4, 5}), 2), single);
}

TEST(TDisjointMembers, PartitionsTheFamily) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 3, 9);
    const int k = uniform_int(rng, 1, n);
    const int t = uniform_int(rng, 1, k);
    const SetFamily fam = random_family(n, k, 1, 2, rng);
    const Subset H = random_k_subset(n, uniform_int(rng, 0, n), rng);
    const SetFamily d = t_disjoint_members(fam, H, t);
    std::vector<Subset> rest;
    for (const auto& f : fam)
      if (intersection_size(f, H) >= t) rest.push_back(f);
    const SetFamily r(n, k, rest);
    ASSERT_EQ(d.size() + r.size(), fam.size());
    ASSERT_EQ(d.unite(r), fam);
    for (const auto& f : d) ASSERT_LT(intersection_size(f, H), t);
  }
}

TEST(IsCrossT, Examples) {
  EXPECT_TRUE(is_cross_t(cross_pair(10, 3, 1)).holds);
  EXPECT_TRUE(is_cross_t(star_pair(5, 2, 1)).holds);
  const Verdict v = is_cross_t(thm2_pair(8, 3, 1, 1));
  EXPECT_FALSE(v.holds);
  ASSERT_EQ(v.total_violations, 1);
  EXPECT_EQ(v.violations[0].member, Subset(8, {1, 7, 8}));
  EXPECT_EQ(*v.violations[0].partner, Subset(8, {2, 3, 4}));
}

TEST(IsSAlmost, Examples) {
  EXPECT_TRUE(is_s_almost_cross_t(thm2_pair(8, 3, 1, 1)).holds);
  const Verdict fail = is_s_almost_cross_t(single_pair(4, 2, {1, 2}, {3, 4}, 1, 0));
  EXPECT_FALSE(fail.holds);
  EXPECT_EQ(fail.total_violations, 2);
  EXPECT_EQ(fail.violations[0].count, 1);
  EXPECT_TRUE(is_s_almost_cross_t(single_pair(4, 2, {1, 2}, {3, 4}, 1, 1)).holds);
}

TEST(IsSAlmost, WitnessCapAndFullMode) {
  // Every member of the complete family C([8],2) is 1-disjoint from 15 others.
  const SetFamily all = SetFamily::complete(8, 2);
  const FamilyPair p(all, all, 1, 1);
  const Verdict capped = is_s_almost_cross_t(p);
  EXPECT_EQ(capped.total_violations, 56);
  EXPECT_EQ(capped.violations.size(), kWitnessCap);
  EXPECT_EQ(is_s_almost_cross_t(p, {true}).violations.size(), 56u);
}

TEST(Predicates, CrossImpliesSAlmostAndMatchesOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 3, 8);
    const int k = uniform_int(rng, 1, std::min(n, 4));
    const int t = uniform_int(rng, 1, k);
    const int s = uniform_int(rng, 1, 3);
    const FamilyPair p(random_family(n, k, 1, 3, rng), random_family(n, k, 1, 3, rng), t, s);
    const bool almost = is_s_almost_cross_t(p).holds;
    ASSERT_EQ(almost, s_almost_oracle(p));
    if (is_cross_t(p).holds) { ASSERT_TRUE(almost); }
  }
}

TEST(CommonCore, Examples) {
  EXPECT_EQ(common_core(star_pair(5, 2, 1)), Subset(5, {1}));
  EXPECT_TRUE(common_core(thm2_pair(8, 3, 1, 1)).empty());
  EXPECT_EQ(common_core(single_pair(5, 3, {1, 2, 3}, {1, 2, 3}, 1, 1)), Subset(5, {1, 2, 3}));
}

TEST(PairClosure, Examples) {
  const FamilyPair st = star_pair(5, 2, 1, 1);
  EXPECT_EQ(pair_closure(st), st);
  const FamilyPair tiny = single_pair(5, 2, {1, 2}, {1, 2}, 1, 1);
  const FamilyPair grown = pair_closure(tiny);
  EXPECT_GT(grown.F().size(), 1u);
  EXPECT_GT(grown.G().size(), 1u);
  EXPECT_TRUE(grown.F().contains(Subset(5, {1, 2})));
  EXPECT_THROW(pair_closure(single_pair(4, 2, {1, 2}, {3, 4}, 1, 0)), InvalidArgument);
}

TEST(PairClosure, IdempotentExtensiveMaximal) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 4, 8);
    const int k = uniform_int(rng, 2, std::min(n - 1, 3));
    const int t = uniform_int(rng, 1, k - 1);
    const int s = uniform_int(rng, 1, 2);
    const FamilyPair p = random_s_almost_pair(Params{n, k, t, s}, 1, 4, rng);
    const FamilyPair c = pair_closure(p);
    ASSERT_TRUE(is_s_almost_cross_t(c).holds);
    ASSERT_EQ(c.F().unite(p.F()), c.F());
    ASSERT_EQ(c.G().unite(p.G()), c.G());
    ASSERT_EQ(pair_closure(c), c);
    ASSERT_TRUE(is_maximal(c).holds);
    ASSERT_EQ(maximality_scan(c), is_maximal(c));
  }
}

TEST(IsMaximal, Examples) {
  EXPECT_TRUE(is_maximal(star_pair(5, 2, 1, 1)).holds);
  const Verdict v = is_maximal(single_pair(5, 2, {1, 2}, {1, 2}, 1, 1));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.violations[0].member, Subset(5, {1, 3}));
  EXPECT_EQ(v.violations[0].side, "F");
  const SetFamily all = SetFamily::complete(4, 2);
  EXPECT_TRUE(is_maximal(FamilyPair(all, all, 1, 6)).holds);
}

TEST(IsMaximal, AgreesWithSingleAdditionOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 4, 7);
    const int k = uniform_int(rng, 2, std::min(n - 1, 3));
    const int t = uniform_int(rng, 1, k - 1);
    const int s = uniform_int(rng, 1, 2);
    const FamilyPair p = random_s_almost_pair(Params{n, k, t, s}, 1, 2, rng);
    std::int64_t addable = 0;
    for (const auto& c : enumerate_k_subsets(n, k)) {
      if (!p.F().contains(c)) {
        SetFamily F = p.F();
        F.insert(c);
        addable += s_almost_oracle(FamilyPair(F, p.G(), t, s));
      }
      if (!p.G().contains(c)) {
        SetFamily G = p.G();
        G.insert(c);
        addable += s_almost_oracle(FamilyPair(p.F(), G, t, s));
      }
    }
    const Verdict v = is_maximal(p);
    ASSERT_EQ(v.total_violations, addable);
    ASSERT_EQ(v.holds, addable == 0);
  }
}

// Minimum covers of the two sides of a maximal pair cross-t-intersect
// whenever both covering numbers are at most k (k >= t+1, n >= 2k).
TEST(Audit, MinimumCoversOfMaximalPairsCrossIntersect) {
  Rng rng(29);
  int audited = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int k = uniform_int(rng, 2, 3);
    const int n = uniform_int(rng, 2 * k, 8);
    const int t = uniform_int(rng, 1, k - 1);
    const int s = uniform_int(rng, 1, 2);
    const FamilyPair c = pair_closure(random_s_almost_pair(Params{n, k, t, s}, 1, 6, rng));
    const CoverResult cf = compute_covers(c.F(), t);
    const CoverResult cg = compute_covers(c.G(), t);
    if (cf.tau > k || cg.tau > k) continue;
    ++audited;
    for (const auto& a : cf.min_covers)
      for (const auto& b : cg.min_covers) ASSERT_GE(intersection_size(a, b), t) << a.to_string() << b.to_string();
  }
  EXPECT_GT(audited, 20);
}

// |F||G| <= f1(tau(F)) f1(tau(G)) for s-almost pairs with both covering
// numbers at most k, once n >= (t+1)(k-t+1)^2.
TEST(Audit, ProductBoundedByCoverNumbers) {
  Rng rng(31);
  int audited = 0;
  auto audit = [&](const FamilyPair& p) {
    const int k = p.k(), t = p.t();
    if (k < t + 1 || p.n() < (t + 1) * (k - t + 1) * (k - t + 1)) return;
    const CoverResult cf = compute_covers(p.F(), t);
    const CoverResult cg = compute_covers(p.G(), t);
    if (cf.tau > k || cg.tau > k) return;
    ++audited;
    ASSERT_LE(p.product(), f1(p.n(), k, t, p.s(), cf.tau) * f1(p.n(), k, t, p.s(), cg.tau));
  };
  for (int trial = 0; trial < 80; ++trial) {
    const int n = uniform_int(rng, 8, 11);
    const int s = uniform_int(rng, 1, 3);
    const FamilyPair p = random_s_almost_pair(Params{n, 2, 1, s}, 1, 3, rng);
    audit(p);
    audit(pair_closure(p));
  }
  for (int n = 18; n <= 20; ++n)
    for (int s = 1; s <= 2; ++s) {
      audit(star_pair(n, 3, 1, s));
      audit(thm2_pair(n, 3, 1, s));
      audit(cross_pair(n, 3, 1, s));
    }
  EXPECT_GT(audited, 50);
}
