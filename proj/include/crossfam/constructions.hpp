#pragma once

// Constructors for the named families and the extremal family pairs.
//
// Every pair builder uses the lexicographically smallest anchors ({1..t},
// {1..k+1}, ...) and, without a seed, the lexicographically first choice of
// each free sub-collection. With a seed the free sub-collections are drawn
// uniformly instead; anchors stay canonical.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/random.hpp"

namespace crossfam {

namespace detail {

inline void require_within(const Subset& s, int n, const char* name) {
  require(s.universe() == n, std::string(name) + " lives over the wrong universe");
}

inline std::int64_t to_i64(const BigCount& v) { return v.convert_to<std::int64_t>(); }

}  // namespace detail

/// H1(X, W; k): k-subsets of X containing W.
inline SetFamily h1(int n, const Subset& X, const Subset& W, int k) {
  detail::require_within(X, n, "h1: X");
  detail::require_within(W, n, "h1: W");
  require(W.is_subset_of(X), "h1: W must be a subset of X");
  require(W.size() <= k && k <= X.size(), "h1: need |W| <= k <= |X|");
  return SetFamily(n, k, extensions(W, X - W, k - W.size()));
}

/// H2(X, W; k): k-subsets F of [n] with F ∩ X = W.
inline SetFamily h2(int n, const Subset& X, const Subset& W, int k) {
  detail::require_within(X, n, "h2: X");
  detail::require_within(W, n, "h2: W");
  require(W.is_subset_of(X), "h2: W must be a subset of X");
  require(k >= W.size(), "h2: need k >= |W|");
  require(n - X.size() >= k - W.size(), "h2: no room outside X (need n - |X| >= k - |W|)");
  return SetFamily(n, k, extensions(W, Subset::full(n) - X, k - W.size()));
}

/// M1(Y; k, t): k-subsets meeting Y in at least t elements.
inline SetFamily m1(int n, const Subset& Y, int k, int t) {
  detail::require_within(Y, n, "m1: Y");
  require(t >= 1 && t <= k && k <= n, "m1: need 1 <= t <= k <= n");
  require(Y.size() == t + 1, "m1: need |Y| = t + 1");
  std::vector<Subset> out;
  const Subset outside = Subset::full(n) - Y;
  for (int inside = t; inside <= std::min(k, Y.size()); ++inside) {
    for (const auto& core : extensions(Subset(n), Y, inside)) {
      auto ext = extensions(core, outside, k - inside);
      out.insert(out.end(), ext.begin(), ext.end());
    }
  }
  return SetFamily(n, k, std::move(out));
}

/// M2(X, W; t): (t+1)-subsets of X meeting W in exactly t - 1 elements.
inline SetFamily m2(int n, const Subset& X, const Subset& W, int t) {
  detail::require_within(X, n, "m2: X");
  detail::require_within(W, n, "m2: W");
  require(t >= 1, "m2: need t >= 1");
  require(W.is_subset_of(X), "m2: W must be a subset of X");
  require(W.size() == t, "m2: need |W| = t");
  require(t + 1 <= n, "m2: need t + 1 <= n");
  std::vector<Subset> out;
  for (const auto& part : extensions(Subset(n), W, t - 1)) {
    auto ext = extensions(part, X - W, 2);
    out.insert(out.end(), ext.begin(), ext.end());
  }
  return SetFamily(n, t + 1, std::move(out));
}

/// F = G = H1([n], {1..t}; k).
inline FamilyPair star_pair(int n, int k, int t, int s = 1) {
  Params{n, k, t, s}.validate();
  const SetFamily star = h1(n, Subset::full(n), Subset::range(n, 1, t), k);
  return FamilyPair(star, star, t, s);
}

namespace detail {

// First `count` members of `pool` (already lexicographic), or a uniform draw.
inline std::vector<Subset> choose(const std::vector<Subset>& pool, std::size_t count,
                                  std::optional<std::uint64_t> seed, Rng& rng) {
  require(count <= pool.size(), "construction: not enough candidates to choose from");
  if (!seed) return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count)};
  return sample_without_replacement(pool, count, rng);
}

}  // namespace detail

/// The s-almost but not cross-t-intersecting pair with product g1:
/// F = H1([n], W; k) \ A and G = H1([n], W; k) ∪ B, where X = {1..k+1},
/// W = {1..t}, A takes C(n-k-1, k-t) - s members of H2(X, W; k) and B takes
/// min{t, s} members of C(X, k) \ H1(X, W; k).
inline FamilyPair thm2_pair(int n, int k, int t, int s, std::optional<std::uint64_t> seed = std::nullopt) {
  Params{n, k, t, s}.validate();
  require(s >= 1, "thm2_pair: need s >= 1");
  require(k >= t + 1, "thm2_pair: need k >= t + 1");
  require(n >= k + 1, "thm2_pair: need n >= k + 1");
  const BigCount room = binomial(n - k - 1, k - t);
  require(room >= s, "thm2_pair: need C(n-k-1, k-t) >= s");

  Rng rng(seed.value_or(0));
  const Subset X = Subset::range(n, 1, k + 1);
  const Subset W = Subset::range(n, 1, t);
  const SetFamily star = h1(n, Subset::full(n), W, k);

  const SetFamily h2_family = h2(n, X, W, k);
  const auto a_size = static_cast<std::size_t>(detail::to_i64(room) - s);
  const SetFamily A(n, k, detail::choose(h2_family.members(), a_size, seed, rng));

  std::vector<Subset> b_pool;
  for (const auto& sub : extensions(Subset(n), X, k))
    if (!W.is_subset_of(sub)) b_pool.push_back(sub);
  const SetFamily B(n, k, detail::choose(b_pool, static_cast<std::size_t>(std::min(t, s)), seed, rng));

  return FamilyPair(star.minus(A), star.unite(B), t, s);
}

/// Room for the s extra members of the singleton pair:
/// sum_{i=0}^{t-1} C(t+1, i) C(n-t-1, t-i+1).
inline BigCount singleton_room(int n, int t) {
  BigCount total = 0;
  for (int i = 0; i <= t - 1; ++i) total += binomial(t + 1, i) * binomial(n - t - 1, t - i + 1);
  return total;
}

/// F = {Y}, G = M1(Y; t+1, t) ∪ C with Y = {1..t+1} and C an s-subset of
/// the (t+1)-sets outside M1. Product g2.
inline FamilyPair thm3_singleton_pair(int n, int t, int s, std::optional<std::uint64_t> seed = std::nullopt) {
  Params{n, t + 1, t, s}.validate();
  require(s >= 1, "thm3_singleton_pair: need s >= 1");
  require(singleton_room(n, t) >= s, "thm3_singleton_pair: room condition violated");
  const int k = t + 1;
  const Subset Y = Subset::range(n, 1, t + 1);
  const SetFamily M = m1(n, Y, k, t);

  std::vector<Subset> extra;
  if (!seed) {
    for (const auto& c : enumerate_k_subsets(n, k)) {
      if (intersection_size(c, Y) < t) extra.push_back(c);
      if (static_cast<int>(extra.size()) == s) break;
    }
  } else {
    // Rejection sampling: the complement of M1 is most of C([n], t+1) for
    // large n, but when it is small fall back to listing it.
    Rng rng(*seed);
    const BigCount room = singleton_room(n, t);
    if (room <= 4096) {
      std::vector<Subset> pool;
      for (const auto& c : enumerate_k_subsets(n, k))
        if (intersection_size(c, Y) < t) pool.push_back(c);
      extra = sample_without_replacement(pool, static_cast<std::size_t>(s), rng);
    } else {
      SetFamily seen(n, k);
      while (static_cast<int>(seen.size()) < s) {
        Subset c = random_k_subset(n, k, rng);
        if (intersection_size(c, Y) < t) seen.insert(c);
      }
      extra = seen.members();
    }
  }
  const SetFamily F(n, k, {Y});
  return FamilyPair(F, M.unite(SetFamily(n, k, std::move(extra))), t, s);
}

/// Checks that D is an (s+2)-subset of M2(Z, W; t) in which every element of
/// Z \ W lies in exactly two members.
inline bool is_cycle_selection(const SetFamily& D, const Subset& Z, const Subset& W, int t) {
  const int n = D.n();
  const SetFamily allowed = m2(n, Z, W, t);
  for (const auto& d : D)
    if (!allowed.contains(d)) return false;
  const Subset free = Z - W;
  if (static_cast<int>(D.size()) != free.size()) return false;
  for (int z : free.elements()) {
    int deg = 0;
    for (const auto& d : D) deg += d.contains(z);
    if (deg != 2) return false;
  }
  return true;
}

/// F = H1(Z, W; t+1), G = H1([n], W; t+1) ∪ D with Z = {1..t+s+2}, W = {1..t}.
/// D walks the cycle z_1 z_2 ... z_{s+2} z_1 on Z \ W; each edge is completed
/// by the t-1 smallest elements of W. With a seed, the cycle order and each
/// member's (t-1)-subset of W are random.
inline FamilyPair thm3_cycle_pair(int n, int t, int s, std::optional<std::uint64_t> seed = std::nullopt) {
  Params{n, t + 1, t, s}.validate();
  require(s >= 1, "thm3_cycle_pair: need s >= 1");
  require(n >= t + s + 2, "thm3_cycle_pair: need n >= t + s + 2");
  const int k = t + 1;
  const Subset Z = Subset::range(n, 1, t + s + 2);
  const Subset W = Subset::range(n, 1, t);
  const SetFamily F = h1(n, Z, W, k);
  const SetFamily star = h1(n, Subset::full(n), W, k);

  std::vector<int> ring = (Z - W).elements();
  Rng rng(seed.value_or(0));
  if (seed) ring = sample_without_replacement(ring, ring.size(), rng);
  const int len = static_cast<int>(ring.size());
  std::vector<Subset> cycle;
  for (int i = 0; i < len; ++i) {
    Subset member = Subset::range(n, 1, t - 1);
    if (seed && t >= 2) member = Subset::from_elements(n, sample_without_replacement(W.elements(), t - 1, rng));
    member.insert(ring[i]);
    member.insert(ring[(i + 1) % len]);
    cycle.push_back(member);
  }
  return FamilyPair(F, star.unite(SetFamily(n, k, std::move(cycle))), t, s);
}

/// The cross-t-intersecting pair (H1([n], Y; k), M1(Y; k, t)) with Y = {1..t+1}.
inline FamilyPair cross_pair(int n, int k, int t, int s = 1) {
  Params{n, k, t, s}.validate();
  require(k >= t + 1, "cross_pair: need k >= t + 1");
  const Subset Y = Subset::range(n, 1, t + 1);
  return FamilyPair(h1(n, Subset::full(n), Y, k), m1(n, Y, k, t), t, s);
}

/// Declarative description of any constructor call.
struct ConstructionSpec {
  std::string kind;  ///< h1 h2 m1 m2 star_pair thm2_pair thm3_singleton_pair thm3_cycle_pair cross_pair
  Params params;
  std::map<std::string, std::vector<int>> anchors;  ///< "X", "W", "Y" as needed
  std::optional<std::uint64_t> seed;

  friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

inline const std::vector<std::string>& construction_kinds() {
  static const std::vector<std::string> kinds{"h1",        "h2",        "m1",
                                              "m2",        "star_pair", "thm2_pair",
                                              "thm3_singleton_pair", "thm3_cycle_pair", "cross_pair"};
  return kinds;
}

using Construction = std::variant<SetFamily, FamilyPair>;

inline Construction build(const ConstructionSpec& spec) {
  const auto& p = spec.params;
  auto anchor = [&](const char* name) {
    auto it = spec.anchors.find(name);
    require(it != spec.anchors.end(), spec.kind + ": missing anchor " + name);
    return Subset::from_elements(p.n, it->second);
  };
  if (spec.kind == "h1") return h1(p.n, anchor("X"), anchor("W"), p.k);
  if (spec.kind == "h2") return h2(p.n, anchor("X"), anchor("W"), p.k);
  if (spec.kind == "m1") return m1(p.n, anchor("Y"), p.k, p.t);
  if (spec.kind == "m2") return m2(p.n, anchor("X"), anchor("W"), p.t);
  if (spec.kind == "star_pair") return star_pair(p.n, p.k, p.t, p.s);
  if (spec.kind == "thm2_pair") return thm2_pair(p.n, p.k, p.t, p.s, spec.seed);
  if (spec.kind == "thm3_singleton_pair") return thm3_singleton_pair(p.n, p.t, p.s, spec.seed);
  if (spec.kind == "thm3_cycle_pair") return thm3_cycle_pair(p.n, p.t, p.s, spec.seed);
  if (spec.kind == "cross_pair") return cross_pair(p.n, p.k, p.t, p.s);
  throw InvalidArgument("construct: unknown kind '" + spec.kind + "'");
}

}  // namespace crossfam
