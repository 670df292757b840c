#pragma once

// Definitional predicates on pairs of families: t-disjoint members,
// cross-t-intersection, the s-almost relaxation, common core, and maximality.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

/// Two non-empty families over the same (n, k) together with (t, s).
class FamilyPair {
 public:
  FamilyPair() = default;
  FamilyPair(SetFamily F, SetFamily G, int t, int s) : F_(std::move(F)), G_(std::move(G)) {
    require(F_.n() == G_.n() && F_.k() == G_.k(), "pair: F and G live over different (n, k)");
    require(!F_.empty() && !G_.empty(), "pair: families must be non-empty");
    params_ = Params{F_.n(), F_.k(), t, s};
    params_.validate();
  }

  const SetFamily& F() const { return F_; }
  const SetFamily& G() const { return G_; }
  const Params& params() const { return params_; }
  int n() const { return params_.n; }
  int k() const { return params_.k; }
  int t() const { return params_.t; }
  int s() const { return params_.s; }

  BigCount product() const { return BigCount(F_.size()) * G_.size(); }

  friend bool operator==(const FamilyPair&, const FamilyPair&) = default;

 private:
  SetFamily F_;
  SetFamily G_;
  Params params_;
};

/// One offending item in a Verdict.
struct Violation {
  std::string side;                ///< "F" or "G": the family holding `member`
  Subset member;
  std::optional<Subset> partner;   ///< the other set of a violating pair, when pairwise
  std::int64_t count = 0;          ///< disjointness count, when counted

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation& a, const Violation& b) {
    if (auto c = a.member <=> b.member; c != 0) return c;
    if (auto c = a.side <=> b.side; c != 0) return c;
    if (a.partner.has_value() != b.partner.has_value())
      return a.partner.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.partner) {
      if (auto c = *a.partner <=> *b.partner; c != 0) return c;
    }
    return a.count <=> b.count;
  }
};

/// Pass/fail with witnesses. `holds` is true exactly when there are no violations.
struct Verdict {
  bool holds = true;
  std::vector<Violation> violations;
  std::int64_t total_violations = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline constexpr std::size_t kWitnessCap = 32;

struct VerdictOptions {
  bool full = false;  ///< keep every witness instead of the first kWitnessCap
};

namespace detail {

// Witnesses are sorted before truncation so reports do not depend on scan order.
inline Verdict make_verdict(std::vector<Violation> found, const VerdictOptions& opts, bool sorted = false) {
  Verdict v;
  v.total_violations = static_cast<std::int64_t>(found.size());
  v.holds = found.empty();
  if (!sorted) std::sort(found.begin(), found.end());
  if (!opts.full && found.size() > kWitnessCap) found.resize(kWitnessCap);
  v.violations = std::move(found);
  return v;
}

inline int count_disjoint(const Subset& x, const SetFamily& fam, int t) {
  int c = 0;
  for (const auto& m : fam) c += detail::and_popcount(x.data(), m.data(), x.word_count()) < t;
  return c;
}

}  // namespace detail

/// D_fam(H; t): members F with |F ∩ H| < t, in lexicographic order.
inline SetFamily t_disjoint_members(const SetFamily& fam, const Subset& H, int t) {
  require(H.universe() == fam.n(), "t_disjoint_members: H lives over a different universe");
  std::vector<Subset> out;
  for (const auto& m : fam)
    if (intersection_size(m, H) < t) out.push_back(m);
  return SetFamily(fam.n(), fam.k(), std::move(out));
}

/// Every member of F is t-intersecting with every member of G.
inline Verdict is_cross_t(const FamilyPair& pair, const VerdictOptions& opts = {}) {
  std::vector<Violation> found;
  for (const auto& f : pair.F())
    for (const auto& g : pair.G())
      if (intersection_size(f, g) < pair.t()) found.push_back({"F", f, g, 0});
  return detail::make_verdict(std::move(found), opts);
}

/// Each member of either family is t-disjoint with at most s members of the other.
inline Verdict is_s_almost_cross_t(const FamilyPair& pair, const VerdictOptions& opts = {}) {
  std::vector<Violation> found;
  const int t = pair.t();
  const int s = pair.s();
  for (const auto& f : pair.F())
    if (int c = detail::count_disjoint(f, pair.G(), t); c > s) found.push_back({"F", f, std::nullopt, c});
  for (const auto& g : pair.G())
    if (int c = detail::count_disjoint(g, pair.F(), t); c > s) found.push_back({"G", g, std::nullopt, c});
  return detail::make_verdict(std::move(found), opts);
}

/// Intersection of all members of F ∪ G.
inline Subset common_core(const FamilyPair& pair) {
  Subset core = Subset::full(pair.n());
  for (const auto& f : pair.F()) core = core & f;
  for (const auto& g : pair.G()) core = core & g;
  return core;
}

namespace detail {

/// Per-member disjointness counts; the state behind addability tests.
struct DisjointCounts {
  std::vector<int> f_counts;  // |D_G(F_i; t)|
  std::vector<int> g_counts;  // |D_F(G_j; t)|

  static DisjointCounts of(const FamilyPair& pair) {
    DisjointCounts dc;
    const int t = pair.t();
    dc.f_counts.reserve(pair.F().size());
    dc.g_counts.reserve(pair.G().size());
    for (const auto& f : pair.F()) dc.f_counts.push_back(count_disjoint(f, pair.G(), t));
    for (const auto& g : pair.G()) dc.g_counts.push_back(count_disjoint(g, pair.F(), t));
    return dc;
  }
};

/// Can `c` join `into` (whose partner family is `other`, with per-member
/// counts `other_counts`) without breaking the s-almost property?
inline bool addable(const Subset& c, const SetFamily& into, const SetFamily& other,
                    const std::vector<int>& other_counts, int t, int s) {
  if (into.contains(c)) return false;
  int own = 0;
  const int words = c.word_count();
  for (std::size_t j = 0; j < other.size(); ++j) {
    if (detail::and_popcount(c.data(), other[j].data(), words) < t) {
      if (++own > s) return false;
      if (other_counts[j] + 1 > s) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Addable (candidate, side) witnesses among k-subsets with lexicographic rank
/// in [first, last). Candidates come out in scan order, F before G.
inline std::vector<Violation> addable_candidates(const FamilyPair& pair, const detail::DisjointCounts& dc,
                                                 const std::vector<Subset>& candidates, std::size_t first,
                                                 std::size_t last) {
  std::vector<Violation> out;
  for (std::size_t i = first; i < last; ++i) {
    const Subset& c = candidates[i];
    if (detail::addable(c, pair.F(), pair.G(), dc.g_counts, pair.t(), pair.s()))
      out.push_back({"F", c, std::nullopt, 0});
    if (detail::addable(c, pair.G(), pair.F(), dc.f_counts, pair.t(), pair.s()))
      out.push_back({"G", c, std::nullopt, 0});
  }
  return out;
}

inline void require_s_almost(const FamilyPair& pair, const char* op) {
  require(is_s_almost_cross_t(pair).holds,
          std::string(op) + ": pair is not s-almost cross-t-intersecting; maximality is undefined");
}

/// Grows the pair to a maximal s-almost cross-t-intersecting superset.
///
/// Each pass scans C([n], k) lexicographically and offers every candidate to F
/// and then to G; passes repeat until one adds nothing.
inline FamilyPair pair_closure(const FamilyPair& pair) {
  require_s_almost(pair, "pair_closure");
  SetFamily F = pair.F();
  SetFamily G = pair.G();
  const int t = pair.t();
  const int s = pair.s();

  auto dc = detail::DisjointCounts::of(pair);

  // Inserts `c` into `into`, keeping both count vectors aligned with member positions.
  auto add = [t](const Subset& c, SetFamily& into, std::vector<int>& into_counts, const SetFamily& other,
                 std::vector<int>& other_counts) {
    into.insert(c);
    const auto pos = std::lower_bound(into.begin(), into.end(), c) - into.begin();
    into_counts.insert(into_counts.begin() + pos, detail::count_disjoint(c, other, t));
    for (std::size_t j = 0; j < other.size(); ++j)
      if (intersection_size(c, other[j]) < t) ++other_counts[j];
  };

  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& c : enumerate_k_subsets(pair.n(), pair.k())) {
      if (detail::addable(c, F, G, dc.g_counts, t, s)) {
        add(c, F, dc.f_counts, G, dc.g_counts);
        grew = true;
      }
      if (detail::addable(c, G, F, dc.f_counts, t, s)) {
        add(c, G, dc.g_counts, F, dc.f_counts);
        grew = true;
      }
    }
  }
  return FamilyPair(std::move(F), std::move(G), t, s);
}

/// Holds when no k-subset can join either side. Witnesses list addable
/// candidates in lexicographic order, each tagged with the accepting side.
inline Verdict is_maximal(const FamilyPair& pair, const VerdictOptions& opts = {}) {
  require_s_almost(pair, "is_maximal");
  const auto dc = detail::DisjointCounts::of(pair);
  const auto candidates = all_k_subsets(pair.n(), pair.k());
  return detail::make_verdict(addable_candidates(pair, dc, candidates, 0, candidates.size()), opts,
                              /*sorted=*/true);
}

}  // namespace crossfam
