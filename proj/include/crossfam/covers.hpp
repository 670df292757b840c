#pragma once

// t-covers and the t-covering number.
//
// A t-cover of a family is any subset of [n] meeting every member in at least
// t elements. compute_covers finds the minimum size together with the complete
// list of minimum covers by iterative deepening over the cover size; each level
// is a branch-and-bound over elements ordered by descending member frequency.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

struct CoverResult {
  int tau = 0;
  std::vector<Subset> min_covers;  ///< all covers of size tau, lexicographic
  Subset cover_union;

  friend bool operator==(const CoverResult&, const CoverResult&) = default;
};

inline bool is_t_cover(const Subset& T, const SetFamily& fam, int t) {
  require(!fam.empty(), "is_t_cover: empty family");
  require(T.universe() == fam.n(), "is_t_cover: cover lives over a different universe");
  return std::all_of(fam.begin(), fam.end(), [&](const Subset& m) { return intersection_size(T, m) >= t; });
}

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const SetFamily& fam, int t) : fam_(fam), t_(t), n_(fam.n()) {
    std::vector<int> freq(n_ + 1, 0);
    for (const auto& m : fam)
      for (int e : m.elements()) ++freq[e];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return freq[a] > freq[b]; });
    // suffix_[p] = elements at order positions >= p
    suffix_.assign(n_ + 1, Subset(n_));
    for (int p = n_ - 1; p >= 0; --p) {
      suffix_[p] = suffix_[p + 1];
      suffix_[p].insert(order_[p]);
    }
  }

  /// All t-covers of exactly `size` elements.
  std::vector<Subset> covers_of_size(int size) {
    found_.clear();
    Subset chosen(n_);
    descend(0, size, chosen);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  // Every member must still be able to reach t hits using at most `budget`
  // further elements taken from positions >= pos.
  bool feasible(int pos, int budget, const Subset& chosen) const {
    const Subset& rest = suffix_[pos];
    const int words = chosen.word_count();
    for (const auto& m : fam_) {
      const int have = and_popcount(m.data(), chosen.data(), words);
      if (have >= t_) continue;
      const int avail = and_popcount(m.data(), rest.data(), words);
      if (have + std::min(budget, avail) < t_) return false;
    }
    return true;
  }

  void descend(int pos, int budget, Subset& chosen) {
    if (!feasible(pos, budget, chosen)) return;
    if (budget == 0) {
      found_.push_back(chosen);
      return;
    }
    if (n_ - pos < budget) return;
    const int e = order_[pos];
    chosen.insert(e);
    descend(pos + 1, budget - 1, chosen);
    chosen.erase(e);
    descend(pos + 1, budget, chosen);
  }

  const SetFamily& fam_;
  int t_;
  int n_;
  std::vector<int> order_;
  std::vector<Subset> suffix_;
  std::vector<Subset> found_;
};

inline CoverResult make_cover_result(int tau, std::vector<Subset> covers, int n) {
  CoverResult r;
  r.tau = tau;
  r.cover_union = Subset(n);
  for (const auto& c : covers) r.cover_union = r.cover_union | c;
  r.min_covers = std::move(covers);
  return r;
}

}  // namespace detail

/// tau_t(fam) and the family of minimum t-covers, provided tau_t(fam) <= max_size.
inline std::optional<CoverResult> compute_covers_up_to(const SetFamily& fam, int t, int max_size) {
  require(!fam.empty(), "compute_covers: empty family");
  require(t >= 1 && t <= fam.k(), "compute_covers: need 1 <= t <= k");
  detail::CoverSearch search(fam, t);
  for (int size = t; size <= std::min(max_size, fam.n()); ++size) {
    auto covers = search.covers_of_size(size);
    if (!covers.empty()) return detail::make_cover_result(size, std::move(covers), fam.n());
  }
  return std::nullopt;
}

inline CoverResult compute_covers(const SetFamily& fam, int t) {
  // [n] itself is a t-cover whenever t <= k, so the search always succeeds.
  return *compute_covers_up_to(fam, t, fam.n());
}

/// Reference implementation: test every subset of [n] in order of size.
/// Uses plain element lists only; exponential in n.
inline CoverResult compute_covers_exhaustive(const SetFamily& fam, int t) {
  require(!fam.empty(), "compute_covers: empty family");
  require(fam.n() <= 24, "compute_covers_exhaustive: n too large for exhaustive search");
  const int n = fam.n();
  std::vector<std::vector<int>> members;
  for (const auto& m : fam) members.push_back(m.elements());

  for (int size = 0; size <= n; ++size) {
    std::vector<std::vector<int>> hits;
    std::vector<int> cand(size);
    // odometer over increasing sequences 1 <= c_1 < ... < c_size <= n
    std::iota(cand.begin(), cand.end(), 1);
    while (true) {
      bool covers = true;
      for (const auto& m : members) {
        int common = 0;
        for (int x : m)
          if (std::find(cand.begin(), cand.end(), x) != cand.end()) ++common;
        if (common < t) {
          covers = false;
          break;
        }
      }
      if (covers) hits.push_back(cand);
      int i = size - 1;
      while (i >= 0 && cand[i] == n - size + i + 1) --i;
      if (i < 0) break;
      ++cand[i];
      for (int j = i + 1; j < size; ++j) cand[j] = cand[j - 1] + 1;
    }
    if (!hits.empty()) {
      std::sort(hits.begin(), hits.end());
      std::vector<Subset> covers;
      for (const auto& h : hits) covers.push_back(Subset::from_elements(n, h));
      return detail::make_cover_result(size, std::move(covers), n);
    }
  }
  throw InvalidArgument("compute_covers: no t-cover exists (t exceeds member size)");
}

}  // namespace crossfam
