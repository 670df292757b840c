#pragma once

// Exhaustive extremal search at tiny (n, k), an independent naive oracle for
// it, and the parallel maximality scan used at large n.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/parallel.hpp"
#include "crossfam/predicates.hpp"

namespace crossfam {

struct SearchResult {
  BigCount max_product;
  FamilyPair witness;  ///< smallest achiever in (F, G) family order
  std::uint64_t pairs_examined = 0;
  bool core_constraint = false;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

inline constexpr int kBruteForceCap = 16;
inline constexpr int kNaiveOracleCap = 12;

namespace detail {

inline int checked_member_count(const Params& p, int cap, const char* op) {
  p.validate();
  const BigCount count = binomial(p.n, p.k);
  require(count <= cap, std::string(op) + ": C(n,k) = " + count.str() + " exceeds the hard cap of " +
                            std::to_string(cap));
  return static_cast<int>(count);
}

// Family order on index masks. Members are indexed lexicographically, so
// families compare like Subsets over the index set: at the lowest differing
// index d, the holder of d is smaller unless the other has nothing above d.
inline bool mask_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const std::uint32_t above = d >= 31 ? 0u : (~0u << (d + 1));
  const bool a_holds = (a >> d) & 1u;
  const std::uint32_t other = a_holds ? b : a;
  const bool other_continues = (other & above) != 0;
  return a_holds ? other_continues : !other_continues;
}

struct Candidate {
  std::uint64_t product = 0;
  std::uint32_t F = 0;
  std::uint32_t G = 0;

  // Better = larger product, then smaller (F, G).
  bool better_than(const Candidate& o) const {
    if (product != o.product) return product > o.product;
    if (F != o.F) return mask_less(F, o.F);
    return mask_less(G, o.G);
  }
};

inline SetFamily family_from_mask(const std::vector<Subset>& members, std::uint32_t mask, int n, int k) {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if ((mask >> i) & 1u) out.push_back(members[i]);
  return SetFamily(n, k, std::move(out));
}

}  // namespace detail

/// Exact maximum of |F||G| over all non-empty s-almost cross-t-intersecting
/// pairs in C([n], k), optionally requiring |∩(F ∪ G)| < t.
///
/// Families are bitmasks over the C(n,k) <= 16 members. For a fixed F, the
/// members of G that are t-disjoint from no member of F can always be added,
/// so only subsets of the remaining admissible members are enumerated. The F
/// range is cut into a fixed number of blocks, each with its own pruning
/// bound, so results (including pairs_examined) do not depend on `threads`.
inline SearchResult brute_force_max(const Params& params, bool core_constraint, unsigned threads = 0) {
  const int N = detail::checked_member_count(params, kBruteForceCap, "brute_force_max");
  const int t = params.t;
  const int s = params.s;
  const auto members = all_k_subsets(params.n, params.k);

  std::vector<std::uint32_t> disj(N, 0);    // members t-disjoint from member i
  std::vector<std::uint32_t> elems(N, 0);   // element mask of member i (bit e-1)
  for (int i = 0; i < N; ++i) {
    for (int e : members[i].elements()) elems[i] |= 1u << (e - 1);
    for (int j = 0; j < N; ++j)
      if (intersection_size(members[i], members[j]) < t) disj[i] |= 1u << j;
  }
  const std::uint32_t all_elems = params.n >= 32 ? ~0u : ((1u << params.n) - 1);
  auto core_of = [&](std::uint32_t fam, std::uint32_t core) {
    for (std::uint32_t m = fam; m; m &= m - 1) core &= elems[std::countr_zero(m)];
    return core;
  };

  const std::uint64_t total = std::uint64_t{1} << N;  // F masks 1 .. total-1
  const std::size_t blocks = std::min<std::uint64_t>(64, total - 1);
  struct BlockResult {
    std::optional<detail::Candidate> best;
    std::uint64_t examined = 0;
  };
  std::vector<BlockResult> results(blocks);

  parallel_blocks(blocks, threads == 0 ? default_threads() : threads, [&](std::size_t b) {
    const std::uint64_t lo = 1 + (total - 1) * b / blocks;
    const std::uint64_t hi = 1 + (total - 1) * (b + 1) / blocks;
    BlockResult& res = results[b];
    for (std::uint64_t fm = lo; fm < hi; ++fm) {
      const auto F = static_cast<std::uint32_t>(fm);
      const int fsize = std::popcount(F);
      std::uint32_t allowed = 0;
      std::uint32_t touched = 0;
      for (int g = 0; g < N; ++g)
        if (std::popcount(F & disj[g]) <= s) allowed |= 1u << g;
      for (std::uint32_t m = F; m; m &= m - 1) touched |= disj[std::countr_zero(m)];
      const std::uint32_t free = allowed & ~touched;
      const std::uint32_t cons = allowed & touched;
      if (res.best && static_cast<std::uint64_t>(fsize) * std::popcount(allowed) < res.best->product) continue;
      const std::uint32_t coreF = core_constraint ? core_of(F, all_elems) : 0;

      // Every subset S of cons, in decreasing mask order.
      std::optional<std::uint32_t> bestG;
      for (std::uint32_t S = cons;; S = (S - 1) & cons) {
        const std::uint32_t G = free | S;
        const int gsize = std::popcount(G);
        bool skip = G == 0;
        if (!skip && bestG) {
          const int bsize = std::popcount(*bestG);
          skip = gsize < bsize || (gsize == bsize && !detail::mask_less(G, *bestG));
        }
        if (!skip && res.best && static_cast<std::uint64_t>(fsize) * gsize < res.best->product) skip = true;
        if (!skip) {
          ++res.examined;
          bool ok = true;
          for (std::uint32_t m = F; m && ok; m &= m - 1)
            ok = std::popcount(S & disj[std::countr_zero(m)]) <= s;
          if (ok && core_constraint) ok = std::popcount(core_of(G, coreF)) < t;
          if (ok) bestG = G;
        }
        if (S == 0) break;
      }
      if (!bestG) continue;
      const detail::Candidate c{static_cast<std::uint64_t>(fsize) * std::popcount(*bestG), F, *bestG};
      if (!res.best || c.better_than(*res.best)) res.best = c;
    }
  });

  SearchResult out;
  out.core_constraint = core_constraint;
  std::optional<detail::Candidate> best;
  for (const auto& r : results) {
    out.pairs_examined += r.examined;
    if (r.best && (!best || r.best->better_than(*best))) best = r.best;
  }
  require(best.has_value(), "brute_force_max: no feasible pair exists");
  out.max_product = best->product;
  out.witness = FamilyPair(detail::family_from_mask(members, best->F, params.n, params.k),
                           detail::family_from_mask(members, best->G, params.n, params.k), t, s);
  return out;
}

/// Reference implementation of brute_force_max: every pair of non-empty
/// families over member lists, checked with nested loops. Deliberately slow.
inline SearchResult naive_oracle_max(const Params& params, bool core_constraint) {
  params.validate();
  using Member = std::vector<int>;
  using Family = std::vector<Member>;
  const int n = params.n;
  const int k = params.k;

  std::vector<Member> members;
  Member current;
  std::function<void(int)> grow = [&](int next) {
    if (static_cast<int>(current.size()) == k) {
      members.push_back(current);
      return;
    }
    for (int e = next; e <= n; ++e) {
      current.push_back(e);
      grow(e + 1);
      current.pop_back();
    }
  };
  grow(1);
  require(members.size() <= static_cast<std::size_t>(kNaiveOracleCap),
          "naive_oracle_max: C(n,k) = " + std::to_string(members.size()) + " exceeds the hard cap of " +
              std::to_string(kNaiveOracleCap));

  std::vector<Family> families;
  for (std::size_t mask = 1; mask < (std::size_t{1} << members.size()); ++mask) {
    Family f;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (mask & (std::size_t{1} << i)) f.push_back(members[i]);
    families.push_back(f);
  }

  auto common = [](const Member& a, const Member& b) {
    int c = 0;
    for (int x : a)
      for (int y : b)
        if (x == y) ++c;
    return c;
  };
  auto almost = [&](const Family& A, const Family& B) {
    for (const auto& a : A) {
      int bad = 0;
      for (const auto& b : B)
        if (common(a, b) < params.t) ++bad;
      if (bad > params.s) return false;
    }
    return true;
  };
  auto core_size = [&](const Family& A, const Family& B) {
    int size = 0;
    for (int e = 1; e <= n; ++e) {
      bool everywhere = true;
      for (const auto& a : A)
        if (std::find(a.begin(), a.end(), e) == a.end()) everywhere = false;
      for (const auto& b : B)
        if (std::find(b.begin(), b.end(), e) == b.end()) everywhere = false;
      if (everywhere) ++size;
    }
    return size;
  };

  std::uint64_t examined = 0;
  std::size_t best_product = 0;
  const Family* bestF = nullptr;
  const Family* bestG = nullptr;
  for (const auto& F : families) {
    for (const auto& G : families) {
      ++examined;
      if (!almost(F, G) || !almost(G, F)) continue;
      if (core_constraint && core_size(F, G) >= params.t) continue;
      const std::size_t product = F.size() * G.size();
      const bool better = product > best_product ||
                          (product == best_product && std::tie(F, G) < std::tie(*bestF, *bestG));
      if (better) {
        best_product = product;
        bestF = &F;
        bestG = &G;
      }
    }
  }
  require(bestF != nullptr, "naive_oracle_max: no feasible pair exists");

  SearchResult out;
  out.core_constraint = core_constraint;
  out.max_product = best_product;
  out.pairs_examined = examined;
  out.witness = FamilyPair(SetFamily::from_lists(n, k, *bestF), SetFamily::from_lists(n, k, *bestG), params.t,
                           params.s);
  return out;
}

struct ScanOptions {
  unsigned threads = 0;  ///< 0 = default_threads()
  bool full = false;     ///< keep every witness
};

/// Parallel maximality check: same contract and output as is_maximal.
/// Candidates are split into fixed lexicographic blocks whose witnesses are
/// concatenated in block order, so the verdict is independent of threads.
inline Verdict maximality_scan(const FamilyPair& pair, const ScanOptions& opts = {}) {
  require_s_almost(pair, "maximality_scan");
  const auto dc = detail::DisjointCounts::of(pair);
  const auto candidates = all_k_subsets(pair.n(), pair.k());
  const std::size_t blocks = std::min<std::size_t>(256, candidates.size());
  std::vector<std::vector<Violation>> found(blocks);
  parallel_blocks(blocks, opts.threads == 0 ? default_threads() : opts.threads, [&](std::size_t b) {
    const std::size_t lo = candidates.size() * b / blocks;
    const std::size_t hi = candidates.size() * (b + 1) / blocks;
    found[b] = addable_candidates(pair, dc, candidates, lo, hi);
  });
  std::vector<Violation> all;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(all));
  return detail::make_verdict(std::move(all), VerdictOptions{opts.full}, /*sorted=*/true);
}

}  // namespace crossfam
