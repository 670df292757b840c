#pragma once

// Seeded generators for randomized constructions and test corpora. Only the
// engine's raw output is used (std::mt19937_64 is fully specified), so a seed
// produces the same objects on every platform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/predicates.hpp"

namespace crossfam {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  require(bound > 0, "uniform_below: empty range");
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Fisher-Yates on the first `count` positions: returns `count` distinct
/// items of `pool` chosen uniformly, in selection order.
template <class T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t count, Rng& rng) {
  require(count <= pool.size(), "sample_without_replacement: not enough items");
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

/// Uniformly random k-subset of [n].
inline Subset random_k_subset(int n, int k, Rng& rng) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  const auto pick = sample_without_replacement(std::move(pool), static_cast<std::size_t>(k), rng);
  return Subset::from_elements(n, pick);
}

/// Each k-subset of [n] joins independently with probability num/den;
/// never returns an empty family.
inline SetFamily random_family(int n, int k, int num, int den, Rng& rng) {
  std::vector<Subset> chosen;
  for (const auto& c : enumerate_k_subsets(n, k))
    if (static_cast<int>(uniform_below(rng, den)) < num) chosen.push_back(c);
  if (chosen.empty()) chosen.push_back(random_k_subset(n, k, rng));
  return SetFamily(n, k, std::move(chosen));
}

/// A random s-almost cross-t-intersecting pair: draws two random families and
/// repeatedly deletes the worst offender (largest disjointness count, ties to
/// the lexicographically first, F before G) until the property holds.
inline FamilyPair random_s_almost_pair(const Params& p, int num, int den, Rng& rng) {
  p.validate();
  std::vector<Subset> F = random_family(p.n, p.k, num, den, rng).members();
  std::vector<Subset> G = random_family(p.n, p.k, num, den, rng).members();
  // Disjointness counts, kept current as offenders are deleted.
  std::vector<int> fc(F.size(), 0), gc(G.size(), 0);
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j)
      if (intersection_size(F[i], G[j]) < p.t) ++fc[i], ++gc[j];
  auto erase_at = [&](std::vector<Subset>& from, std::vector<int>& counts, std::size_t at,
                      const std::vector<Subset>& other, std::vector<int>& other_counts) {
    for (std::size_t j = 0; j < other.size(); ++j)
      if (intersection_size(from[at], other[j]) < p.t) --other_counts[j];
    from.erase(from.begin() + static_cast<std::ptrdiff_t>(at));
    counts.erase(counts.begin() + static_cast<std::ptrdiff_t>(at));
  };
  while (true) {
    int worst = p.s;
    bool in_f = false, found = false;
    std::size_t at = 0;
    for (std::size_t i = 0; i < F.size(); ++i)
      if (fc[i] > worst) worst = fc[i], in_f = true, found = true, at = i;
    for (std::size_t i = 0; i < G.size(); ++i)
      if (gc[i] > worst) worst = gc[i], in_f = false, found = true, at = i;
    if (!found) break;
    if (in_f)
      erase_at(F, fc, at, G, gc);
    else
      erase_at(G, gc, at, F, fc);
  }
  // Deleting offenders can exhaust a side; fall back to a shared single member.
  if (F.empty() || G.empty()) {
    const Subset x = random_k_subset(p.n, p.k, rng);
    F = {x};
    G = {x};
  }
  return FamilyPair(SetFamily(p.n, p.k, std::move(F)), SetFamily(p.n, p.k, std::move(G)), p.t, p.s);
}

}  // namespace crossfam
