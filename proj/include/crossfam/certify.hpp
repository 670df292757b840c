#pragma once

// Executable proof procedures: the greedy construction of a pair of sequences
// (F_i, G_i) with |F_i ∩ G_i| < t and |F_i ∩ G_j| >= t for j < i, and the
// single-step certificate bounding |F_H| through a strict superset R of H.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossfam/family.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/random.hpp"

namespace crossfam {

struct SequencePair {
  std::vector<Subset> F_seq;
  std::vector<Subset> G_seq;
  std::size_t m = 0;
  SetFamily leftover;  ///< members of F never removed (no t-disjoint partner in G)
  BigCount bound;      ///< C(2k-2t+2, k-t+1)
};

/// Builds the sequences by repeatedly picking F_i from the remaining pool V,
/// a t-disjoint partner G_i in G, and deleting D_F(G_i; t) from V. Choices are
/// lexicographically first unless a seed asks for uniform random ones.
/// Stops when V is empty or no remaining member has a t-disjoint partner.
inline SequencePair greedy_sequences(const FamilyPair& pair, std::optional<std::uint64_t> seed = std::nullopt) {
  const int t = pair.t();
  Rng rng(seed.value_or(0));
  std::vector<Subset> V(pair.F().begin(), pair.F().end());
  SequencePair out;
  out.bound = binomial(2 * pair.k() - 2 * t + 2, pair.k() - t + 1);

  auto partners = [&](const Subset& f) {
    std::vector<Subset> p;
    for (const auto& g : pair.G())
      if (intersection_size(f, g) < t) p.push_back(g);
    return p;
  };

  while (!V.empty()) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < V.size(); ++i)
      if (!partners(V[i]).empty()) {
        candidates.push_back(i);
        if (!seed) break;
      }
    if (candidates.empty()) break;
    const std::size_t pick = seed ? candidates[uniform_below(rng, candidates.size())] : candidates.front();
    const Subset fi = V[pick];
    const auto options = partners(fi);
    const Subset gi = seed ? options[uniform_below(rng, options.size())] : options.front();
    out.F_seq.push_back(fi);
    out.G_seq.push_back(gi);
    std::erase_if(V, [&](const Subset& v) { return intersection_size(v, gi) < t; });
  }
  out.m = out.F_seq.size();
  out.leftover = SetFamily(pair.n(), pair.k(), std::move(V));
  return out;
}

/// Checks the sequence properties: (a) |F_i ∩ G_i| < t, (b) |F_i ∩ G_j| >= t
/// for j < i, and, when `require_cover` is set, (c) F is the union of the
/// D_F(G_i; t). Returns a description of the first failure, or empty.
inline std::string sequence_defect(const FamilyPair& pair, const SequencePair& seq, bool require_cover) {
  const int t = pair.t();
  if (seq.F_seq.size() != seq.m || seq.G_seq.size() != seq.m) return "sequence lengths disagree with m";
  for (std::size_t i = 0; i < seq.m; ++i) {
    if (intersection_size(seq.F_seq[i], seq.G_seq[i]) >= t) return "(a) fails at i=" + std::to_string(i + 1);
    for (std::size_t j = 0; j < i; ++j)
      if (intersection_size(seq.F_seq[i], seq.G_seq[j]) < t)
        return "(b) fails at i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1);
  }
  if (require_cover) {
    for (const auto& f : pair.F()) {
      const bool covered = std::any_of(seq.G_seq.begin(), seq.G_seq.end(),
                                       [&](const Subset& g) { return intersection_size(f, g) < t; });
      if (!covered) return "(c) fails: " + f.to_string() + " is in no D_F(G_i; t)";
    }
  }
  return {};
}

struct ChainCertificate {
  Subset H;
  Subset G1;
  Subset R;
  BigCount lhs;  ///< |F_H|
  BigCount rhs;  ///< (k-t+1)^{|R|-|H|} |F_R| + s
  bool widened = false;     ///< R was found outside H ∪ G1
  bool degenerate = false;  ///< F = D_F(G1; t), so any R works; R = H + smallest absent element
};

/// Number of members of F containing H.
inline std::size_t count_containing(const SetFamily& F, const Subset& H) {
  return static_cast<std::size_t>(
      std::count_if(F.begin(), F.end(), [&](const Subset& m) { return H.is_subset_of(m); }));
}

/// Finds R ⊋ H with |F_H| <= (k-t+1)^{|R|-|H|} |F_R| + s.
///
/// R ranges over the (|H| + t - |H ∩ G1|)-subsets of H ∪ G1 containing H,
/// lexicographically; if none certifies, the search widens to all supersets
/// of H of that size in [n]. Returns nullopt only if both searches fail.
inline std::optional<ChainCertificate> chain_certificate(const SetFamily& F, const Subset& H, const Subset& G1,
                                                         int t, int s) {
  const int n = F.n();
  const int k = F.k();
  require(H.universe() == n && G1.universe() == n, "chain_certificate: H and G1 must live over [n]");
  require(!H.empty(), "chain_certificate: H must be non-empty");
  require(t >= 1 && t <= k, "chain_certificate: need 1 <= t <= k");
  require(s >= 0, "chain_certificate: need s >= 0");
  const int overlap = intersection_size(H, G1);
  require(overlap < t, "chain_certificate: need |H ∩ G1| < t, got " + std::to_string(overlap));
  const SetFamily disjoint = t_disjoint_members(F, G1, t);
  require(static_cast<int>(disjoint.size()) <= s,
          "chain_certificate: need |D_F(G1; t)| <= s, got " + std::to_string(disjoint.size()));

  ChainCertificate cert;
  cert.H = H;
  cert.G1 = G1;
  cert.lhs = count_containing(F, H);

  auto evaluate = [&](const Subset& R) {
    cert.R = R;
    cert.rhs = ipow(k - t + 1, R.size() - H.size()) * BigCount(count_containing(F, R)) + s;
    return cert.lhs <= cert.rhs;
  };

  if (disjoint.size() == F.size()) {
    // |F_H| <= |F| <= s, so every strict superset certifies.
    Subset R = H;
    for (int e = 1; e <= n; ++e)
      if (!H.contains(e)) {
        R.insert(e);
        break;
      }
    require(R.size() > H.size(), "chain_certificate: H = [n] has no strict superset");
    evaluate(R);
    cert.degenerate = true;
    return cert;
  }

  const int extra = t - overlap;
  for (const auto& R : extensions(H, G1 - H, extra))
    if (evaluate(R)) return cert;
  for (const auto& R : extensions(H, Subset::full(n) - H, extra))
    if (evaluate(R)) {
      cert.widened = true;
      return cert;
    }
  return std::nullopt;
}

}  // namespace crossfam
