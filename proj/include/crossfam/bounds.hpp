#pragma once

// Bound functions f1, f2, f3, g1..g4, theorem thresholds, and exhaustive
// verification of the binomial inequality lemmas over parameter grids.
//
// Everything is exact integer arithmetic. Inequalities with rational factors
// (6/(7l) A > B and friends) are checked after clearing denominators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

using i64 = std::int64_t;

inline BigCount f1(i64 n, i64 k, i64 t, i64 s, i64 x) {
  require(t >= 1 && t <= x, "f1: need 1 <= t <= x");
  require(x <= k && k <= n, "f1: need x <= k <= n");
  const BigCount base = k - t + 1;
  const BigCount cx = binomial(x, t);
  BigCount out = ipow(k - t + 1, x - t) * cx * binomial(n - x, k - x);
  BigCount power = 1;
  for (i64 i = 0; i <= x - t - 1; ++i) {
    out += s * power * cx;
    power *= base;
  }
  return out;
}

inline BigCount f2(i64 n, i64 k, i64 t, i64 s) {
  require(t >= 1 && t <= k && k <= n, "f2: need 1 <= t <= k <= n");
  return binomial(n - t - 1, k - t - 1) + BigCount((k - t) * (k - t + 1)) * binomial(n - t - 2, k - t - 2) +
         BigCount(s * (k - t + 1));
}

inline BigCount f3(i64 n, i64 k, i64 t, i64 s, i64 x) {
  require(t >= 1 && k <= n, "f3: need t >= 1 and k <= n");
  require(t + 2 <= x && x <= k, "f3: need t + 2 <= x <= k");
  return binomial(n - t, k - t) - binomial(n - x, k - t) + ipow(k - x + 1, 2) * binomial(n - t - 2, k - t - 2) +
         BigCount(2 * s);
}

/// Product of sizes of the s-almost, not cross pair built from a star minus A plus B.
inline BigCount g1(i64 n, i64 k, i64 t, i64 s) {
  require(t >= 1 && t <= k && k <= n, "g1: need 1 <= t <= k <= n");
  require(s >= 0, "g1: need s >= 0");
  const BigCount star = binomial(n - t, k - t);
  return (star - binomial(n - k - 1, k - t) + s) * (star + std::min(t, s));
}

inline BigCount g2(i64 n, i64 t, i64 s) {
  require(t >= 1 && n >= t + 1, "g2: need 1 <= t < n");
  return BigCount((t + 1) * (n - t)) + s - t;
}

inline BigCount g3(i64 n, i64 t, i64 s) {
  require(t >= 1 && n >= t && s >= 0, "g3: need 1 <= t <= n, s >= 0");
  return BigCount((s + 2) * (n - t)) + BigCount((s + 2) * (s + 2));
}

inline BigCount g4(i64 n, i64 k, i64 t) {
  require(t >= 1 && t + 1 <= k && k <= n, "g4: need 1 <= t < k <= n");
  const BigCount a = binomial(n - t - 1, k - t - 1);
  return BigCount(t + 1) * a * binomial(n - t - 1, k - t) + a * a;
}

/// Minimum n demanded by each theorem and by the binomial comparison lemma.
struct Thresholds {
  i64 star = 0;            ///< (t+1)(2(k-t+1)^2 + 7s): star pairs are the only extremal pairs
  i64 near_star = 0;       ///< (t+1)^2 (2(k-t+1)^2 + 7s): extremal non-cross pairs are near-stars
  i64 uniform = 0;         ///< 5s(t+1)^2: (t+1)-uniform non-cross case
  i64 core_free = 0;       ///< max{k-t, t+1} (t+1)(2(k-t+1)^2 + 7s): pairs with common core < t
  i64 binomial_ratio = 0;  ///< (k-t)(k-t+1) + t: binomial ratio comparison

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

inline Thresholds thresholds(i64 k, i64 t, i64 s) {
  require(t >= 1 && t <= k && s >= 0, "thresholds: need 1 <= t <= k, s >= 0");
  const i64 core = 2 * (k - t + 1) * (k - t + 1) + 7 * s;
  Thresholds th;
  th.star = (t + 1) * core;
  th.near_star = (t + 1) * (t + 1) * core;
  th.uniform = 5 * s * (t + 1) * (t + 1);
  th.core_free = std::max(k - t, t + 1) * (t + 1) * core;
  th.binomial_ratio = (k - t) * (k - t + 1) + t;
  return th;
}

struct IntRange {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parameter grid for check_lemma. Unused dimensions are ignored by each
/// lemma; points violating the lemma's hypotheses are filtered out.
struct BoundGrid {
  IntRange k{1, 8};
  IntRange t{1, 4};
  IntRange s{1, 3};
  IntRange ell{1, 3};
  std::vector<int> n_offsets{0, 1, 7, 50, 300};  ///< added to the lemma's n threshold
  std::optional<IntRange> n;                      ///< explicit n range, replaces offsets
  std::optional<IntRange> x;                      ///< restricts the quantified x
  std::optional<IntRange> i;                      ///< restricts i in the binomial-ratio family
  std::optional<IntRange> j;                      ///< restricts j in the binomial-ratio family
};

/// One evaluated inequality instance.
struct LemmaCheck {
  std::string lemma_id;
  std::string part;
  std::map<std::string, i64> params;
  BigCount lhs;
  BigCount rhs;
  std::string relation;  ///< how lhs must compare to rhs: "<", "<=", ">", ">="
  bool pass = false;
};

struct LemmaReport {
  std::string lemma_id;
  i64 points_checked = 0;
  std::vector<LemmaCheck> counterexamples;
  std::vector<LemmaCheck> rows;  ///< every instance, only when requested

  bool verified() const { return counterexamples.empty(); }
};

inline const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"binomial-ratio", "f1-decreasing", "g2-g3",
                                           "g1-dominates-f1", "f3-peak",       "g1-vs-g4"};
  return ids;
}

namespace detail {

inline bool compare(const BigCount& lhs, const std::string& rel, const BigCount& rhs) {
  if (rel == "<") return lhs < rhs;
  if (rel == "<=") return lhs <= rhs;
  if (rel == ">") return lhs > rhs;
  if (rel == ">=") return lhs >= rhs;
  throw InvalidArgument("unknown relation " + rel);
}

class LemmaRecorder {
 public:
  LemmaRecorder(std::string id, bool keep_rows) : keep_rows_(keep_rows) { report_.lemma_id = std::move(id); }

  void check(std::string part, std::map<std::string, i64> params, BigCount lhs, const char* rel, BigCount rhs) {
    LemmaCheck c{report_.lemma_id, std::move(part), std::move(params), std::move(lhs), std::move(rhs), rel, false};
    c.pass = compare(c.lhs, c.relation, c.rhs);
    ++report_.points_checked;
    if (!c.pass) report_.counterexamples.push_back(c);
    if (keep_rows_) report_.rows.push_back(std::move(c));
  }

  LemmaReport finish() { return std::move(report_); }

 private:
  bool keep_rows_;
  LemmaReport report_;
};

inline std::vector<i64> n_values(const BoundGrid& grid, i64 threshold) {
  std::vector<i64> out;
  if (grid.n) {
    for (i64 n = std::max<i64>(grid.n->lo, threshold); n <= grid.n->hi; ++n) out.push_back(n);
  } else {
    for (int off : grid.n_offsets) out.push_back(threshold + off);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

inline IntRange clip(const std::optional<IntRange>& r, int lo, int hi) {
  if (!r) return {lo, hi};
  return {std::max(lo, r->lo), std::min(hi, r->hi)};
}

// Binomial comparison: (k-t+1)^{j-i} C(n-j, k-j) <= C(n-i, k-i) for t <= i <= j.
inline void binomial_ratio(const BoundGrid& g, LemmaRecorder& rec) {
  for (int k = g.k.lo; k <= g.k.hi; ++k)
    for (int t = std::max(1, g.t.lo); t <= std::min(g.t.hi, k - 1); ++t) {
      const i64 th = thresholds(k, t, 0).binomial_ratio;
      const IntRange ir = clip(g.i, t, k);
      for (i64 n : n_values(g, th))
        for (int i = ir.lo; i <= ir.hi; ++i) {
          const IntRange jr = clip(g.j, i, k);
          for (int j = jr.lo; j <= jr.hi; ++j)
            rec.check("", {{"n", n}, {"k", k}, {"t", t}, {"i", i}, {"j", j}},
                      ipow(k - t + 1, j - i) * binomial(n - j, k - j), "<=", binomial(n - i, k - i));
        }
    }
}

// f1 decreases in x; and 6 f1(k-1) > 7 l s C(k,t) C(2k-2t+2, k-t+1).
inline void f1_decreasing(const BoundGrid& g, LemmaRecorder& rec) {
  for (int k = g.k.lo; k <= g.k.hi; ++k)
    for (int t = std::max(1, g.t.lo); t <= std::min(g.t.hi, k - 1); ++t)
      for (int s = std::max(1, g.s.lo); s <= g.s.hi; ++s)
        for (int l = std::max(1, g.ell.lo); l <= g.ell.hi; ++l) {
          const i64 th = l * thresholds(k, t, s).star;
          for (i64 n : n_values(g, th)) {
            const IntRange xr = clip(g.x, t, k - 1);
            for (int x = xr.lo; x <= xr.hi; ++x)
              rec.check("i", {{"n", n}, {"k", k}, {"t", t}, {"s", s}, {"ell", l}, {"x", x}}, f1(n, k, t, s, x), ">",
                        f1(n, k, t, s, x + 1));
            rec.check("ii", {{"n", n}, {"k", k}, {"t", t}, {"s", s}, {"ell", l}}, 6 * f1(n, k, t, s, k - 1), ">",
                      BigCount(7 * l * s) * binomial(k, t) * binomial(2 * k - 2 * t + 2, k - t + 1));
          }
        }
}

// g2 and g3 against simple bounds and against each other.
inline void g2_g3(const BoundGrid& g, LemmaRecorder& rec) {
  for (int t = std::max(1, g.t.lo); t <= g.t.hi; ++t)
    for (int s = std::max(1, g.s.lo); s <= g.s.hi; ++s) {
      const i64 th = thresholds(t, t, s).uniform;
      for (i64 n : n_values(g, th)) {
        const std::map<std::string, i64> p{{"n", n}, {"t", t}, {"s", s}};
        rec.check("i", p, g2(n, t, s), ">", BigCount((t + 1) * (n - t) - t));
        const i64 sq = (t + 1) * (s + 2) + s;
        rec.check("ii", p, g3(n, t, s), ">", BigCount(std::max<i64>(2 * n, sq * sq)));
        if (t >= s + 2)
          rec.check("iii", p, g2(n, t, s), ">", g3(n, t, s));
        else
          rec.check("iii", p, g2(n, t, s), "<", g3(n, t, s));
      }
    }
}

template <class Body>
void for_near_star_grid(const BoundGrid& g, Body&& body) {
  for (int k = g.k.lo; k <= g.k.hi; ++k)
    for (int t = std::max(1, g.t.lo); t <= std::min(g.t.hi, k - 2); ++t)
      for (int s = std::max(1, g.s.lo); s <= g.s.hi; ++s)
        for (i64 n : n_values(g, thresholds(k, t, s).near_star)) body(n, static_cast<i64>(k), static_cast<i64>(t),
                                                                  static_cast<i64>(s));
}

// g1 dominates the products of f1 values arising from the cover-number cases.
inline void g1_dominates_f1(const BoundGrid& g, LemmaRecorder& rec) {
  for_near_star_grid(g, [&](i64 n, i64 k, i64 t, i64 s) {
    const std::map<std::string, i64> p{{"n", n}, {"k", k}, {"t", t}, {"s", s}};
    const BigCount G1 = g1(n, k, t, s);
    const BigCount a = f1(n, k, t, s, t + 1);
    const BigCount star = binomial(n - t, k - t);
    rec.check("i", p, G1, ">", a * a);
    rec.check("ii", p, G1, ">", f1(n, k, t, s, t) * f1(n, k, t, s, t + 2));
    rec.check("iii", p, BigCount(7 * (t + 1)) * G1, ">", 6 * a * (star + s));
    rec.check("iv", p, G1, ">",
              f2(n, k, t, s) * (star + BigCount(t * (k - t)) * binomial(n - t - 1, k - t - 1) + s));
  });
}

// f3 peaks at x = k, and that peak times the G-side bound stays below g1.
inline void f3_peak(const BoundGrid& g, LemmaRecorder& rec) {
  for_near_star_grid(g, [&](i64 n, i64 k, i64 t, i64 s) {
    const BigCount top = f3(n, k, t, s, k);
    const IntRange xr = clip(g.x, static_cast<int>(t + 2), static_cast<int>(k));
    for (int x = xr.lo; x <= xr.hi; ++x)
      rec.check("i", {{"n", n}, {"k", k}, {"t", t}, {"s", s}, {"x", x}}, top, ">=", f3(n, k, t, s, x));
    rec.check("ii", {{"n", n}, {"k", k}, {"t", t}, {"s", s}},
              top * (binomial(n - t, k - t) + BigCount(t * (k - t)) * binomial(n - t - 2, k - t - 2) + s), "<",
              g1(n, k, t, s));
  });
}

// g1 against the cross-intersecting alternative g4.
inline void g1_vs_g4(const BoundGrid& g, LemmaRecorder& rec) {
  for_near_star_grid(g, [&](i64 n, i64 k, i64 t, i64 s) {
    const std::map<std::string, i64> p{{"n", n}, {"k", k}, {"t", t}, {"s", s}};
    const BigCount star = binomial(n - t, k - t);
    rec.check("i", p, g1(n, k, t, s), ">", (star - binomial(n - k - 1, k - t)) * (star + t));
    if (k <= 2 * t && !(k == 4 && t == 2)) rec.check("ii", p, g1(n, k, t, s), "<", g4(n, k, t));
  });
}

}  // namespace detail

/// Evaluates every instance of one lemma over the grid.
inline LemmaReport check_lemma(const std::string& lemma_id, const BoundGrid& grid, bool keep_rows = false) {
  require(grid.k.lo <= grid.k.hi && grid.t.lo <= grid.t.hi, "check_lemma: empty k or t range");
  detail::LemmaRecorder rec(lemma_id, keep_rows);
  if (lemma_id == "binomial-ratio")
    detail::binomial_ratio(grid, rec);
  else if (lemma_id == "f1-decreasing")
    detail::f1_decreasing(grid, rec);
  else if (lemma_id == "g2-g3")
    detail::g2_g3(grid, rec);
  else if (lemma_id == "g1-dominates-f1")
    detail::g1_dominates_f1(grid, rec);
  else if (lemma_id == "f3-peak")
    detail::f3_peak(grid, rec);
  else if (lemma_id == "g1-vs-g4")
    detail::g1_vs_g4(grid, rec);
  else
    throw InvalidArgument("check_lemma: unknown lemma id '" + lemma_id + "'");
  LemmaReport report = rec.finish();
  require(report.points_checked > 0,
          "check_lemma: no grid point satisfies the hypotheses of " + lemma_id);
  return report;
}

}  // namespace crossfam
