#pragma once

// The acceptance criteria as runnable checks. Each runner returns a
// CriterionResult with a one-line summary plus structured details; the
// acceptance test binary and the `report` subcommand both call these.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "crossfam/bounds.hpp"
#include "crossfam/certify.hpp"
#include "crossfam/constructions.hpp"
#include "crossfam/covers.hpp"
#include "crossfam/io.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/random.hpp"
#include "crossfam/search.hpp"

namespace crossfam::acceptance {

using json = nlohmann::json;

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string summary;  ///< counts on success, first failure otherwise
  double seconds = 0;
  json details = json::object();
  std::vector<json> csv_rows;  ///< flat records for report.csv
};

/// Receives every pair built during a run, keyed by a file-safe name.
using PairSink = std::function<void(const std::string& name, const FamilyPair& pair)>;

namespace detail {

inline CriterionResult named(std::string id, std::string title) {
  CriterionResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects failures; keeps the first few messages.
struct Failures {
  std::size_t count = 0;
  std::vector<std::string> first;
  void add(std::string msg) {
    ++count;
    if (first.size() < 8) first.push_back(std::move(msg));
  }
  void finish(CriterionResult& r, const std::string& ok_summary) const {
    r.pass = count == 0;
    r.summary = r.pass ? ok_summary : std::to_string(count) + " failure(s); first: " + first.front();
    r.details["failures"] = first;
    r.details["failure_count"] = count;
  }
};

inline std::string tag(const char* kind, int n, int k, int t, int s) {
  return std::string(kind) + "_n" + std::to_string(n) + "_k" + std::to_string(k) + "_t" + std::to_string(t) +
         "_s" + std::to_string(s);
}

// Runs fn with CROSSFAM_THREADS set to `threads`, restoring the old value.
template <class Fn>
auto with_threads(unsigned threads, Fn&& fn) {
  const char* old = std::getenv("CROSSFAM_THREADS");
  const std::string saved = old ? old : "";
  ::setenv("CROSSFAM_THREADS", std::to_string(threads).c_str(), 1);
  struct Restore {
    bool had;
    std::string value;
    ~Restore() {
      if (had)
        ::setenv("CROSSFAM_THREADS", value.c_str(), 1);
      else
        ::unsetenv("CROSSFAM_THREADS");
    }
  } restore{old != nullptr, saved};
  return fn();
}

}  // namespace detail

/// Construction identities: exact products and claimed predicates over the grid.
inline CriterionResult construction_identities(const PairSink& sink = {}) {
  detail::Timer timer;
  CriterionResult r = detail::named("A1", "construction identity suite");
  detail::Failures fails;
  std::size_t checked = 0;

  auto verify = [&](const std::string& name, const FamilyPair& pair, const BigCount& expected, bool expect_cross,
                    bool check_core) {
    ++checked;
    if (sink) sink(name, pair);
    const BigCount product = pair.product();
    const bool almost = is_s_almost_cross_t(pair).holds;
    const bool cross = is_cross_t(pair).holds;
    bool ok = product == expected && almost && cross == expect_cross;
    const bool core_ok = !check_core || common_core(pair).size() < pair.t();
    ok = ok && core_ok;
    r.csv_rows.push_back({{"criterion", "A1"}, {"case", name}, {"product", product.str()},
                          {"expected", expected.str()}, {"pass", ok}});
    if (!ok)
      fails.add(name + ": product " + product.str() + " vs " + expected.str() + ", s-almost " +
                (almost ? "yes" : "no") + ", cross " + (cross ? "yes" : "no") + ", core " +
                (core_ok ? "ok" : "too large"));
  };

  for (int t = 1; t <= 3; ++t)
    for (int k = t + 1; k <= t + 3; ++k)
      for (int s = 1; s <= 3; ++s)
        for (int n = k; n <= 20; ++n) {
          if (s == 1) {
            verify(detail::tag("star", n, k, t, s), star_pair(n, k, t, s), binomial(n - t, k - t) * binomial(n - t, k - t),
                   true, false);
            verify(detail::tag("cross", n, k, t, s), cross_pair(n, k, t, s), g4(n, k, t), true, n > k);
          }
          if (n >= k + 1 && binomial(n - k - 1, k - t) >= s)
            verify(detail::tag("near_star", n, k, t, s), thm2_pair(n, k, t, s), g1(n, k, t, s), false, false);
          if (k == t + 1) {
            if (singleton_room(n, t) >= s)
              verify(detail::tag("singleton", n, k, t, s), thm3_singleton_pair(n, t, s), g2(n, t, s), false, false);
            if (n >= t + s + 2)
              verify(detail::tag("cycle", n, k, t, s), thm3_cycle_pair(n, t, s), g3(n, t, s), false, false);
          }
        }
  fails.finish(r, std::to_string(checked) + " pairs: exact products, predicates as claimed");
  r.details["pairs_checked"] = checked;
  r.seconds = timer.seconds();
  return r;
}

/// Every inequality lemma over its default hypothesis grid.
inline CriterionResult lemma_suite() {
  detail::Timer timer;
  CriterionResult r = detail::named("A2", "inequality lemma suite");
  detail::Failures fails;
  std::int64_t points = 0;
  const BoundGrid grid;
  for (const auto& id : lemma_ids()) {
    const LemmaReport rep = check_lemma(id, grid);
    points += rep.points_checked;
    r.details["lemmas"][id] = io::lemma_report_json(rep);
    r.csv_rows.push_back({{"criterion", "A2"}, {"case", id}, {"points", rep.points_checked},
                          {"counterexamples", rep.counterexamples.size()}, {"pass", rep.verified()}});
    for (const auto& c : rep.counterexamples)
      fails.add(id + " part " + c.part + ": " + io::lemma_check_json(c).dump());
  }
  fails.finish(r, std::to_string(points) + " instances, zero counterexamples");
  r.seconds = timer.seconds();
  return r;
}

inline const std::vector<Params>& oracle_params() {
  static const std::vector<Params> ps{{4, 2, 1, 1}, {4, 2, 1, 2}, {5, 2, 1, 1}, {5, 2, 1, 2}};
  return ps;
}

/// brute_force_max against naive_oracle_max, value and witness.
inline CriterionResult oracle_equivalence() {
  detail::Timer timer;
  CriterionResult r = detail::named("A3", "brute force vs naive oracle");
  detail::Failures fails;
  for (const auto& p : oracle_params())
    for (bool core : {false, true}) {
      const SearchResult fast = brute_force_max(p, core);
      const SearchResult slow = naive_oracle_max(p, core);
      const std::string name = detail::tag(core ? "core" : "free", p.n, p.k, p.t, p.s);
      const bool ok = fast.max_product == slow.max_product && fast.witness == slow.witness;
      r.details["cases"][name] = {{"max_product", fast.max_product.str()},
                                  {"oracle_max_product", slow.max_product.str()},
                                  {"witness_match", fast.witness == slow.witness}};
      r.csv_rows.push_back({{"criterion", "A3"}, {"case", name}, {"product", fast.max_product.str()},
                            {"expected", slow.max_product.str()}, {"pass", ok}});
      if (!ok)
        fails.add(name + ": fast " + io::search_json(fast).dump() + " vs oracle " + io::search_json(slow).dump());
    }
  fails.finish(r, "8 searches agree in value and witness");
  r.seconds = timer.seconds();
  return r;
}

/// compute_covers against the exhaustive enumerator.
inline CriterionResult cover_oracle() {
  detail::Timer timer;
  CriterionResult r = detail::named("A4", "covering number oracle");
  detail::Failures fails;
  auto same = [](const CoverResult& a, const CoverResult& b) {
    return a.tau == b.tau && a.min_covers == b.min_covers && a.cover_union == b.cover_union;
  };
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    const int n = uniform_int(rng, 2, 10);
    const int k = uniform_int(rng, 1, std::min(4, n));
    const int t = uniform_int(rng, 1, k);
    const SetFamily fam = random_family(n, k, 1, 3, rng);
    const CoverResult fast = compute_covers(fam, t);
    const CoverResult slow = compute_covers_exhaustive(fam, t);
    if (!same(fast, slow))
      fails.add("seed " + std::to_string(seed) + ": tau " + std::to_string(fast.tau) + " vs " +
                std::to_string(slow.tau));
  }
  const CoverResult star = compute_covers(h1(5, Subset::full(5), Subset(5, {1}), 2), 1);
  if (star.tau != 1) fails.add("tau_1(H1([5],{1};2)) = " + std::to_string(star.tau) + ", expected 1");
  const CoverResult m = compute_covers(m1(5, Subset(5, {1, 2}), 2, 1), 1);
  if (m.tau != 2 || m.min_covers != std::vector<Subset>{Subset(5, {1, 2})})
    fails.add("tau_1(M1({1,2};2,1)) = " + std::to_string(m.tau) + " with " + io::cover_json(m).dump());
  r.details["fixed"] = {{"star", io::cover_json(star)}, {"m1", io::cover_json(m)}};
  fails.finish(r, "50 random families and 2 fixed instances agree");
  r.seconds = timer.seconds();
  return r;
}

/// Greedy sequences: the tight C([4],2) case and the bound on random pairs.
inline CriterionResult greedy_suite() {
  detail::Timer timer;
  CriterionResult r = detail::named("A5", "greedy sequence suite");
  detail::Failures fails;
  {
    const SetFamily all = SetFamily::complete(4, 2);
    const FamilyPair pair(all, all, 1, 1);
    const SequencePair seq = greedy_sequences(pair);
    const std::string defect = sequence_defect(pair, seq, /*require_cover=*/true);
    if (seq.m != 6 || seq.bound != 6 || !seq.leftover.empty() || !defect.empty())
      fails.add("C([4],2): m = " + std::to_string(seq.m) + " " + defect);
    r.details["tight"] = io::sequence_json(seq);
  }
  std::size_t max_m = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    const int k = uniform_int(rng, 2, 4);
    const int n = uniform_int(rng, k + 1, 10);
    const int t = uniform_int(rng, 1, k - 1);
    const int s = uniform_int(rng, 1, 3);
    const FamilyPair pair = random_s_almost_pair(Params{n, k, t, s}, 1, 2, rng);
    for (const auto& choice : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{seed}}) {
      const SequencePair seq = greedy_sequences(pair, choice);
      max_m = std::max(max_m, seq.m);
      const std::string defect = sequence_defect(pair, seq, seq.leftover.empty());
      if (BigCount(seq.m) > seq.bound || !defect.empty())
        fails.add("seed " + std::to_string(seed) + (choice ? " (random choices)" : "") + ": m = " +
                  std::to_string(seq.m) + ", bound " + seq.bound.str() + " " + defect);
    }
  }
  r.details["largest_m"] = max_m;
  fails.finish(r, "tight case m = 6; 200 runs on 100 random pairs within the bound");
  r.seconds = timer.seconds();
  return r;
}

/// A random input satisfying chain_certificate's preconditions, with
/// k >= t+1 and n >= 2k as the underlying inequality assumes.
struct CertificateInput {
  SetFamily F;
  Subset H;
  Subset G1;
  int t = 1;
  int s = 1;
};

inline CertificateInput random_certificate_input(std::uint64_t seed) {
  Rng rng(seed);
  const int k = uniform_int(rng, 2, 5);
  const int n = uniform_int(rng, 2 * k, 12);
  const int t = uniform_int(rng, 1, k - 1);
  const int s = uniform_int(rng, 1, 3);
  const FamilyPair pair = random_s_almost_pair(Params{n, k, t, s}, 1, 2, rng);
  const Subset G1 = pair.G()[uniform_below(rng, pair.G().size())];
  Subset H(n);
  do {
    H = random_k_subset(n, uniform_int(rng, 1, k), rng);
  } while (intersection_size(H, G1) >= t);
  return {pair.F(), H, G1, t, s};
}

/// chain_certificate on random valid inputs: never absent, never widened.
inline CriterionResult certificate_suite() {
  detail::Timer timer;
  CriterionResult r = detail::named("A6", "single-step certificate suite");
  detail::Failures fails;
  std::size_t degenerate = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const CertificateInput in = random_certificate_input(seed);
    const auto cert = chain_certificate(in.F, in.H, in.G1, in.t, in.s);
    if (!cert) {
      fails.add("seed " + std::to_string(seed) + ": no certificate for H = " + in.H.to_string());
      continue;
    }
    degenerate += cert->degenerate;
    if (cert->widened || !(cert->lhs <= cert->rhs) || !in.H.is_subset_of(cert->R) || cert->R == in.H)
      fails.add("seed " + std::to_string(seed) + ": invalid certificate " + io::certificate_json(*cert).dump());
  }
  r.details["degenerate"] = degenerate;
  fails.finish(r, "1000 inputs certified, none widened, none refuted");
  r.seconds = timer.seconds();
  return r;
}

/// The near-star pair at n = 100 is maximal and has covering numbers (1, 2).
inline CriterionResult large_maximality(const PairSink& sink = {}) {
  detail::Timer timer;
  CriterionResult r = detail::named("A7", "maximality at n = 100");
  detail::Failures fails;
  const FamilyPair pair = thm2_pair(100, 3, 1, 1);
  if (sink) sink("near_star_n100_k3_t1_s1", pair);
  const Verdict v = maximality_scan(pair);
  if (!v.holds) fails.add("not maximal: " + io::verdict_json(v).dump());
  const auto tf = compute_covers_up_to(pair.F(), 1, 3);
  const auto tg = compute_covers_up_to(pair.G(), 1, 3);
  if (!tf || tf->tau != 1) fails.add("tau_1(F) is not 1");
  if (!tg || tg->tau != 2) fails.add("tau_1(G) is not 2");
  r.details["sizes"] = {pair.F().size(), pair.G().size()};
  r.details["maximal"] = io::verdict_json(v);
  if (tf) r.details["tau_F"] = io::cover_json(*tf);
  if (tg) r.details["tau_G"] = io::cover_json(*tg);
  fails.finish(r, "|F| = " + std::to_string(pair.F().size()) + ", |G| = " + std::to_string(pair.G().size()) +
                      ", maximal, tau = (1, 2)");
  r.seconds = timer.seconds();
  return r;
}

/// g2 versus g3 on both sides of t = s + 2, with the constructions' products.
inline CriterionResult crossover(const PairSink& sink = {}) {
  detail::Timer timer;
  CriterionResult r = detail::named("A8", "g2/g3 crossover");
  detail::Failures fails;
  std::size_t checked = 0;
  for (int t = 1; t <= 5; ++t)
    for (int s = 1; s <= 4; ++s)
      for (int offset : {0, 10}) {
        const int n = 5 * s * (t + 1) * (t + 1) + offset;
        ++checked;
        const BigCount a = g2(n, t, s);
        const BigCount b = g3(n, t, s);
        const bool expect_singleton = t >= s + 2;
        const bool ok_formula = expect_singleton ? a > b : a < b;
        const FamilyPair single = thm3_singleton_pair(n, t, s);
        const FamilyPair cycle = thm3_cycle_pair(n, t, s);
        if (sink) {
          sink(detail::tag("singleton", n, t + 1, t, s), single);
          sink(detail::tag("cycle", n, t + 1, t, s), cycle);
        }
        const bool ok_built = single.product() == a && cycle.product() == b;
        const std::string name = "n" + std::to_string(n) + "_t" + std::to_string(t) + "_s" + std::to_string(s);
        r.csv_rows.push_back({{"criterion", "A8"}, {"case", name}, {"g2", a.str()}, {"g3", b.str()},
                              {"larger", a > b ? "singleton" : "cycle"}, {"pass", ok_formula && ok_built}});
        if (!ok_formula)
          fails.add(name + ": g2 = " + a.str() + ", g3 = " + b.str() + ", expected the " +
                    (expect_singleton ? "singleton" : "cycle") + " pair to win");
        if (!ok_built) fails.add(name + ": constructed products differ from g2/g3");
      }
  fails.finish(r, std::to_string(checked) + " points on the predicted side");
  r.seconds = timer.seconds();
  return r;
}

/// Searches and scans produce identical JSON with 1 and 4 worker threads.
inline CriterionResult determinism() {
  detail::Timer timer;
  CriterionResult r = detail::named("A9", "thread-count determinism");
  detail::Failures fails;
  for (const auto& p : oracle_params())
    for (bool core : {false, true}) {
      const auto one = detail::with_threads(1, [&] { return io::search_json(brute_force_max(p, core)).dump(); });
      const auto four = detail::with_threads(4, [&] { return io::search_json(brute_force_max(p, core)).dump(); });
      if (one != four) fails.add(detail::tag(core ? "core" : "free", p.n, p.k, p.t, p.s) + ": outputs differ");
    }
  const FamilyPair big = thm2_pair(100, 3, 1, 1);
  const FamilyPair small(SetFamily(5, 2, {Subset(5, {1, 2})}), SetFamily(5, 2, {Subset(5, {1, 2})}), 1, 1);
  for (const FamilyPair* pair : {&small, &big}) {
    const auto one = detail::with_threads(1, [&] { return io::verdict_json(maximality_scan(*pair)).dump(); });
    const auto four = detail::with_threads(4, [&] { return io::verdict_json(maximality_scan(*pair)).dump(); });
    if (one != four) fails.add("maximality scan at n = " + std::to_string(pair->n()) + ": outputs differ");
  }
  fails.finish(r, "8 searches and 2 scans identical under 1 and 4 threads");
  r.seconds = timer.seconds();
  return r;
}

struct Criterion {
  const char* id;
  std::function<CriterionResult(const PairSink&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"A1", [](const PairSink& s) { return construction_identities(s); }},
      {"A2", [](const PairSink&) { return lemma_suite(); }},
      {"A3", [](const PairSink&) { return oracle_equivalence(); }},
      {"A4", [](const PairSink&) { return cover_oracle(); }},
      {"A5", [](const PairSink&) { return greedy_suite(); }},
      {"A6", [](const PairSink&) { return certificate_suite(); }},
      {"A7", [](const PairSink& s) { return large_maximality(s); }},
      {"A8", [](const PairSink& s) { return crossover(s); }},
      {"A9", [](const PairSink&) { return determinism(); }},
  };
  return all;
}

}  // namespace crossfam::acceptance
