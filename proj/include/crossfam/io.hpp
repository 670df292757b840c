#pragma once

// JSON interchange for every result type, plus the flat CSV view of lemma
// reports. Big integers are always written as decimal strings. Readers
// validate strictly and throw InvalidArgument with the offending field.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "crossfam/bounds.hpp"
#include "crossfam/certify.hpp"
#include "crossfam/constructions.hpp"
#include "crossfam/covers.hpp"
#include "crossfam/family.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/search.hpp"

namespace crossfam::io {

using json = nlohmann::json;

inline json big(const BigCount& v) { return v.str(); }

inline json subset_json(const Subset& s) { return s.elements(); }

inline json sets_json(const std::vector<Subset>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(subset_json(s));
  return out;
}

inline json family_json(const SetFamily& f) {
  return {{"n", f.n()}, {"k", f.k()}, {"sets", sets_json(f.members())}};
}

inline json pair_json(const FamilyPair& p) {
  return {{"n", p.n()},
          {"k", p.k()},
          {"t", p.t()},
          {"s", p.s()},
          {"F", sets_json(p.F().members())},
          {"G", sets_json(p.G().members())}};
}

inline json verdict_json(const Verdict& v) {
  json list = json::array();
  for (const auto& w : v.violations) {
    json item{{"side", w.side}, {"member", subset_json(w.member)}};
    if (w.partner) item["partner"] = subset_json(*w.partner);
    if (w.count) item["count"] = w.count;
    list.push_back(std::move(item));
  }
  return {{"holds", v.holds}, {"violations", std::move(list)}, {"total_violations", v.total_violations}};
}

inline json cover_json(const CoverResult& c) {
  return {{"tau", c.tau}, {"covers", sets_json(c.min_covers)}, {"union", subset_json(c.cover_union)}};
}

inline json sequence_json(const SequencePair& sp) {
  return {{"F_seq", sets_json(sp.F_seq)},
          {"G_seq", sets_json(sp.G_seq)},
          {"m", sp.m},
          {"leftover", sets_json(sp.leftover.members())},
          {"bound", big(sp.bound)}};
}

inline json certificate_json(const ChainCertificate& c) {
  return {{"H", subset_json(c.H)},   {"G1", subset_json(c.G1)},   {"R", subset_json(c.R)},
          {"lhs", big(c.lhs)},       {"rhs", big(c.rhs)},         {"widened", c.widened},
          {"degenerate", c.degenerate}};
}

inline json search_json(const SearchResult& r) {
  return {{"max_product", big(r.max_product)},
          {"witness", pair_json(r.witness)},
          {"pairs_examined", r.pairs_examined},
          {"core_constraint", r.core_constraint}};
}

inline json thresholds_json(const Thresholds& th) {
  return {{"star", th.star},
          {"near_star", th.near_star},
          {"uniform", th.uniform},
          {"core_free", th.core_free},
          {"binomial_ratio", th.binomial_ratio}};
}

inline json lemma_check_json(const LemmaCheck& c) {
  return {{"lemma_id", c.lemma_id}, {"part", c.part},         {"params", c.params},
          {"lhs", big(c.lhs)},      {"relation", c.relation}, {"rhs", big(c.rhs)},
          {"pass", c.pass}};
}

inline json lemma_report_json(const LemmaReport& r) {
  json ce = json::array();
  for (const auto& c : r.counterexamples) ce.push_back(lemma_check_json(c));
  return {{"lemma_id", r.lemma_id},
          {"points_checked", r.points_checked},
          {"verified", r.verified()},
          {"counterexamples", std::move(ce)}};
}

/// CSV rows: lemma_id,part,params,lhs,relation,rhs,pass with params as
/// space-separated name=value pairs (sorted by name).
inline std::string lemma_csv(const std::vector<LemmaCheck>& rows, bool header = true) {
  std::ostringstream out;
  if (header) out << "lemma_id,part,params,lhs,relation,rhs,pass\n";
  for (const auto& c : rows) {
    std::string params;
    for (const auto& [name, value] : c.params) {
      if (!params.empty()) params += ' ';
      params += name + "=" + std::to_string(value);
    }
    out << c.lemma_id << ',' << c.part << ',' << params << ',' << c.lhs.str() << ',' << c.relation << ','
        << c.rhs.str() << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

inline json spec_json(const ConstructionSpec& spec) {
  json out{{"kind", spec.kind},
           {"n", spec.params.n},
           {"k", spec.params.k},
           {"t", spec.params.t},
           {"s", spec.params.s},
           {"anchors", spec.anchors}};
  if (spec.seed) out["seed"] = std::to_string(*spec.seed);
  return out;
}

// ---- readers ----

namespace detail {

inline const json& field(const json& j, const char* name) {
  require(j.is_object(), std::string("json: expected an object holding '") + name + "'");
  auto it = j.find(name);
  require(it != j.end(), std::string("json: missing field '") + name + "'");
  return *it;
}

inline int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  require(v.is_number_integer(), std::string("json: field '") + name + "' must be an integer");
  const auto x = v.get<std::int64_t>();
  require(x >= 0 && x <= 1'000'000, std::string("json: field '") + name + "' out of range");
  return static_cast<int>(x);
}

inline std::vector<int> int_list(const json& v, const std::string& what) {
  require(v.is_array(), "json: " + what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    require(e.is_number_integer(), "json: " + what + " must contain integers only");
    const auto x = e.get<std::int64_t>();
    require(x >= -1'000'000 && x <= 1'000'000, "json: " + what + " element out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

inline Subset subset_from(const json& v, int n, const std::string& what) {
  const auto elems = int_list(v, what);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    require(elems[i] >= 1 && elems[i] <= n,
            "json: " + what + " has element " + std::to_string(elems[i]) + " outside [1," + std::to_string(n) + "]");
    require(i == 0 || elems[i - 1] < elems[i], "json: " + what + " is not strictly increasing");
  }
  return Subset::from_elements(n, elems);
}

inline SetFamily sets_from(const json& v, int n, int k, const std::string& what) {
  require(v.is_array(), "json: " + what + " must be an array of sets");
  std::vector<Subset> sets;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string label = what + "[" + std::to_string(i) + "]";
    Subset s = subset_from(v[i], n, label);
    require(s.size() == k, "json: " + label + " has size " + std::to_string(s.size()) + ", expected " +
                               std::to_string(k));
    if (!sets.empty()) {
      require(!(s == sets.back()), "json: " + what + " has duplicate member " + s.to_string());
      require(sets.back() < s, "json: " + what + " is not in lexicographic order at " + s.to_string());
    }
    sets.push_back(std::move(s));
  }
  return SetFamily(n, k, std::move(sets));
}

}  // namespace detail

inline SetFamily family_from_json(const json& j) {
  const int n = detail::int_field(j, "n");
  const int k = detail::int_field(j, "k");
  require(k <= n, "json: need k <= n");
  return detail::sets_from(detail::field(j, "sets"), n, k, "sets");
}

inline FamilyPair pair_from_json(const json& j) {
  const int n = detail::int_field(j, "n");
  const int k = detail::int_field(j, "k");
  require(k <= n, "json: need k <= n");
  const int t = detail::int_field(j, "t");
  const int s = detail::int_field(j, "s");
  return FamilyPair(detail::sets_from(detail::field(j, "F"), n, k, "F"),
                    detail::sets_from(detail::field(j, "G"), n, k, "G"), t, s);
}

inline std::uint64_t parse_seed(const std::string& text) {
  require(!text.empty() && text.find_first_not_of("0123456789") == std::string::npos,
          "seed must be an unsigned decimal integer, got '" + text + "'");
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw InvalidArgument("seed out of 64-bit range: '" + text + "'");
  }
}

inline ConstructionSpec spec_from_json(const json& j) {
  ConstructionSpec spec;
  const json& kind = detail::field(j, "kind");
  require(kind.is_string(), "json: field 'kind' must be a string");
  spec.kind = kind.get<std::string>();
  spec.params = Params{detail::int_field(j, "n"), detail::int_field(j, "k"), detail::int_field(j, "t"),
                       detail::int_field(j, "s")};
  if (auto it = j.find("anchors"); it != j.end()) {
    require(it->is_object(), "json: field 'anchors' must be an object");
    for (const auto& [name, value] : it->items()) spec.anchors[name] = detail::int_list(value, "anchor " + name);
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (it->is_string())
      spec.seed = parse_seed(it->get<std::string>());
    else {
      require(it->is_number_unsigned() || (it->is_number_integer() && it->get<std::int64_t>() >= 0),
              "json: field 'seed' must be an unsigned integer");
      spec.seed = it->get<std::uint64_t>();
    }
  }
  return spec;
}

/// Parses text, turning parser errors into InvalidArgument.
inline json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("malformed JSON in " + source + ": " + e.what());
  }
}

}  // namespace crossfam::io
