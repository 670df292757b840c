#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 = every check passed, 1 = a violation was found (the
// counterexample is printed), 2 = usage or validation error (one JSON line
// on the error stream).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crossfam/acceptance.hpp"
#include "crossfam/bounds.hpp"
#include "crossfam/certify.hpp"
#include "crossfam/constructions.hpp"
#include "crossfam/covers.hpp"
#include "crossfam/io.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/search.hpp"

namespace crossfam::cli {

using json = nlohmann::json;

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot read input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline json read_json(const std::string& path) { return io::parse(read_input(path), path); }

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write '" + path.string() + "'");
  out << text;
}

inline void error_line(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

struct Options {
  // shared parameters
  int n = 0, k = 0, t = 0, s = 0, x = 0;
  std::optional<std::string> seed;
  std::string input;
  std::string output;
  bool full = false;

  // construct
  std::string kind;
  std::vector<int> X, W, Y;
  std::string spec_path;

  // check
  std::string pred;

  // tau
  std::string side;
  int max_size = 0;

  // bounds
  std::string fn;

  // lemmas
  std::string lemma = "all";
  std::vector<int> k_range, t_range, s_range, ell_range, n_range, offsets;
  std::string csv_path;

  // certify
  std::string mode;
  std::vector<int> H, G1;

  // search
  bool core = false;
  bool timing = false;

  // report
  std::string only;
};

inline std::optional<std::uint64_t> seed_of(const Options& o) {
  if (!o.seed) return std::nullopt;
  return io::parse_seed(*o.seed);
}

inline IntRange range_of(const std::vector<int>& v, const char* flag) {
  require(v.size() == 2, std::string(flag) + " takes two values: LO,HI");
  require(v[0] <= v[1], std::string(flag) + ": LO must not exceed HI");
  return {v[0], v[1]};
}

inline void emit(std::ostream& out, const Options& o, const json& j) {
  const std::string text = j.dump() + "\n";
  if (o.output.empty())
    out << text;
  else
    write_text(o.output, text);
}

inline int cmd_construct(const Options& o, std::ostream& out) {
  ConstructionSpec spec;
  if (!o.spec_path.empty()) {
    spec = io::spec_from_json(read_json(o.spec_path));
  } else {
    require(!o.kind.empty(), "construct: --kind or --spec is required");
    spec.kind = o.kind;
    spec.params = Params{o.n, o.k, o.t, o.s};
    if (!o.X.empty()) spec.anchors["X"] = o.X;
    if (!o.W.empty()) spec.anchors["W"] = o.W;
    if (!o.Y.empty()) spec.anchors["Y"] = o.Y;
    spec.seed = seed_of(o);
  }
  // Families need only (n, k); fill harmless defaults for t, s.
  if (spec.kind == "h1" || spec.kind == "h2" || spec.kind == "m2") {
    if (spec.params.t == 0) spec.params.t = 1;
  }
  if (spec.kind == "thm3_singleton_pair" || spec.kind == "thm3_cycle_pair") {
    if (spec.params.k == 0) spec.params.k = spec.params.t + 1;
    require(spec.params.k == spec.params.t + 1, spec.kind + ": k must equal t + 1");
  }
  const Construction built = build(spec);
  if (const auto* fam = std::get_if<SetFamily>(&built))
    emit(out, o, io::family_json(*fam));
  else
    emit(out, o, io::pair_json(std::get<FamilyPair>(built)));
  return kOk;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  const FamilyPair pair = io::pair_from_json(read_json(o.input));
  const VerdictOptions vo{o.full};
  if (o.pred == "cross_t" || o.pred == "s_almost" || o.pred == "maximal") {
    const Verdict v = o.pred == "cross_t"    ? is_cross_t(pair, vo)
                      : o.pred == "s_almost" ? is_s_almost_cross_t(pair, vo)
                                             : maximality_scan(pair, ScanOptions{0, o.full});
    emit(out, o, io::verdict_json(v));
    return v.holds ? kOk : kViolation;
  }
  if (o.pred == "core") {
    const Subset core = common_core(pair);
    const bool below = core.size() < pair.t();
    emit(out, o, {{"core", io::subset_json(core)}, {"size", core.size()}, {"below_t", below}});
    return kOk;
  }
  if (o.pred == "closure") {
    emit(out, o, io::pair_json(pair_closure(pair)));
    return kOk;
  }
  throw InvalidArgument("check: unknown predicate '" + o.pred + "'");
}

inline int cmd_tau(const Options& o, std::ostream& out) {
  const json j = read_json(o.input);
  SetFamily fam;
  if (j.contains("sets")) {
    require(o.side.empty(), "tau: --side applies to pair input only");
    fam = io::family_from_json(j);
  } else {
    const FamilyPair pair = io::pair_from_json(j);
    require(o.side == "F" || o.side == "G", "tau: pair input needs --side F or --side G");
    fam = o.side == "F" ? pair.F() : pair.G();
  }
  require(o.t >= 1 && o.t <= fam.k(), "tau: need 1 <= t <= k");
  if (o.max_size > 0) {
    const auto res = compute_covers_up_to(fam, o.t, o.max_size);
    if (!res) {
      emit(out, o, {{"tau", nullptr}, {"max_size", o.max_size}});
      return kViolation;
    }
    emit(out, o, io::cover_json(*res));
  } else {
    emit(out, o, io::cover_json(compute_covers(fam, o.t)));
  }
  return kOk;
}

inline int cmd_bounds(const Options& o, std::ostream& out) {
  BigCount v;
  if (o.fn == "thresholds") {
    emit(out, o, io::thresholds_json(thresholds(o.k, o.t, o.s)));
    return kOk;
  }
  if (o.fn == "f1")
    v = f1(o.n, o.k, o.t, o.s, o.x);
  else if (o.fn == "f2")
    v = f2(o.n, o.k, o.t, o.s);
  else if (o.fn == "f3")
    v = f3(o.n, o.k, o.t, o.s, o.x);
  else if (o.fn == "g1")
    v = g1(o.n, o.k, o.t, o.s);
  else if (o.fn == "g2")
    v = g2(o.n, o.t, o.s);
  else if (o.fn == "g3")
    v = g3(o.n, o.t, o.s);
  else if (o.fn == "g4")
    v = g4(o.n, o.k, o.t);
  else if (o.fn == "binomial")
    v = binomial(o.n, o.k);
  else
    throw InvalidArgument("bounds: unknown function '" + o.fn + "'");
  const std::string text = v.str() + "\n";
  if (o.output.empty())
    out << text;
  else
    write_text(o.output, text);
  return kOk;
}

inline int cmd_lemmas(const Options& o, std::ostream& out) {
  BoundGrid grid;
  if (!o.k_range.empty()) grid.k = range_of(o.k_range, "--k-range");
  if (!o.t_range.empty()) grid.t = range_of(o.t_range, "--t-range");
  if (!o.s_range.empty()) grid.s = range_of(o.s_range, "--s-range");
  if (!o.ell_range.empty()) grid.ell = range_of(o.ell_range, "--ell-range");
  if (!o.n_range.empty()) grid.n = range_of(o.n_range, "--n-range");
  if (!o.offsets.empty()) grid.n_offsets = o.offsets;
  for (const auto& r : {grid.k, grid.t, grid.s, grid.ell}) require(r.lo >= 1, "lemmas: ranges must be positive");

  std::vector<std::string> ids;
  if (o.lemma == "all")
    ids = lemma_ids();
  else
    ids = {o.lemma};
  json reports = json::array();
  std::vector<LemmaCheck> rows;
  bool verified = true;
  for (const auto& id : ids) {
    LemmaReport rep = check_lemma(id, grid, !o.csv_path.empty());
    verified = verified && rep.verified();
    reports.push_back(io::lemma_report_json(rep));
    std::move(rep.rows.begin(), rep.rows.end(), std::back_inserter(rows));
  }
  if (!o.csv_path.empty()) write_text(o.csv_path, io::lemma_csv(rows));
  emit(out, o, {{"verified", verified}, {"reports", reports}});
  return verified ? kOk : kViolation;
}

inline int cmd_certify(const Options& o, std::ostream& out) {
  if (o.mode == "sequences") {
    const FamilyPair pair = io::pair_from_json(read_json(o.input));
    const SequencePair seq = greedy_sequences(pair, seed_of(o));
    const std::string defect = sequence_defect(pair, seq, seq.leftover.empty());
    json j = io::sequence_json(seq);
    const bool within = BigCount(seq.m) <= seq.bound;
    j["within_bound"] = within;
    if (!defect.empty()) j["defect"] = defect;
    emit(out, o, j);
    return defect.empty() && within ? kOk : kViolation;
  }
  if (o.mode == "chain") {
    const json j = read_json(o.input);
    const SetFamily F = j.contains("sets") ? io::family_from_json(j) : io::pair_from_json(j).F();
    require(!o.H.empty(), "certify: --H is required in chain mode");
    require(!o.G1.empty(), "certify: --G1 is required in chain mode");
    auto as_subset = [&](const std::vector<int>& v, const char* name) {
      for (int e : v)
        require(e >= 1 && e <= F.n(), std::string("certify: ") + name + " has an element outside [1,n]");
      return Subset::from_elements(F.n(), v);
    };
    const auto cert = chain_certificate(F, as_subset(o.H, "H"), as_subset(o.G1, "G1"), o.t, o.s);
    if (!cert) {
      emit(out, o, {{"certificate", nullptr}, {"refuted", true}});
      return kViolation;
    }
    emit(out, o, io::certificate_json(*cert));
    return kOk;
  }
  throw InvalidArgument("certify: unknown mode '" + o.mode + "'");
}

inline int cmd_search(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  json j;
  int code = kOk;
  if (o.mode == "brute" || o.mode == "naive") {
    const Params p{o.n, o.k, o.t, o.s};
    j = io::search_json(o.mode == "brute" ? brute_force_max(p, o.core) : naive_oracle_max(p, o.core));
  } else if (o.mode == "scan") {
    const FamilyPair pair = io::pair_from_json(read_json(o.input));
    const Verdict v = maximality_scan(pair, ScanOptions{0, o.full});
    j = io::verdict_json(v);
    code = v.holds ? kOk : kViolation;
  } else {
    throw InvalidArgument("search: unknown mode '" + o.mode + "'");
  }
  if (o.timing)
    j["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(out, o, j);
  return code;
}

inline int cmd_report(const Options& o, std::ostream& out) {
  require(!o.output.empty(), "report: --out DIR is required");
  namespace fs = std::filesystem;
  const fs::path dir(o.output);
  fs::create_directories(dir / "families");

  std::vector<std::string> wanted;
  std::stringstream ss(o.only);
  for (std::string id; std::getline(ss, id, ',');)
    if (!id.empty()) wanted.push_back(id);

  const acceptance::PairSink sink = [&](const std::string& name, const FamilyPair& pair) {
    write_text(dir / "families" / (name + ".json"), io::pair_json(pair).dump() + "\n");
  };
  json report{{"criteria", json::array()}};
  std::ostringstream csv;
  csv << "criterion,case,pass,data\n";
  bool all_pass = true;
  for (const auto& c : acceptance::criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const acceptance::CriterionResult r = c.run(sink);
    all_pass = all_pass && r.pass;
    report["criteria"].push_back({{"id", r.id},
                                  {"title", r.title},
                                  {"pass", r.pass},
                                  {"summary", r.summary},
                                  {"seconds", r.seconds},
                                  {"details", r.details}});
    csv << r.id << ",summary," << (r.pass ? "true" : "false") << ",\"" << r.summary << "\"\n";
    for (const auto& row : r.csv_rows) {
      json data = row;
      data.erase("criterion");
      data.erase("case");
      data.erase("pass");
      std::string flat;
      for (const auto& [key, value] : data.items())
        flat += (flat.empty() ? "" : " ") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
      csv << r.id << ',' << row.value("case", "") << ',' << (row.value("pass", false) ? "true" : "false") << ','
          << flat << '\n';
    }
    out << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << ": " << r.summary << '\n';
  }
  report["all_pass"] = all_pass;
  write_text(dir / "report.json", report.dump(2) + "\n");
  write_text(dir / "report.csv", csv.str());
  return all_pass ? kOk : kViolation;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Verification and search toolkit for s-almost cross-t-intersecting families", "crossfam"};
  app.require_subcommand(1, 1);

  auto params = [&](CLI::App* sub, bool with_x) {
    sub->add_option("--n", o.n, "ground set size");
    sub->add_option("--k", o.k, "member size");
    sub->add_option("--t", o.t, "intersection threshold");
    sub->add_option("--s", o.s, "disjointness allowance");
    if (with_x) sub->add_option("--x", o.x, "covering-number argument of f1/f3");
  };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "write JSON here instead of stdout"); };

  auto* construct = app.add_subcommand("construct", "emit a family or pair as JSON");
  params(construct, false);
  construct->add_option("--kind", o.kind, "construction kind")
      ->check(CLI::IsMember(construction_kinds()));
  construct->add_option("--X", o.X, "anchor X (comma-separated)")->delimiter(',');
  construct->add_option("--W", o.W, "anchor W (comma-separated)")->delimiter(',');
  construct->add_option("--Y", o.Y, "anchor Y (comma-separated)")->delimiter(',');
  construct->add_option("--seed", o.seed, "seed for randomized choices (unsigned 64-bit decimal)");
  construct->add_option("--spec", o.spec_path, "ConstructionSpec JSON file");
  output(construct);

  auto* check = app.add_subcommand("check", "evaluate a predicate on a pair");
  check->add_option("--pred", o.pred, "cross_t | s_almost | maximal | core | closure")
      ->required()
      ->check(CLI::IsMember({"cross_t", "s_almost", "maximal", "core", "closure"}));
  check->add_option("-i,--input", o.input, "pair JSON file, or - for stdin")->required();
  check->add_flag("--full", o.full, "list every witness");
  output(check);

  auto* tau = app.add_subcommand("tau", "minimum t-covers of a family");
  tau->add_option("-i,--input", o.input, "family or pair JSON file, or - for stdin")->required();
  tau->add_option("--t", o.t, "intersection threshold")->required();
  tau->add_option("--side", o.side, "F or G when the input is a pair");
  tau->add_option("--max-size", o.max_size, "only search covers up to this size");
  output(tau);

  auto* bounds = app.add_subcommand("bounds", "evaluate a bound function exactly");
  bounds->add_option("--fn", o.fn, "f1 f2 f3 g1 g2 g3 g4 binomial thresholds")
      ->required()
      ->check(CLI::IsMember({"f1", "f2", "f3", "g1", "g2", "g3", "g4", "binomial", "thresholds"}));
  params(bounds, true);
  output(bounds);

  auto* lemmas = app.add_subcommand("lemmas", "verify inequality lemmas over a grid");
  std::vector<std::string> lemma_choices = lemma_ids();
  lemma_choices.push_back("all");
  lemmas->add_option("--id", o.lemma, "lemma id or all")->check(CLI::IsMember(lemma_choices));
  lemmas->add_option("--k-range", o.k_range, "LO,HI")->delimiter(',');
  lemmas->add_option("--t-range", o.t_range, "LO,HI")->delimiter(',');
  lemmas->add_option("--s-range", o.s_range, "LO,HI")->delimiter(',');
  lemmas->add_option("--ell-range", o.ell_range, "LO,HI")->delimiter(',');
  lemmas->add_option("--n-range", o.n_range, "LO,HI (replaces threshold offsets)")->delimiter(',');
  lemmas->add_option("--offsets", o.offsets, "offsets added to each threshold")->delimiter(',');
  lemmas->add_option("--csv", o.csv_path, "write every instance as CSV");
  output(lemmas);

  auto* certify = app.add_subcommand("certify", "greedy sequences or a single-step certificate");
  certify->add_option("--mode", o.mode, "sequences | chain")
      ->required()
      ->check(CLI::IsMember({"sequences", "chain"}));
  certify->add_option("-i,--input", o.input, "pair JSON (sequences) or family/pair JSON (chain)")->required();
  certify->add_option("--seed", o.seed, "randomize the greedy choices");
  certify->add_option("--H", o.H, "H (comma-separated)")->delimiter(',');
  certify->add_option("--G1", o.G1, "G1 (comma-separated)")->delimiter(',');
  certify->add_option("--t", o.t, "intersection threshold");
  certify->add_option("--s", o.s, "disjointness allowance");
  output(certify);

  auto* search = app.add_subcommand("search", "exhaustive maximum or maximality scan");
  search->add_option("--mode", o.mode, "brute | naive | scan")
      ->required()
      ->check(CLI::IsMember({"brute", "naive", "scan"}));
  params(search, false);
  search->add_flag("--core", o.core, "require common core smaller than t");
  search->add_option("-i,--input", o.input, "pair JSON for --mode scan");
  search->add_flag("--full", o.full, "list every witness (scan)");
  search->add_flag("--timing", o.timing, "add wall_time_ms to the output");
  output(search);

  auto* report = app.add_subcommand("report", "run the acceptance suite into a directory");
  report->add_option("--out", o.output, "output directory")->required();
  report->add_option("--only", o.only, "comma-separated criterion ids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    detail::error_line(err, "usage", e.what());
    return kUsage;
  }

  try {
    if (construct->parsed()) return detail::cmd_construct(o, out);
    if (check->parsed()) return detail::cmd_check(o, out);
    if (tau->parsed()) return detail::cmd_tau(o, out);
    if (bounds->parsed()) return detail::cmd_bounds(o, out);
    if (lemmas->parsed()) return detail::cmd_lemmas(o, out);
    if (certify->parsed()) {
      if (o.mode == "sequences") require(o.H.empty() && o.G1.empty(), "certify: --H/--G1 apply to chain mode");
      return detail::cmd_certify(o, out);
    }
    if (search->parsed()) {
      if (o.mode == "scan") require(!o.input.empty(), "search: --mode scan needs --input");
      return detail::cmd_search(o, out);
    }
    if (report->parsed()) return detail::cmd_report(o, out);
  } catch (const InvalidArgument& e) {
    detail::error_line(err, "validation", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    detail::error_line(err, "validation", e.what());
    return kUsage;
  }
  detail::error_line(err, "usage", "no subcommand given");
  return kUsage;
}

}  // namespace crossfam::cli
