#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "walkiso/formats.hpp"
#include "walkiso/generators.hpp"
#include "walkiso/iso_test.hpp"
#include "walkiso/oracle.hpp"
#include "walkiso/parallel.hpp"
#include "walkiso/probe_harness.hpp"
#include "walkiso/report.hpp"

// Command implementations behind the `walkiso` executable. Every command
// writes machine-readable JSON to `out`, diagnostics to `err`, and returns
// its exit code.

namespace walkiso::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kIsomorphic = 0,
  kNotIsomorphic = 1,
  kError = 2,
  kDisagreement = 3,
  kUnresolved = 4,
};

enum class FormatChoice { Auto, Graph6, EdgeList };

inline std::optional<FormatChoice> parse_format_choice(const std::string& s) {
  if (s == "auto") return FormatChoice::Auto;
  if (s == "graph6" || s == "g6") return FormatChoice::Graph6;
  if (s == "edgelist" || s == "edge-list" || s == "edges") return FormatChoice::EdgeList;
  return std::nullopt;
}

inline std::string read_text(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream ss;
    ss << stdin_stream.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph parse_with(const std::string& text, FormatChoice fmt) {
  switch (fmt) {
    case FormatChoice::Graph6: return parse_graph(text, GraphFormat::Graph6);
    case FormatChoice::EdgeList: return parse_graph(text, GraphFormat::EdgeList);
    case FormatChoice::Auto: break;
  }
  return parse_graph(text);
}

inline Graph read_graph_file(const std::string& path, FormatChoice fmt,
                             std::istream& stdin_stream = std::cin) {
  return parse_with(read_text(path, stdin_stream), fmt);
}

/// 64-bit FNV-1a, used to fingerprint corpus files in run manifests.
inline std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// ---------------------------------------------------------------- test

struct TestArgs {
  std::string g1_path;
  std::string g2_path;
  FormatChoice format = FormatChoice::Auto;
  TestConfig config;
};

inline int cmd_test(const TestArgs& args, std::ostream& out, std::ostream& err,
                    std::istream& in = std::cin) {
  Graph g1, g2;
  try {
    g1 = read_graph_file(args.g1_path, args.format, in);
    g2 = read_graph_file(args.g2_path, args.format, in);
  } catch (const std::exception& e) {
    err << "walkiso test: " << e.what() << '\n';
    return kError;
  }
  Verdict v = iso_test(g1, g2, args.config);
  json j = to_json(v);
  if (v.falsification_event) j["falsification"] = stopping_rule_falsification(g1, g2, v);
  out << j.dump() << '\n';
  return v.decision == Decision::Isomorphic ? kIsomorphic : kNotIsomorphic;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string g1_path;
  std::string g2_path;
  FormatChoice format = FormatChoice::Auto;
  std::uint64_t budget = kDefaultOracleBudget;
};

inline int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err,
                      std::istream& in = std::cin) {
  Graph g1, g2;
  try {
    g1 = read_graph_file(args.g1_path, args.format, in);
    g2 = read_graph_file(args.g2_path, args.format, in);
  } catch (const std::exception& e) {
    err << "walkiso oracle: " << e.what() << '\n';
    return kError;
  }
  try {
    auto r = exact_isomorphic(g1, g2, args.budget);
    out << to_json(r).dump() << '\n';
    return r.isomorphic() ? kIsomorphic : kNotIsomorphic;
  } catch (const BudgetExhausted& e) {
    out << json{{"outcome", "unresolved"}, {"nodes_explored", e.nodes_explored()}}.dump() << '\n';
    err << "walkiso oracle: " << e.what() << '\n';
    return kUnresolved;
  }
}

// ---------------------------------------------------------------- convert

struct ConvertArgs {
  FormatChoice from = FormatChoice::Auto;
  FormatChoice to = FormatChoice::Graph6;
  std::string input = "-";
  std::string output = "-";
};

inline int cmd_convert(const ConvertArgs& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  if (args.to == FormatChoice::Auto) {
    err << "walkiso convert: output format must be graph6 or edgelist\n";
    return kError;
  }
  std::string text;
  try {
    Graph g = parse_with(read_text(args.input, in), args.from);
    text = args.to == FormatChoice::Graph6 ? emit_graph6(g) + "\n" : emit_edge_list(g);
  } catch (const std::exception& e) {
    err << "walkiso convert: " << e.what() << '\n';
    return kError;
  }
  if (args.output == "-") {
    out << text;
  } else {
    std::ofstream f(args.output, std::ios::binary);
    if (!f) {
      err << "walkiso convert: cannot write " << args.output << '\n';
      return kError;
    }
    f << text;
  }
  return 0;
}

// ---------------------------------------------------------------- generator specs

/// "kind:key=value,key=value", e.g. "permuted:n=12,p=0.4,count=100,seed=7".
struct GenSpec {
  std::string kind;
  std::map<std::string, std::string> params;

  static GenSpec parse(const std::string& text) {
    GenSpec s;
    auto colon = text.find(':');
    s.kind = text.substr(0, colon);
    if (colon != std::string::npos) {
      std::stringstream ss(text.substr(colon + 1));
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("generator parameter without '=': " + item);
        s.params[item.substr(0, eq)] = item.substr(eq + 1);
      }
    }
    static const std::map<std::string, std::vector<std::string>> known = {
        {"permuted", {"n", "p", "count", "seed"}},
        {"gnp", {"n", "p", "count", "seed"}},
        {"regular", {"n", "d", "count", "seed"}},
        {"exhaustive", {"n"}},
    };
    auto it = known.find(s.kind);
    if (it == known.end()) throw std::invalid_argument("unknown generator kind: " + s.kind);
    for (const auto& [k, v] : s.params)
      if (std::find(it->second.begin(), it->second.end(), k) == it->second.end())
        throw std::invalid_argument("unknown parameter '" + k + "' for generator " + s.kind);
    return s;
  }

  std::uint64_t u64(const std::string& key, std::uint64_t dflt) const {
    auto it = params.find(key);
    if (it == params.end()) return dflt;
    std::size_t used = 0;
    auto v = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("bad integer for " + key);
    return v;
  }

  double real(const std::string& key, double dflt) const {
    auto it = params.find(key);
    if (it == params.end()) return dflt;
    std::size_t used = 0;
    auto v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("bad number for " + key);
    return v;
  }

  json to_json() const {
    json p = json::object();
    for (const auto& [k, v] : params) p[k] = v;
    return {{"kind", kind}, {"params", p}};
  }
};

struct PairJob {
  Graph g1;
  Graph g2;
  json source;
};

/// Indexed supplier of graph pairs; `make(i)` is pure so pairs can be built
/// on worker threads.
struct PairSource {
  std::uint64_t count = 0;
  std::function<PairJob(std::uint64_t)> make;
  json description;
};

inline PairSource pairs_from_spec(const GenSpec& spec) {
  PairSource src;
  src.description = {{"generator", spec.to_json()}};
  if (spec.kind == "exhaustive") {
    auto n = static_cast<std::size_t>(spec.u64("n", 4));
    auto graphs = std::make_shared<LabeledGraphs>(n);
    const std::uint64_t total = graphs->count();
    src.count = total * (total + 1) / 2;
    src.make = [graphs](std::uint64_t idx) {
      // Unrank idx = j(j+1)/2 + i with i <= j.
      auto j = static_cast<std::uint64_t>((std::sqrt(1.0 + 8.0 * static_cast<double>(idx)) - 1.0) / 2.0);
      while (j * (j + 1) / 2 > idx) --j;
      while ((j + 1) * (j + 2) / 2 <= idx) ++j;
      std::uint64_t i = idx - j * (j + 1) / 2;
      return PairJob{graphs->at(i), graphs->at(j), json{{"labeled_index", {i, j}}}};
    };
    return src;
  }
  const auto n = static_cast<std::size_t>(spec.u64("n", 8));
  const std::uint64_t count = spec.u64("count", 100);
  const std::uint64_t seed = spec.u64("seed", 1);
  src.count = count;
  if (spec.kind == "permuted") {
    double p = spec.real("p", 0.5);
    src.make = [=](std::uint64_t i) {
      std::uint64_t s = derive_seed(seed, i);
      auto pp = permuted_pair(gnp(n, p, s), derive_seed(s, 1));
      return PairJob{pp.original, pp.permuted, json{{"seed", s}}};
    };
  } else if (spec.kind == "gnp") {
    double p = spec.real("p", 0.5);
    src.make = [=](std::uint64_t i) {
      std::uint64_t s = derive_seed(seed, i);
      return PairJob{gnp(n, p, derive_seed(s, 1)), gnp(n, p, derive_seed(s, 2)), json{{"seed", s}}};
    };
  } else if (spec.kind == "regular") {
    auto d = static_cast<std::size_t>(spec.u64("d", 3));
    src.make = [=](std::uint64_t i) {
      std::uint64_t s = derive_seed(seed, i);
      return PairJob{random_regular(n, d, derive_seed(s, 1)), random_regular(n, d, derive_seed(s, 2)),
                     json{{"seed", s}}};
    };
  }
  return src;
}

inline PairSource pairs_from_corpus(std::vector<CorpusEntry> entries, const std::string& path) {
  auto shared = std::make_shared<std::vector<CorpusEntry>>(std::move(entries));
  auto index = std::make_shared<std::vector<std::pair<std::size_t, std::size_t>>>();
  for (std::size_t j = 0; j < shared->size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((*shared)[i].graph.order() == (*shared)[j].graph.order()) index->emplace_back(i, j);
  PairSource src;
  src.count = index->size();
  src.description = {{"corpus", path}, {"graphs", shared->size()}};
  src.make = [shared, index](std::uint64_t k) {
    auto [i, j] = (*index)[k];
    const auto& a = (*shared)[i];
    const auto& b = (*shared)[j];
    return PairJob{a.graph, b.graph, json{{"lines", {a.line, b.line}}}};
  };
  return src;
}

// ---------------------------------------------------------------- hunt

enum class Classification { Agreement, Disagreement, Unresolved };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Agreement: return "agreement";
    case Classification::Disagreement: return "disagreement";
    case Classification::Unresolved: return "unresolved";
  }
  return "unknown";
}

struct HuntOptions {
  std::size_t audit_max_n = 16;
  std::uint64_t budget = 5'000'000;
};

struct HuntRecord {
  Classification classification = Classification::Unresolved;
  bool falsification = false;
  json line;
};

/// Runs the walk-count test and (within limits) the oracle on one pair and
/// classifies the outcome. Budget exhaustion or a skipped oracle is never an
/// agreement unless the walk-count test produced a verified mapping.
inline HuntRecord audit_pair(std::uint64_t index, const PairJob& job, const HuntOptions& opt) {
  HuntRecord rec;
  Verdict v = iso_test(job.g1, job.g2);
  const bool claims_iso = v.decision == Decision::Isomorphic;
  json oracle;
  std::optional<bool> oracle_iso;
  if (job.g1.order() <= opt.audit_max_n && job.g2.order() <= opt.audit_max_n) {
    try {
      auto r = exact_isomorphic(job.g1, job.g2, opt.budget);
      oracle_iso = r.isomorphic();
      oracle = {{"status", *oracle_iso ? "isomorphic" : "non_isomorphic"},
                {"nodes_explored", r.nodes_explored}};
    } catch (const BudgetExhausted& e) {
      oracle = {{"status", "budget_exhausted"}, {"nodes_explored", e.nodes_explored()}};
    }
  } else {
    oracle = {{"status", "skipped"}, {"nodes_explored", 0}};
  }
  if (oracle_iso)
    rec.classification = (*oracle_iso == claims_iso) ? Classification::Agreement : Classification::Disagreement;
  else if (claims_iso && v.mapping_verified.value_or(false))
    rec.classification = Classification::Agreement;
  else
    rec.classification = Classification::Unresolved;
  rec.falsification = v.falsification_event;

  json verdict{{"decision", to_string(v.decision)},
               {"decided_at_k", v.decided_at_k},
               {"stop_rule", to_string(v.stop_rule)}};
  if (v.mapping_verified) verdict["mapping_verified"] = *v.mapping_verified;
  rec.line = {{"index", index},
              {"source", job.source},
              {"n", job.g1.order()},
              {"g1", emit_graph6(job.g1)},
              {"g2", emit_graph6(job.g2)},
              {"verdict", std::move(verdict)},
              {"oracle", std::move(oracle)},
              {"classification", to_string(rec.classification)},
              {"falsification_event", rec.falsification}};
  if (rec.classification == Classification::Disagreement || rec.falsification) {
    TestConfig full;
    full.trace = TraceLevel::Full;
    rec.line["trace"] = to_json(iso_test(job.g1, job.g2, full));
  }
  return rec;
}

struct HuntSummary {
  std::uint64_t pairs = 0;
  std::uint64_t agreements = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t unresolved = 0;
  std::uint64_t falsification_events = 0;

  json to_json() const {
    return {{"pairs", pairs},
            {"agreements", agreements},
            {"disagreements", disagreements},
            {"unresolved", unresolved},
            {"falsification_events", falsification_events}};
  }

  int exit_code() const {
    if (disagreements > 0) return kDisagreement;
    if (unresolved > 0) return kUnresolved;
    return 0;
  }
};

/// Audits every pair of `src`, streaming one JSON line per pair (or only
/// the non-agreements when `only_problems`) in index order, then a summary
/// line. Disagreements and falsification events also go to `persist`.
inline HuntSummary run_hunt(const PairSource& src, const HuntOptions& opt, std::size_t jobs,
                            bool only_problems, std::ostream& out, std::ostream* persist) {
  HuntSummary sum;
  constexpr std::uint64_t kBatch = 2048;
  std::vector<HuntRecord> batch;
  for (std::uint64_t start = 0; start < src.count; start += kBatch) {
    const std::uint64_t len = std::min(kBatch, src.count - start);
    batch.assign(len, {});
    parallel_for(len, jobs, [&](std::size_t i) {
      batch[i] = audit_pair(start + i, src.make(start + i), opt);
    });
    for (auto& r : batch) {
      ++sum.pairs;
      switch (r.classification) {
        case Classification::Agreement: ++sum.agreements; break;
        case Classification::Disagreement: ++sum.disagreements; break;
        case Classification::Unresolved: ++sum.unresolved; break;
      }
      if (r.falsification) ++sum.falsification_events;
      const bool problem = r.classification != Classification::Agreement || r.falsification;
      if (!only_problems || problem) out << r.line.dump() << '\n';
      if (persist && (r.classification == Classification::Disagreement || r.falsification))
        *persist << r.line.dump() << '\n';
    }
    out.flush();
  }
  return sum;
}

struct HuntArgs {
  std::optional<std::string> corpus;
  std::optional<std::string> gen;
  HuntOptions options;
  std::size_t jobs = 0;  // 0 → default_jobs()
  bool skip_bad_lines = false;
  bool only_problems = false;
  std::string persist_path = "hunt_disagreements.jsonl";
  std::optional<std::string> manifest_path;
  std::vector<std::string> argv;
};

inline int cmd_hunt(const HuntArgs& args, std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  if (args.corpus.has_value() == args.gen.has_value()) {
    err << "walkiso hunt: exactly one of --corpus or --gen is required\n";
    return kError;
  }
  const std::size_t jobs = args.jobs ? args.jobs : default_jobs();
  PairSource src;
  json manifest{{"tool", "walkiso"}, {"version", kVersion}, {"command", "hunt"}, {"argv", args.argv},
                {"audit_max_n", args.options.audit_max_n}, {"budget", args.options.budget},
                {"jobs", jobs}, {"prng", "mt19937_64+splitmix64"}};
  try {
    if (args.corpus) {
      std::string text = read_text(*args.corpus, std::cin);
      std::istringstream in(text);
      auto corpus = load_corpus(in, args.skip_bad_lines);
      for (const auto& w : corpus.warnings) err << "walkiso hunt: warning: " << w << '\n';
      manifest["corpus"] = {{"path", *args.corpus}, {"fnv1a64", fnv1a64_hex(text)},
                            {"graphs", corpus.entries.size()}, {"skipped_lines", corpus.warnings.size()}};
      src = pairs_from_corpus(std::move(corpus.entries), *args.corpus);
    } else {
      auto spec = GenSpec::parse(*args.gen);
      manifest["generator"] = spec.to_json();
      src = pairs_from_spec(spec);
    }
  } catch (const std::exception& e) {
    err << "walkiso hunt: " << e.what() << '\n';
    return kError;
  }
  if (args.manifest_path) {
    std::ofstream mf(*args.manifest_path);
    if (!mf) {
      err << "walkiso hunt: cannot write manifest " << *args.manifest_path << '\n';
      return kError;
    }
    mf << manifest.dump(2) << '\n';
  }
  std::ofstream persist;
  if (!args.persist_path.empty()) {
    persist.open(args.persist_path);
    if (!persist) {
      err << "walkiso hunt: cannot write " << args.persist_path << '\n';
      return kError;
    }
  }
  HuntSummary sum;
  try {
    sum = run_hunt(src, args.options, jobs, args.only_problems, out,
                   persist.is_open() ? &persist : nullptr);
  } catch (const std::exception& e) {
    err << "walkiso hunt: " << e.what() << '\n';
    return kError;
  }
  const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  out << json{{"summary", sum.to_json()}, {"command", args.argv}, {"source", src.description},
              {"elapsed_ms", ms}}.dump()
      << '\n';
  return sum.exit_code();
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::size_t n_min = 16;
  std::size_t n_max = 128;
  std::size_t samples = 3;
  std::size_t degree = 3;
  std::uint64_t seed = 1;
  bool early_exit = false;
};

struct BenchRow {
  std::size_t n = 0;
  std::vector<Verdict> verdicts;
  std::vector<double> wall_ms;
};

inline double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

/// Least-squares slope of log(y) against log(x).
inline std::optional<double> log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0 && y[i] > 0) pts.emplace_back(std::log(x[i]), std::log(y[i]));
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (auto [a, b] : pts) {
    mx += a;
    my += b;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (auto [a, b] : pts) {
    sxy += (a - mx) * (b - my);
    sxx += (a - mx) * (a - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

/// n·log₂n, the bit length of the n^n entry bound.
inline double entry_bitlen_bound(std::size_t n) {
  return static_cast<double>(n) * std::log2(static_cast<double>(n));
}

/// Permuted pairs of random d-regular graphs at n = n_min, 2·n_min, ... ≤ n_max.
inline json run_bench(const BenchArgs& args) {
  using clock = std::chrono::steady_clock;
  if (args.n_min < 2 || args.n_max < args.n_min || args.samples == 0)
    throw std::invalid_argument("need 2 <= n-min <= n-max and samples >= 1");
  TestConfig cfg;
  cfg.early_exit = args.early_exit;
  cfg.trace = TraceLevel::Summary;
  json rows = json::array();
  std::vector<double> ns, mults;
  for (std::size_t n = args.n_min; n <= args.n_max; n *= 2) {
    std::vector<double> m, a, c, bits, ms, ks;
    std::size_t worst_bits = 0;
    for (std::size_t s = 0; s < args.samples; ++s) {
      const std::uint64_t seed = derive_seed(args.seed, n * 100003 + s);
      auto g = random_regular(n, args.degree, seed);
      auto pair = permuted_pair(g, derive_seed(seed, 1));
      const auto t0 = clock::now();
      Verdict v = iso_test(pair.original, pair.permuted, cfg);
      ms.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
      m.push_back(static_cast<double>(v.op_count.mults));
      a.push_back(static_cast<double>(v.op_count.adds));
      c.push_back(static_cast<double>(v.op_count.comparisons));
      bits.push_back(static_cast<double>(v.op_count.max_bitlen));
      ks.push_back(static_cast<double>(v.decided_at_k));
      worst_bits = std::max(worst_bits, v.op_count.max_bitlen);
    }
    const double bound = entry_bitlen_bound(n);
    rows.push_back({{"n", n},
                    {"samples", args.samples},
                    {"median", {{"mults", median(m)},
                                {"adds", median(a)},
                                {"comparisons", median(c)},
                                {"max_bitlen", median(bits)},
                                {"decided_at_k", median(ks)},
                                {"wall_ms", median(ms)}}},
                    {"worst_max_bitlen", worst_bits},
                    {"bitlen_bound", bound},
                    {"bitlen_within_bound", static_cast<double>(worst_bits) <= bound}});
    ns.push_back(static_cast<double>(n));
    mults.push_back(median(m));
    if (n > args.n_max / 2) break;
  }
  auto slope = log_log_slope(ns, mults);
  return {{"config", {{"n_min", args.n_min}, {"n_max", args.n_max}, {"samples", args.samples},
                      {"degree", args.degree}, {"seed", args.seed}, {"early_exit", args.early_exit}}},
          {"rows", rows},
          {"fit", {{"log_log_slope_mults", slope ? json(*slope) : json(nullptr)}}}};
}

inline int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    out << run_bench(args).dump(2) << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "walkiso bench: " << e.what() << '\n';
    return kError;
  }
}

// ---------------------------------------------------------------- probe

struct ProbeArgs {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t max_n = 6;
  std::size_t jobs = 0;
  std::string persist_path;
};

struct ProbeSummary {
  std::uint64_t trials = 0;
  std::uint64_t first_difference = 0;
  std::uint64_t identical = 0;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> by_family;  // (trials, identical)

  json to_json() const {
    json fam = json::object();
    for (const auto& [k, v] : by_family) fam[k] = {{"trials", v.first}, {"identical", v.second}};
    return {{"trials", trials}, {"first_difference", first_difference},
            {"identical", identical}, {"by_family", fam}};
  }
};

/// Trial i uses family i mod 4 and seed derive_seed(seed, i). Identical
/// outcomes are falsification events; they are reported and the run goes on.
inline ProbeSummary run_probe(const ProbeArgs& args, std::ostream& events, std::ostream* persist) {
  ProbeSummary sum;
  const std::size_t jobs = args.jobs ? args.jobs : default_jobs();
  std::vector<std::optional<json>> found(args.trials);
  std::vector<ProbeFamily> fams(args.trials);
  parallel_for(args.trials, jobs, [&](std::size_t i) {
    auto family = kProbeFamilies[i % kProbeFamilies.size()];
    auto t = run_probe_trial(family, derive_seed(args.seed, i), args.max_n);
    fams[i] = family;
    if (t.result.identical) {
      json ev = matrix_probe_falsification(t.a, t.b, t.seed, to_string(family));
      ev["trial"] = i;
      found[i] = std::move(ev);
    }
  });
  for (std::uint64_t i = 0; i < args.trials; ++i) {
    ++sum.trials;
    auto& fam = sum.by_family[to_string(fams[i])];
    ++fam.first;
    if (found[i]) {
      ++sum.identical;
      ++fam.second;
      events << found[i]->dump() << '\n';
      if (persist) *persist << found[i]->dump() << '\n';
    } else {
      ++sum.first_difference;
    }
  }
  return sum;
}

inline int cmd_probe(const ProbeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_n < 2) {
    err << "walkiso probe: --max-n must be at least 2\n";
    return kError;
  }
  std::ofstream persist;
  if (!args.persist_path.empty()) {
    persist.open(args.persist_path);
    if (!persist) {
      err << "walkiso probe: cannot write " << args.persist_path << '\n';
      return kError;
    }
  }
  ProbeSummary sum;
  try {
    sum = run_probe(args, out, persist.is_open() ? &persist : nullptr);
  } catch (const std::exception& e) {
    err << "walkiso probe: " << e.what() << '\n';
    return kError;
  }
  out << json{{"summary", sum.to_json()}}.dump() << '\n';
  if (sum.identical > 0)
    err << "walkiso probe: " << sum.identical
        << " distinct matrix pair(s) with identical power diagonals\n";
  return sum.identical > 0 ? kDisagreement : 0;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string gen;
  std::string output = "-";
  std::optional<std::string> manifest_path;
};

/// Writes generated graphs as graph6 lines plus one JSON manifest line per
/// graph recording (generator, params, seed).
inline int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  std::ostringstream g6, man;
  try {
    auto spec = GenSpec::parse(args.gen);
    if (spec.kind == "exhaustive") {
      LabeledGraphs all(static_cast<std::size_t>(spec.u64("n", 4)));
      for (std::uint64_t i = 0; i < all.count(); ++i) {
        g6 << emit_graph6(all.at(i)) << '\n';
        man << json{{"line", i + 1}, {"generator", spec.kind}, {"params", spec.to_json()["params"]},
                    {"labeled_index", i}}.dump()
            << '\n';
      }
    } else {
      auto src = pairs_from_spec(spec);
      std::uint64_t line = 0;
      for (std::uint64_t i = 0; i < src.count; ++i) {
        auto job = src.make(i);
        for (const auto* g : {&job.g1, &job.g2}) {
          g6 << emit_graph6(*g) << '\n';
          man << json{{"line", ++line}, {"generator", spec.kind}, {"params", spec.to_json()["params"]},
                      {"instance", i}, {"role", g == &job.g1 ? "first" : "second"},
                      {"seed", job.source["seed"]}}.dump()
              << '\n';
        }
      }
    }
  } catch (const std::exception& e) {
    err << "walkiso generate: " << e.what() << '\n';
    return kError;
  }
  if (args.output == "-") {
    out << g6.str();
  } else {
    std::ofstream f(args.output);
    if (!f) {
      err << "walkiso generate: cannot write " << args.output << '\n';
      return kError;
    }
    f << g6.str();
  }
  if (args.manifest_path) {
    std::ofstream f(*args.manifest_path);
    if (!f) {
      err << "walkiso generate: cannot write " << *args.manifest_path << '\n';
      return kError;
    }
    f << man.str();
  }
  return 0;
}

}  // namespace walkiso::cli
