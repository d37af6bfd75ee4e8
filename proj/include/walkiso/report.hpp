#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "walkiso/formats.hpp"
#include "walkiso/iso_test.hpp"
#include "walkiso/matrix.hpp"
#include "walkiso/oracle.hpp"
#include "walkiso/spectral.hpp"

// JSON documents. Big integers are written as decimal strings.

namespace walkiso {

using json = nlohmann::json;

inline json to_json(const OpCounter& c) {
  return {{"mults", c.mults},
          {"adds", c.adds},
          {"comparisons", c.comparisons},
          {"max_bitlen", c.max_bitlen}};
}

inline json to_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

inline json to_json(const Permutation& p) { return p.mapping(); }

inline const char* to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::NotRun: return "not_run";
    case AuditStatus::Agrees: return "agrees";
    case AuditStatus::Disagrees: return "disagrees";
    case AuditStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

inline json to_json(const Verdict& v) {
  json j;
  j["decision"] = to_string(v.decision);
  j["decided_at_k"] = v.decided_at_k;
  j["stop_rule"] = to_string(v.stop_rule);
  j["prechecked"] = v.prechecked;
  j["n"] = v.n;
  json hist = json::array();
  for (const auto& s : v.trace) {
    json h{{"k", s.k}, {"diagonals_equal", s.diagonals_equal}};
    if (!s.multiplicities1.empty()) h["multiplicities"] = s.multiplicities1;
    if (!s.diagonals_equal && !s.multiplicities2.empty()) h["multiplicities_g2"] = s.multiplicities2;
    if (!s.diagonal1.empty()) {
      h["diagonal_g1"] = to_json(s.diagonal1);
      h["diagonal_g2"] = to_json(s.diagonal2);
    }
    hist.push_back(std::move(h));
  }
  j["multiplicity_history"] = std::move(hist);
  j["op_count"] = to_json(v.op_count);
  if (v.candidate_mapping) j["candidate_mapping"] = to_json(*v.candidate_mapping);
  if (v.mapping_verified) j["mapping_verified"] = *v.mapping_verified;
  j["falsification_event"] = v.falsification_event;
  if (v.audit.status != AuditStatus::NotRun)
    j["oracle_audit"] = {{"status", to_string(v.audit.status)},
                         {"nodes_explored", v.audit.nodes_explored}};
  return j;
}

inline json to_json(const OracleResult& r) {
  json j{{"outcome", r.isomorphic() ? "isomorphic" : "non_isomorphic"},
         {"nodes_explored", r.nodes_explored}};
  if (r.mapping) {
    j["mapping"] = to_json(*r.mapping);
    j["mapping_verified"] = true;
  }
  return j;
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_decimal(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const ProbeResult& p) {
  if (p.identical) return {{"outcome", "identical"}};
  return {{"outcome", "first_difference"}, {"power", p.power}, {"index", p.index}};
}

/// Self-contained record of the singleton stopping rule failing on a pair.
inline json stopping_rule_falsification(const Graph& g1, const Graph& g2, const Verdict& v) {
  TestConfig full;
  full.trace = TraceLevel::Full;
  return {{"event", "falsification"},
          {"claim", "all_singletons_implies_isomorphic"},
          {"g1", emit_graph6(g1)},
          {"g2", emit_graph6(g2)},
          {"verdict", to_json(v)},
          {"full_trace", to_json(iso_test(g1, g2, full))}};
}

/// Distinct non-negative symmetric matrices whose power diagonals all agree.
inline json matrix_probe_falsification(const ExactSymMatrix& a, const ExactSymMatrix& b,
                                       std::uint64_t seed, const std::string& family) {
  return {{"event", "falsification"},
          {"claim", "equal_power_diagonals_imply_equal_matrices"},
          {"family", family},
          {"seed", seed},
          {"a", to_json(a.matrix())},
          {"b", to_json(b.matrix())},
          {"probe", to_json(theorem1_probe(a, b))}};
}

}  // namespace walkiso
