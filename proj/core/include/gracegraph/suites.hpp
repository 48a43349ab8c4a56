#ifndef GRACEGRAPH_SUITES_HPP
#define GRACEGRAPH_SUITES_HPP

/*
 * Named evidence suites: deterministic corpus generation, per-graph
 * solving on a worker pool, and canonical JSON reports. A refuted claim
 * is a first-class result, never an exception; reports are reproducible
 * bit for bit apart from wall-time fields.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gracegraph/graph.hpp"

namespace gracegraph {

inline constexpr int kSuiteSchemaVersion = 1;

struct SuiteParams {
  // n_max, m_max, order_max, residue, samples, seed, budget, ... suite
  // defaults fill anything missing.
  std::map<std::string, long long> ints;
  std::vector<std::string> graphs;  // graph6, for the "custom" suite
};

struct SuiteRecord {
  std::string graph6;
  int p = 0;
  int q = 0;
  std::string family;  // generator expression or corpus tag
  std::string epsilon_class;
  std::string claim;
  std::string verdict;
  std::string assessment;  // supported | refuted | inconclusive | informational
  std::optional<int> opt;
  std::optional<std::vector<int>> witness;
  long long nodes_expanded = 0;
  double wall_ms = 0;
  std::string detail;
};

struct SuiteSummary {
  long long supported = 0;
  long long refuted = 0;
  long long inconclusive = 0;
  long long informational = 0;
};

struct SuiteReport {
  int schema_version = kSuiteSchemaVersion;
  std::string suite;
  std::vector<std::pair<std::string, std::string>> parameters;  // sorted keys
  std::vector<SuiteRecord> records;  // sorted by graph6, then family
  SuiteSummary summary;
  std::vector<std::string> counterexamples;  // graph6 of refuted records
};

std::vector<std::string> registered_suites();
long long suite_default_budget(const std::string& suite);

SuiteReport run_suite(const std::string& suite, const SuiteParams& params = {},
                      int workers = 1);

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<std::string> diagnostics;  // "line N: why it was skipped"
};

// graph6 lines and/or edge-list blocks ("p q" header, then q "u v" lines);
// malformed input is skipped with a diagnostic, never fatal.
IngestResult ingest_corpus(const std::string& path);

std::string report_json(const SuiteReport& r);
void emit_report(const SuiteReport& r, const std::string& path);

// Deterministic corpora backing the suites.
std::vector<Graph> epsilon_corpus(int residue);
std::vector<Graph> characterization_corpus();  // connected, order <= 10
std::vector<Graph> bipartite_euler_corpus(int order_max);
std::vector<Graph> connected_graph_corpus(int order_max);  // order_max <= 6

}  // namespace gracegraph

#endif
