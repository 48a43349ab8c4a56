#ifndef GRACEGRAPH_EPSILON_HPP
#define GRACEGRAPH_EPSILON_HPP

/*
 * Residue classification of Euler graphs by simple-cycle lengths mod 4,
 * the parity-based nongracefulness certificate for Euler graphs, and the
 * structural audit that re-checks the published properties of each
 * residue class on concrete graphs.
 */

#include <array>
#include <string>
#include <vector>

#include "gracegraph/cycles.hpp"
#include "gracegraph/graph.hpp"

namespace gracegraph {

enum class EpsilonClass {
  eps0,
  eps1,
  eps2,
  eps3,
  mixed,           // Euler, at least two residues among simple cycles
  acyclic,         // no cycle at all
  not_applicable,  // not Euler but has cycles
  unknown,         // cycle census truncated before a residue was excluded
};

enum class RosaGolombVerdict { certified_nongraceful, inconclusive, not_euler };

enum class AuditStatus { pass, fail, skipped };

struct AuditRecord {
  std::string id;
  AuditStatus status = AuditStatus::skipped;
  std::string detail;
};

struct EpsilonReport {
  EpsilonClass epsilon_class = EpsilonClass::unknown;
  RosaGolombVerdict rosa_golomb = RosaGolombVerdict::not_euler;
  bool size_congruence_ok = true;
  std::array<long long, 4> xi{};  // canonical decomposition residues
  std::vector<int> residues;      // distinct cycle-length residues, ascending
  long long cycle_count = 0;
  bool truncated = false;
  std::vector<AuditRecord> audit;
};

std::string to_string(EpsilonClass c);
std::string to_string(RosaGolombVerdict v);
std::string to_string(AuditStatus s);

// Sum 1..q must be even for a graceful Euler graph, so q = 1,2 (mod 4)
// certifies nongracefulness outright.
RosaGolombVerdict rosa_golomb(const Graph& g);

EpsilonReport classify_epsilon(const Graph& g, long long cycle_cap = kSimpleCycleCap);

// classify_epsilon plus the per-theorem audit records. Requires an Euler
// input; a mixed-residue graph gets only the Euler-generic checks.
EpsilonReport structure_audit(const Graph& g, long long cycle_cap = kSimpleCycleCap,
                              long long census_cap = kDecompositionCap);

}  // namespace gracegraph

#endif
