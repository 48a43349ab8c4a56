#ifndef GRACEGRAPH_SOLVER_HPP
#define GRACEGRAPH_SOLVER_HPP

/*
 * Exact graceful-labeling search: decision with witness, complete
 * enumeration (raw or up to complement), smallest achievable max label,
 * and per-node / per-edge attainable-label spectra.
 *
 * The search assigns labels to nodes in descending-degree order inside
 * top-level branches that fix the {0,q} endpoints of the edge realizing
 * label q; the complement closure restores the full labeling set. Budgets
 * are counted in label-placement attempts, split evenly over the
 * top-level branches, so runs are reproducible and worker counts never
 * change verdicts, witnesses, or reported counters.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gracegraph/graph.hpp"
#include "gracegraph/labeling.hpp"

namespace gracegraph {

inline constexpr long long kDefaultSolveBudget = 200000000;
inline constexpr int kMaxSolvableSize = 62;  // labels live in one 64-bit mask

enum class Verdict {
  graceful,
  nongraceful_exhausted,
  nongraceful_rosa_golomb,
  budget_exceeded,
};

std::string to_string(Verdict v);

struct SolveOptions {
  long long budget = kDefaultSolveBudget;
  bool rosa_golomb_shortcut = true;
  // Canonical label order inside sets of interchangeable nodes (equal open
  // or closed neighborhoods). Sound for decision and exhaustion; never
  // applied while enumerating.
  bool break_twin_labels = true;
  int workers = 1;
};

struct SearchOutcome {
  Verdict verdict = Verdict::budget_exceeded;
  std::optional<Labeling> witness;
  std::optional<int> opt;  // smallest achievable max label (optimal_labeling)
  bool opt_minimal_proven = false;
  long long nodes_expanded = 0;
  double wall_ms = 0;
};

SearchOutcome solve_graceful(const Graph& g, const SolveOptions& opts = {});

enum class EnumMode { raw, up_to_complement };

struct EnumerationResult {
  std::vector<Labeling> labelings;
  bool complete = true;
  long long nodes_expanded = 0;
  double wall_ms = 0;

  // histogram over the node label in {0..q} each labeling leaves unused;
  // populated when p == q (unicyclic case: exactly one missing label)
  std::map<int, long long> by_missing_node_label;
};

EnumerationResult enumerate_graceful(const Graph& g, EnumMode mode,
                                     const SolveOptions& opts = {});

// Smallest max label M >= q admitting distinct node labels in {0..M} with
// label 0 used and pairwise distinct edge labels; every smaller M is
// exhausted first, so a reported opt is proven minimal.
SearchOutcome optimal_labeling(const Graph& g, const SolveOptions& opts = {});

// Every injective labeling into {0..max_label} that uses label 0 and gives
// pairwise distinct edge values (which need not cover 1..q). Raw material
// for the embedding constructions.
EnumerationResult enumerate_bounded_labelings(const Graph& g, int max_label,
                                              const SolveOptions& opts = {});

struct AttractSpectrum {
  bool graceful = false;
  bool complete = true;
  std::vector<std::vector<int>> node_labels;  // attainable labels per node
  std::vector<std::vector<int>> edge_values;  // attainable values per edge
};

AttractSpectrum attract_spectrum(const Graph& g, const SolveOptions& opts = {});

}  // namespace gracegraph

#endif
