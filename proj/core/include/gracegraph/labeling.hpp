#ifndef GRACEGRAPH_LABELING_HPP
#define GRACEGRAPH_LABELING_HPP

/*
 * Node labelings, the gracefulness evaluator, and the cycle parity
 * validator (the edge-label sum around a cycle must be even).
 */

#include <vector>

#include "gracegraph/cycles.hpp"
#include "gracegraph/graph.hpp"

namespace gracegraph {

struct Labeling {
  std::vector<int> labels;  // labels[v] for node v

  int max_label() const;
  bool operator==(const Labeling&) const = default;
};

// psi(v) = m - labels(v); no gracefulness check here.
Labeling complement(const Labeling& l, int m);

struct Evaluation {
  bool distinct_edges = false;
  bool graceful = false;
  std::vector<int> edge_labels;          // aligned with g.edges()
  std::vector<int> missing_node_labels;  // relative to {0..max_label}
  std::vector<int> missing_edge_labels;  // relative to {1..max_label}
};

// Errors on a labeling of the wrong length, negative labels, or repeated
// labels. Graceful means labels within {0..q} and edge labels exactly {1..q}.
Evaluation evaluate_labeling(const Graph& g, const Labeling& l);

struct GolombParityResult {
  bool all_even = true;
  long long cycles_checked = 0;
  bool complete = true;  // false if the cycle census was truncated
};

GolombParityResult golomb_parity_check(const Graph& g, const Labeling& l,
                                       long long cycle_cap = kSimpleCycleCap);

}  // namespace gracegraph

#endif
