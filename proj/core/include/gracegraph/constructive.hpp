#ifndef GRACEGRAPH_CONSTRUCTIVE_HPP
#define GRACEGRAPH_CONSTRUCTIVE_HPP

/*
 * Graceful-preserving constructions. Every record is re-checked with the
 * independent labeling evaluator before it is returned; a construction
 * that fails its own arithmetic throws instead of emitting verified=false.
 */

#include <string>
#include <vector>

#include "gracegraph/graph.hpp"
#include "gracegraph/labeling.hpp"
#include "gracegraph/solver.hpp"

namespace gracegraph {

struct ConstructionRecord {
  std::string construction;
  Graph input_graph;
  Labeling input_labeling;
  Graph output_graph;
  Labeling output_labeling;
  bool verified = false;
};

// q - phi, after confirming phi really is graceful for g.
Labeling complement_labeling(const Graph& g, const Labeling& l);

// k new pendant nodes at the 0-labeled node, labeled q+1..q+k; the result
// is a graceful (p+k, q+k)-graph whose new edges realize q+1..q+k.
ConstructionRecord attach_star_at_zero(const Graph& g, const Labeling& l,
                                       int k);

// Plants a caterpillar whose root spine node is identified with the
// 0-labeled node. leaf_counts[i] is the number of leaves on spine node i;
// the root is position 0, so {0} plants nothing and {k} is a plain star.
// Realized by alternating star attachment (next spine hop attached last,
// taking the max label) with complementation, which moves label 0 onto
// the hop.
ConstructionRecord plant_caterpillar_graceful(const Graph& g,
                                              const Labeling& l,
                                              const std::vector<int>& leaf_counts);

struct TreeEdgeRecord {
  Labeling labeling;  // graceful labeling of the tree
  Edge nonedge;
  bool extreme_pair = false;  // nonedge endpoints carry labels 0 and p-1
  Verdict verdict = Verdict::budget_exceeded;  // for tree + nonedge
};

struct TreeEdgeSurvey {
  std::vector<TreeEdgeRecord> records;
  std::vector<Edge> nongraceful_nonedges;  // tree+uv nongraceful
  long long extreme_nongraceful = 0;  // records with extreme_pair and a
                                      // nongraceful unicyclic graph
  bool complete = true;
};

// For every graceful labeling of the tree and every nonedge uv, solves
// tree+uv and records the outcome. Counterexamples to "tree plus any
// nonedge is graceful" are collected, not suppressed.
TreeEdgeSurvey tree_plus_edge_survey(const Graph& t,
                                     const SolveOptions& opts = {});

// Graceful host containing g as an induced subgraph. Starts from a
// bounded-max-label labeling of g and adds one new node per missing edge
// value, each joined by a single edge realizing that value; the bound
// rises until the realization succeeds.
ConstructionRecord embed_graceful_induced(const Graph& g,
                                          const SolveOptions& opts = {});

struct OptimalEmbedding {
  ConstructionRecord record;
  int minimal_order = 0;
  bool minimal_proven = false;
  bool host_connected = false;
};

// Minimum-order graceful host containing g induced, exhaustive over host
// orders from p upward (host edges touch only new nodes, so the order-p
// candidate is g itself).
OptimalEmbedding optimal_graceful_embedding(const Graph& g,
                                            const SolveOptions& opts = {});

// Embeds a connected bipartite graph in a bipartite graph with all even
// degrees by adding at most two nodes: one per side adjacent to the other
// side's odd-degree nodes, joined to each other when both odd counts are
// odd.
Graph euler_bipartite_closure(const Graph& g);

}  // namespace gracegraph

#endif
