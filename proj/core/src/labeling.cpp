#include "gracegraph/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace gracegraph {

int Labeling::max_label() const {
  int m = 0;
  for (int x : labels) m = std::max(m, x);
  return m;
}

Labeling complement(const Labeling& l, int m) {
  Labeling out;
  out.labels.reserve(l.labels.size());
  for (int x : l.labels) {
    if (x < 0 || x > m) fail_input("complement: label " + std::to_string(x) + " outside [0,m]");
    out.labels.push_back(m - x);
  }
  return out;
}

Evaluation evaluate_labeling(const Graph& g, const Labeling& l) {
  if (static_cast<int>(l.labels.size()) != g.order())
    fail_input("labeling covers " + std::to_string(l.labels.size()) + " nodes, graph has " +
               std::to_string(g.order()));
  std::set<int> seen;
  for (int v = 0; v < g.order(); ++v) {
    int x = l.labels[v];
    if (x < 0) fail_input("negative label " + std::to_string(x) + " at node " + std::to_string(v));
    if (!seen.insert(x).second)
      fail_input("label " + std::to_string(x) + " repeated at node " + std::to_string(v));
  }

  Evaluation ev;
  int m = l.max_label();
  ev.edge_labels.reserve(g.size());
  std::set<int> edge_seen;
  ev.distinct_edges = true;
  for (auto [u, v] : g.edges()) {
    int w = std::abs(l.labels[u] - l.labels[v]);
    ev.edge_labels.push_back(w);
    if (!edge_seen.insert(w).second) ev.distinct_edges = false;
  }
  for (int x = 0; x <= m; ++x)
    if (!seen.count(x)) ev.missing_node_labels.push_back(x);
  for (int w = 1; w <= m; ++w)
    if (!edge_seen.count(w)) ev.missing_edge_labels.push_back(w);

  int q = g.size();
  ev.graceful = (m <= q) && ev.distinct_edges && static_cast<int>(edge_seen.size()) == q &&
                (q == 0 || (*edge_seen.begin() == 1 && *edge_seen.rbegin() == q));
  return ev;
}

GolombParityResult golomb_parity_check(const Graph& g, const Labeling& l,
                                       long long cycle_cap) {
  if (static_cast<int>(l.labels.size()) != g.order())
    fail_input("labeling does not cover the graph");
  GolombParityResult out;
  CycleCatalog cat = simple_cycles(g, cycle_cap);
  out.complete = !cat.truncated;
  for (const auto& c : cat.cycles) {
    long long sum = 0;
    for (size_t i = 0; i < c.size(); ++i)
      sum += std::abs(l.labels[c[i]] - l.labels[c[(i + 1) % c.size()]]);
    ++out.cycles_checked;
    if (sum % 2) out.all_even = false;
  }
  return out;
}

}  // namespace gracegraph
