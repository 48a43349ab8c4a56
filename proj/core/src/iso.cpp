#include "gracegraph/iso.hpp"

#include <algorithm>
#include <map>

#include "gracegraph/graph6.hpp"

namespace gracegraph {

namespace {

using Partition = std::vector<std::vector<int>>;

// Split cells by neighbor counts per cell until stable. The split order
// depends only on the signatures, so it is isomorphism-invariant.
void refine(const Graph& g, Partition& part) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cell_of(g.order());
    for (size_t ci = 0; ci < part.size(); ++ci)
      for (int v : part[ci]) cell_of[v] = static_cast<int>(ci);
    Partition next;
    for (auto& cell : part) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> sig(part.size(), 0);
        for (int w : g.neighbors(v)) ++sig[cell_of[w]];
        split[sig].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, nodes] : split) next.push_back(nodes);
    }
    part = std::move(next);
  }
}

struct CanonSearch {
  const Graph& g;
  std::vector<char> best;
  std::vector<int> best_order;  // position -> old id

  std::vector<char> bits_for(const std::vector<int>& order) const {
    int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<char> bits;
    bits.reserve(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(order[i], order[j]) ? 1 : 0);
    return bits;
  }

  void run(Partition part) {
    refine(g, part);
    size_t ci = 0;
    while (ci < part.size() && part[ci].size() == 1) ++ci;
    if (ci == part.size()) {
      std::vector<int> order;
      order.reserve(part.size());
      for (auto& cell : part) order.push_back(cell[0]);
      auto bits = bits_for(order);
      if (best.empty() || bits < best) {
        best = std::move(bits);
        best_order = std::move(order);
      }
      return;
    }
    for (int v : part[ci]) {
      Partition child;
      child.reserve(part.size() + 1);
      for (size_t k = 0; k < ci; ++k) child.push_back(part[k]);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : part[ci])
        if (w != v) rest.push_back(w);
      child.push_back(rest);
      for (size_t k = ci + 1; k < part.size(); ++k) child.push_back(part[k]);
      run(std::move(child));
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw error(error::kind::unsupported, "canonical form: order above cap");
  if (n == 0) return g;

  // seed partition: group by degree, ascending
  std::map<int, std::vector<int>> by_deg;
  for (int v = 0; v < n; ++v) by_deg[g.degree(v)].push_back(v);
  Partition part;
  for (auto& [d, nodes] : by_deg) part.push_back(nodes);

  CanonSearch cs{g};
  cs.run(std::move(part));

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cs.best_order[i]] = i;
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
  return Graph::build(n, edges);
}

std::string certificate(const Graph& g) { return encode_graph6(canonical_form(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return certificate(a) == certificate(b);
}

}  // namespace gracegraph
