#include "gracegraph/cycles.hpp"

#include <algorithm>
#include <deque>

namespace gracegraph {

namespace {

// DFS rooted at the smallest node of each cycle; a cycle is accepted only
// in the orientation with path[1] < path.back(), so each comes out once.
struct CycleEnum {
  const Graph& g;
  long long cap;
  CycleCatalog out;
  std::vector<int> path;
  std::vector<char> on_path;
  bool done = false;

  void dfs(int root, int v) {
    if (done) return;
    for (int w : g.neighbors(v)) {
      if (done) return;
      if (w == root) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (static_cast<long long>(out.cycles.size()) >= cap) {
            out.truncated = true;
            done = true;
            return;
          }
          out.cycles.push_back(path);
        }
        continue;
      }
      if (w < root || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      dfs(root, w);
      on_path[w] = 0;
      path.pop_back();
    }
  }

  void run() {
    on_path.assign(g.order(), 0);
    for (int root = 0; root < g.order() && !done; ++root) {
      path = {root};
      on_path[root] = 1;
      dfs(root, root);
      on_path[root] = 0;
    }
  }
};

bool all_degrees_even(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2) return false;
  return true;
}

// Shortest v->u path through unused edges avoiding the direct (u,v) edge,
// smallest-predecessor tie break. Exists whenever the unused subgraph has
// all even degrees and contains (u,v).
Cycle greedy_cycle_through(const Graph& g, const std::vector<char>& used, int u, int v) {
  std::vector<int> prev(g.order(), -2);
  std::deque<int> queue{v};
  prev[v] = -1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == u) break;
    for (int y : g.neighbors(x)) {
      if (x == v && y == u) continue;  // would reuse the starting edge
      if (used[g.edge_index(x, y)] || prev[y] != -2) continue;
      prev[y] = x;
      queue.push_back(y);
    }
  }
  if (prev[u] == -2) fail_input("cycle extraction failed; input not Euler");
  Cycle c;
  for (int x = u; x != -1; x = prev[x]) c.push_back(x);
  // c = u, ..., v ; normalize: rotate so min first, orient second < last
  std::reverse(c.begin(), c.end());  // v ... u, closing edge u-v
  auto mn = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), mn, c.end());
  if (c.size() >= 3 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

}  // namespace

CycleCatalog simple_cycles(const Graph& g, long long cap) {
  CycleEnum ce{g, cap};
  ce.run();
  CycleCatalog cat = std::move(ce.out);
  for (const auto& c : cat.cycles) {
    cat.length_multiset.push_back(static_cast<int>(c.size()));
    cat.residues[c.size() % 4] = true;
  }
  std::sort(cat.length_multiset.begin(), cat.length_multiset.end());

  if (all_degrees_even(g) && is_connected(g) && g.order() > 0) {
    std::vector<char> used(g.size(), 0);
    long long remaining = g.size();
    while (remaining > 0) {
      int ei = 0;
      while (used[ei]) ++ei;
      auto [u, v] = g.edges()[ei];
      std::vector<char> with_start = used;
      with_start[ei] = 1;
      Cycle c = greedy_cycle_through(g, with_start, u, v);
      for (size_t i = 0; i < c.size(); ++i) {
        int a = c[i], b = c[(i + 1) % c.size()];
        used[g.edge_index(a, b)] = 1;
        --remaining;
      }
      cat.xi[c.size() % 4] += 1;
      cat.decomposition.push_back(std::move(c));
    }
  }
  return cat;
}

namespace {

struct CensusSearch {
  const Graph& g;
  long long cap;
  DecompositionCensus out;
  std::vector<char> used;
  std::vector<std::vector<int>> chosen;  // cycles of the current partial decomposition
  std::vector<int> path;
  std::vector<char> on_path;

  // enumerate simple cycles through the smallest unused edge, recursing on
  // the remainder for each
  void extend() {
    if (!out.complete) return;
    int ei = 0, q = g.size();
    while (ei < q && used[ei]) ++ei;
    if (ei == q) {
      if (static_cast<long long>(out.decompositions.size()) >= cap) {
        out.complete = false;
        return;
      }
      out.decompositions.push_back(chosen);
      return;
    }
    auto [u, v] = g.edges()[ei];
    used[ei] = 1;
    path = {u, v};
    on_path.assign(g.order(), 0);
    on_path[u] = on_path[v] = 1;
    cycle_dfs(u, v, ei);
    used[ei] = 0;
  }

  void cycle_dfs(int target, int v, int start_edge) {
    if (!out.complete) return;
    for (int w : g.neighbors(v)) {
      int ei = g.edge_index(v, w);
      if (used[ei]) continue;
      if (w == target) {
        if (path.size() < 3) continue;
        used[ei] = 1;
        Cycle c = path;
        chosen.push_back(std::move(c));
        auto saved_path = path;
        extend();
        path = saved_path;
        on_path.assign(g.order(), 0);
        for (int x : path) on_path[x] = 1;
        chosen.pop_back();
        used[ei] = 0;
        continue;
      }
      if (on_path[w]) continue;
      used[ei] = 1;
      path.push_back(w);
      on_path[w] = 1;
      cycle_dfs(target, w, start_edge);
      on_path[w] = 0;
      path.pop_back();
      used[ei] = 0;
    }
  }
};

}  // namespace

DecompositionCensus cycle_decompositions(const Graph& g, long long cap) {
  if (g.order() == 0) return {};
  if (!all_degrees_even(g) || !is_connected(g))
    fail_input("cycle decompositions require an Euler graph");
  CensusSearch cs{g, cap};
  cs.used.assign(g.size(), 0);
  cs.extend();
  return std::move(cs.out);
}

bool has_cycle_decomposition(const Graph& g) {
  // Veblen: decomposable iff every degree is even; verified by stripping
  // greedy cycles rather than by the degree test alone.
  if (!all_degrees_even(g)) return false;
  std::vector<char> used(g.size(), 0);
  long long remaining = g.size();
  while (remaining > 0) {
    int ei = 0;
    while (used[ei]) ++ei;
    auto [u, v] = g.edges()[ei];
    std::vector<char> with_start = used;
    with_start[ei] = 1;
    Cycle c;
    try {
      c = greedy_cycle_through(g, with_start, u, v);
    } catch (const error&) {
      return false;
    }
    for (size_t i = 0; i < c.size(); ++i) {
      used[g.edge_index(c[i], c[(i + 1) % c.size()])] = 1;
      --remaining;
    }
  }
  return true;
}

EdgeCycleParity edge_cycle_parity(const Graph& g, const CycleCatalog& catalog) {
  if (catalog.truncated)
    fail_input("edge cycle parity needs a complete cycle catalog");
  EdgeCycleParity out;
  out.per_edge.assign(g.size(), 0);
  for (const auto& c : catalog.cycles)
    for (size_t i = 0; i < c.size(); ++i)
      ++out.per_edge[g.edge_index(c[i], c[(i + 1) % c.size()])];
  out.all_odd = g.size() > 0 || out.per_edge.empty();
  for (long long k : out.per_edge)
    if (k % 2 == 0) out.all_odd = false;
  return out;
}

int edge_disjoint_path_count(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v)
    fail_input("edge_disjoint_path_count: invalid node pair");
  // unit-capacity max flow; each undirected edge is an arc pair
  int q = g.size();
  std::vector<int> cap(2 * q, 1);  // arc 2e: lo->hi, arc 2e+1: hi->lo
  int flow = 0;
  while (true) {
    std::vector<int> how(g.order(), -2);  // arc used to reach node
    std::deque<int> queue{u};
    how[u] = -1;
    while (!queue.empty() && how[v] == -2) {
      int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x)) {
        if (how[y] != -2) continue;
        int e = g.edge_index(x, y);
        int arc = 2 * e + (x < y ? 0 : 1);
        if (cap[arc] <= 0) continue;
        how[y] = arc;
        queue.push_back(y);
      }
    }
    if (how[v] == -2) break;
    ++flow;
    int x = v;
    while (how[x] != -1) {
      int arc = how[x];
      --cap[arc];
      ++cap[arc ^ 1];
      auto [a, b] = g.edges()[arc / 2];
      x = (arc % 2 == 0) ? a : b;  // arc 2e points lo->hi, so we came from lo
    }
  }
  return flow;
}

}  // namespace gracegraph
