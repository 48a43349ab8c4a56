#include "gracegraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gracegraph {

Graph Graph::build(int p, std::span<const Edge> edges) {
  if (p < 0) fail_input("graph order must be nonnegative, got " + std::to_string(p));
  Graph g;
  g.p_ = p;
  g.adj_.assign(p, {});
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= p || v < 0 || v >= p)
      fail_input("edge (" + std::to_string(u) + "," + std::to_string(v) +
                 ") out of range for order " + std::to_string(p));
    if (u == v)
      fail_input("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
    if (u > v) std::swap(u, v);
    g.edges_.emplace_back(u, v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    fail_input("duplicate edge (" + std::to_string(dup->first) + "," +
               std::to_string(dup->second) + ") rejected");
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= p_ || v >= p_ || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

namespace {

std::vector<int> component_of(const Graph& g, int start) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{start}, out;
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return out;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return static_cast<int>(component_of(g, 0).size()) == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

StructuralProfile structural_profile(const Graph& g) {
  StructuralProfile s;
  int p = g.order();
  s.connected = is_connected(g);

  s.degree_sequence.resize(p);
  for (int v = 0; v < p; ++v) s.degree_sequence[v] = g.degree(v);
  std::sort(s.degree_sequence.begin(), s.degree_sequence.end());
  for (int v = 0; v < p; ++v)
    if (g.degree(v) == 1) s.pendant_nodes.push_back(v);

  if (p > 0 && s.degree_sequence.front() == s.degree_sequence.back())
    s.regular_degree = s.degree_sequence.front();

  bool all_even = true;
  for (int d : s.degree_sequence)
    if (d % 2) all_even = false;
  s.euler = s.connected && all_even && p > 0;

  // 2-coloring; works per component
  std::vector<int> color(p, -1);
  bool bip = true;
  for (int s0 = 0; s0 < p && bip; ++s0) {
    if (color[s0] != -1) continue;
    color[s0] = 0;
    std::vector<int> stack{s0};
    while (!stack.empty() && bip) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = color[v] ^ 1;
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          bip = false;
          break;
        }
      }
    }
  }
  if (bip) {
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < p; ++v)
      (color[v] == 0 ? parts.first : parts.second).push_back(v);
    s.bipartition = std::move(parts);
  }
  return s;
}

Graph core_graph(const Graph& g) {
  int p = g.order();
  std::vector<int> deg(p);
  std::vector<char> dead(p, 0);
  std::vector<int> queue;
  for (int v = 0; v < p; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (dead[v]) continue;
    dead[v] = 1;
    for (int w : g.neighbors(v))
      if (!dead[w] && --deg[w] <= 1) queue.push_back(w);
  }
  std::vector<int> remap(p, -1);
  int np = 0;
  for (int v = 0; v < p; ++v)
    if (!dead[v]) remap[v] = np++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (!dead[u] && !dead[v]) edges.emplace_back(remap[u], remap[v]);
  return Graph::build(np, edges);
}

BlockDecomposition blocks(const Graph& g) {
  if (!is_connected(g)) fail_input("block decomposition requires a connected graph");
  int p = g.order();
  BlockDecomposition out;
  if (p == 0) return out;

  // Hopcroft-Tarjan with an explicit edge stack
  std::vector<int> num(p, -1), low(p, 0), parent(p, -1);
  std::vector<char> is_cut(p, 0);
  std::vector<Edge> estack;
  int timer = 0;

  auto emit_block = [&](const Edge& top) {
    std::vector<Edge> block_edges;
    while (true) {
      Edge e = estack.back();
      estack.pop_back();
      block_edges.push_back(e);
      if (e == top) break;
    }
    std::vector<int> ids;
    for (auto [a, b] : block_edges) {
      ids.push_back(a);
      ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> inv(p, -1);
    for (size_t i = 0; i < ids.size(); ++i) inv[ids[i]] = static_cast<int>(i);
    std::vector<Edge> local;
    local.reserve(block_edges.size());
    for (auto [a, b] : block_edges) local.emplace_back(inv[a], inv[b]);
    out.blocks.push_back({Graph::build(static_cast<int>(ids.size()), local), ids});
  };

  // iterative DFS
  struct Frame {
    int v;
    size_t nb_idx;
  };
  std::vector<Frame> stack;
  num[0] = low[0] = timer++;
  stack.push_back({0, 0});
  int root_children = 0;
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx < g.neighbors(v).size()) {
      int w = g.neighbors(v)[idx++];
      if (w == parent[v]) continue;
      if (num[w] == -1) {
        estack.push_back({v, w});
        parent[w] = v;
        num[w] = low[w] = timer++;
        if (v == 0) ++root_children;
        stack.push_back({w, 0});
      } else if (num[w] < num[v]) {
        estack.push_back({v, w});
        low[v] = std::min(low[v], num[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int u = stack.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          if (u != 0 || root_children > 1) is_cut[u] = 1;
          emit_block({u, v});
        }
      }
    }
  }
  // spot the root cut case once children are known
  if (root_children > 1) is_cut[0] = 1;

  for (int v = 0; v < p; ++v)
    if (is_cut[v]) out.cutnodes.push_back(v);
  // deterministic order: by smallest original id, then size
  std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
    return a.node_map != b.node_map ? a.node_map < b.node_map
                                    : a.graph.edges() < b.graph.edges();
  });
  return out;
}

Graph plant(const Graph& g, int at, const Graph& t, int t_root) {
  if (at < 0 || at >= g.order()) fail_input("plant: node " + std::to_string(at) + " not in host");
  if (t_root < 0 || t_root >= t.order())
    fail_input("plant: root " + std::to_string(t_root) + " not in planted graph");
  int p = g.order();
  std::vector<int> remap(t.order());
  int next = p;
  for (int v = 0; v < t.order(); ++v) remap[v] = (v == t_root) ? at : next++;
  std::vector<Edge> edges(g.edges());
  for (auto [u, v] : t.edges()) edges.emplace_back(remap[u], remap[v]);
  return Graph::build(p + t.order() - 1, edges);
}

Graph plant_tree(const Graph& g, int at, const Graph& t, int t_root) {
  if (!is_tree(t)) fail_input("plant: planted component must be a tree");
  return plant(g, at, t, t_root);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::build(a.order() + b.order(), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream is(text);
  long long p, q;
  if (!(is >> p >> q)) fail_input("edge-list: missing 'p q' header");
  if (p < 0 || q < 0) fail_input("edge-list: negative header field");
  std::vector<Edge> edges;
  edges.reserve(q);
  for (long long i = 0; i < q; ++i) {
    long long u, v;
    if (!(is >> u >> v))
      fail_input("edge-list: expected " + std::to_string(q) + " edges, got " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::build(static_cast<int>(p), edges);
}

}  // namespace gracegraph
