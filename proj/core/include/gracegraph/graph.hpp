#ifndef GRACEGRAPH_GRAPH_HPP
#define GRACEGRAPH_GRAPH_HPP

/*
 * Finite simple undirected graphs on dense node ids 0..p-1.
 * Graphs are immutable once built; edges are kept as a canonical
 * sorted list of (min,max) pairs and as sorted adjacency lists.
 */

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gracegraph {

class error : public std::runtime_error {
public:
  enum class kind { input, budget, unsupported };

  error(kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  kind which() const noexcept { return kind_; }

private:
  kind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
  throw error(error::kind::input, msg);
}
[[noreturn]] inline void fail_budget(const std::string& msg) {
  throw error(error::kind::budget, msg);
}

using Edge = std::pair<int, int>;

class Graph {
public:
  Graph() = default;

  // Validates ids, rejects self-loops and duplicate edges; the offending
  // pair is named in the message.
  static Graph build(int p, std::span<const Edge> edges);
  static Graph build(int p, std::initializer_list<Edge> edges) {
    return build(p, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return p_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  // Index of (min(u,v),max(u,v)) in edges(), or -1.
  int edge_index(int u, int v) const;

  bool operator==(const Graph& o) const {
    return p_ == o.p_ && edges_ == o.edges_;
  }

private:
  int p_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

struct StructuralProfile {
  bool connected = false;
  // Two node sets when bipartite, by ascending id; absent otherwise.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;
  bool euler = false;  // connected and every degree even
  std::optional<int> regular_degree;
  std::vector<int> degree_sequence;  // ascending
  std::vector<int> pendant_nodes;    // degree-1 nodes, ascending
};

StructuralProfile structural_profile(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_cycle_graph(const Graph& g);

// Recursive deletion of nodes of degree <= 1 (the 2-core). Trees melt away
// entirely; a unicyclic graph leaves its cycle. Idempotent.
Graph core_graph(const Graph& g);

struct Block {
  Graph graph;
  std::vector<int> node_map;  // block node i -> original id
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // edge partition of g
  std::vector<int> cutnodes;  // ascending
};

// Biconnected components. Requires a connected input.
BlockDecomposition blocks(const Graph& g);

// Identify node `at` of g with node `t_root` of t. g keeps its ids; the
// remaining nodes of t follow in t's id order.
Graph plant(const Graph& g, int at, const Graph& t, int t_root);

// plant() with the graphforest precondition enforced: t must be a tree.
Graph plant_tree(const Graph& g, int at, const Graph& t, int t_root);

Graph disjoint_union(const Graph& a, const Graph& b);

// Plain text edge-list format: "p q" header line, then q lines "u v", 0-based.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

}  // namespace gracegraph

#endif
