#ifndef GRACEGRAPH_FAMILIES_HPP
#define GRACEGRAPH_FAMILIES_HPP

/*
 * Parametric graph family constructors, graph operators (subdivision,
 * join, cartesian product), exhaustive isomorphism-free enumeration of
 * trees and unicyclic graphs at small orders, and seeded random forests
 * planted on a pendant-free base.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gracegraph/graph.hpp"

namespace gracegraph {

inline constexpr int kTreeEnumerationCap = 10;
inline constexpr int kUnicyclicEnumerationCap = 9;

enum class Family {
  cycle,
  path,
  complete,
  complete_bipartite,
  wheel,
  caterpillar,
  dutch_windmill,
  windmill_complete,
  windmill_cycles,
  snake_triangular,
  snake_cycles,
  book,
  two_cliques_shared_node,
  h_join,
  subdivision,
  join,
  cartesian_product,
  graphforest,
};

std::string family_name(Family f);
Family family_from_name(std::string_view name);

// A reproducible description of one generated graph. Meta families
// (subdivision, join, cartesian_product, graphforest) compose operand specs.
struct FamilySpec {
  Family family;
  std::vector<long long> params;
  std::optional<std::uint64_t> seed;
  std::vector<FamilySpec> operands;

  // Accepts "cycle(7)", "join(complete(3),complete(4))",
  // "graphforest(dutch_windmill(4),12,seed=5)".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const FamilySpec&) const = default;
};

// Deterministic: identical specs give identical graphs (node ids included).
Graph make(const FamilySpec& spec);

// Each edge replaced by a path with k interior nodes: order p+kq, size (k+1)q.
Graph subdivision(const Graph& g, int k);

Graph join(const Graph& a, const Graph& b);
Graph cartesian_product(const Graph& a, const Graph& b);

// Spine node i carries leaf_counts[i] leaves.
Graph caterpillar(std::span<const int> leaf_counts);

// All trees / connected unicyclic graphs of the given order, one per
// isomorphism class, in a deterministic order.
std::vector<Graph> enumerate_trees(int order, int cap = kTreeEnumerationCap);
std::vector<Graph> enumerate_unicyclic(int order, int cap = kUnicyclicEnumerationCap);

// Plant seeded random trees on g until the result has total_order nodes.
// Requires a pendant-free g so that core_graph(result) == g.
Graph random_graphforest(const Graph& g, int total_order, std::uint64_t seed);

}  // namespace gracegraph

#endif
