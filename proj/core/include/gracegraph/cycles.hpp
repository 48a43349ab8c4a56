#ifndef GRACEGRAPH_CYCLES_HPP
#define GRACEGRAPH_CYCLES_HPP

/*
 * Simple-cycle enumeration with a hard cap, cycle decompositions of the
 * edge set (with a canonical greedy representative and a complete census
 * when small enough), per-edge cycle parity, and edge-disjoint path
 * counts via unit-capacity max flow.
 */

#include <array>
#include <vector>

#include "gracegraph/graph.hpp"

namespace gracegraph {

inline constexpr long long kSimpleCycleCap = 1000000;
inline constexpr long long kDecompositionCap = 200000;

// A cycle is a node sequence v0,...,v_{k-1} (edges close cyclically),
// normalized so v0 is the smallest node and v1 < v_{k-1}.
using Cycle = std::vector<int>;

struct CycleCatalog {
  std::vector<Cycle> cycles;      // every simple cycle, deterministic order
  std::vector<int> length_multiset;  // sorted ascending
  std::array<bool, 4> residues{};    // cycle length residues mod 4 present
  bool truncated = false;            // cap hit; cycles holds a prefix

  // Canonical greedy cycle decomposition of the edge set (Euler inputs
  // only; empty otherwise) and its length residues mod 4.
  std::vector<Cycle> decomposition;
  std::array<long long, 4> xi{};
};

CycleCatalog simple_cycles(const Graph& g, long long cap = kSimpleCycleCap);

struct DecompositionCensus {
  std::vector<std::vector<Cycle>> decompositions;
  bool complete = true;
};

// All partitions of the edge set into simple cycles, each generated once
// (the smallest uncovered edge identifies the next cycle). Errors on
// non-Euler input.
DecompositionCensus cycle_decompositions(const Graph& g, long long cap = kDecompositionCap);

// True iff the edge set partitions into simple cycles; defined for any
// graph (used to cross-check the Euler characterizations).
bool has_cycle_decomposition(const Graph& g);

struct EdgeCycleParity {
  std::vector<long long> per_edge;  // aligned with g.edges()
  bool all_odd = false;
};

// Number of simple cycles through each edge. Errors if the catalog was
// truncated, since the parity would be meaningless.
EdgeCycleParity edge_cycle_parity(const Graph& g, const CycleCatalog& catalog);

// Maximum number of pairwise edge-disjoint u-v paths.
int edge_disjoint_path_count(const Graph& g, int u, int v);

}  // namespace gracegraph

#endif
