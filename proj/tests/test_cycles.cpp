#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gracegraph/cycles.hpp"
#include "gracegraph/families.hpp"
#include "gracegraph/graph.hpp"

using namespace gracegraph;

namespace {

Graph mk(const std::string& s) { return make(FamilySpec::parse(s)); }

// Blind re-derivation of the simple cycle list: DFS from each root over
// larger-id nodes only, closing back to the root, direction fixed by
// second < last.
std::vector<Cycle> oracle_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> used(g.order(), 0);
  std::function<void(int, int)> dfs = [&](int s, int v) {
    for (int w : g.neighbors(v)) {
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      } else if (w > s && !used[w]) {
        used[w] = 1;
        path.push_back(w);
        dfs(s, w);
        used[w] = 0;
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    dfs(s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t cycle_mask(const Graph& g, const Cycle& c) {
  std::uint64_t m = 0;
  for (size_t k = 0; k < c.size(); ++k) {
    int idx = g.edge_index(c[k], c[(k + 1) % c.size()]);
    REQUIRE(idx >= 0);
    m |= std::uint64_t{1} << idx;
  }
  return m;
}

struct OracleCensus {
  long long count = 0;
  std::multiset<std::vector<int>> shapes;
};

// Exact cover of the edge set by simple cycles; the lowest uncovered
// edge picks the next cycle, so each partition appears once.
OracleCensus oracle_census(const Graph& g) {
  auto cycles = oracle_cycles(g);
  std::vector<std::uint64_t> masks;
  std::vector<int> lens;
  for (const Cycle& c : cycles) {
    masks.push_back(cycle_mask(g, c));
    lens.push_back(static_cast<int>(c.size()));
  }
  std::uint64_t full = g.size() == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << g.size()) - 1;
  OracleCensus out;
  std::vector<int> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t covered) {
    if (covered == full) {
      std::vector<int> shape = cur;
      std::sort(shape.begin(), shape.end());
      ++out.count;
      out.shapes.insert(shape);
      return;
    }
    int e = std::countr_zero(~covered & full);
    for (size_t i = 0; i < masks.size(); ++i) {
      if ((masks[i] >> e & 1) && !(masks[i] & covered)) {
        cur.push_back(lens[i]);
        rec(covered | masks[i]);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

std::multiset<std::vector<int>> census_shapes(const DecompositionCensus& c) {
  std::multiset<std::vector<int>> out;
  for (const auto& dec : c.decompositions) {
    std::vector<int> shape;
    for (const Cycle& cyc : dec) shape.push_back(static_cast<int>(cyc.size()));
    std::sort(shape.begin(), shape.end());
    out.insert(shape);
  }
  return out;
}

// Triangle with each side stretched into its own 4-cycle by a 3-edge
// bypass path: 9 nodes, 12 edges, every degree even.
Graph triangle_of_squares() {
  return Graph::build(9, {{0, 1}, {1, 2}, {0, 2},
                          {0, 3}, {3, 4}, {4, 1},
                          {1, 5}, {5, 6}, {6, 2},
                          {2, 7}, {7, 8}, {8, 0}});
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 5 < 2) e.emplace_back(i, j);
  return Graph::build(n, e);
}

}  // namespace

TEST_CASE("single cycle catalogs") {
  for (int n = 3; n <= 9; ++n) {
    auto cat = simple_cycles(mk("cycle(" + std::to_string(n) + ")"));
    REQUIRE(cat.cycles.size() == 1);
    CHECK_FALSE(cat.truncated);
    Cycle expect(n);
    for (int i = 0; i < n; ++i) expect[i] = i;
    CHECK(cat.cycles[0] == expect);
    CHECK(cat.length_multiset == std::vector<int>{n});
    for (int r = 0; r < 4; ++r) CHECK(cat.residues[r] == (n % 4 == r));
  }
}

TEST_CASE("complete graph catalogs") {
  auto k4 = simple_cycles(mk("complete(4)"));
  CHECK(k4.cycles.size() == 7);
  CHECK(k4.length_multiset == std::vector<int>{3, 3, 3, 3, 4, 4, 4});
  CHECK(k4.residues == std::array<bool, 4>{true, false, false, true});
  auto k5 = simple_cycles(mk("complete(5)"));
  CHECK(k5.cycles.size() == 37);  // 10 triangles, 15 squares, 12 pentagons
  auto ms = k5.length_multiset;
  CHECK(std::count(ms.begin(), ms.end(), 3) == 10);
  CHECK(std::count(ms.begin(), ms.end(), 4) == 15);
  CHECK(std::count(ms.begin(), ms.end(), 5) == 12);
}

TEST_CASE("cycle normalization") {
  auto cat = simple_cycles(mk("complete(4)"));
  Graph g = mk("complete(4)");
  for (const Cycle& c : cat.cycles) {
    CHECK(c[0] == *std::min_element(c.begin(), c.end()));
    CHECK(c[1] < c.back());
    for (size_t k = 0; k < c.size(); ++k)
      CHECK(g.has_edge(c[k], c[(k + 1) % c.size()]));
  }
}

TEST_CASE("catalog matches blind enumeration") {
  std::mt19937_64 rng(2024);
  int nonempty = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(4 + trial % 5, rng);
    auto cat = simple_cycles(g);
    REQUIRE_FALSE(cat.truncated);
    auto got = cat.cycles;
    std::sort(got.begin(), got.end());
    auto want = oracle_cycles(g);
    CHECK(got == want);
    if (!want.empty()) ++nonempty;
    auto parity = edge_cycle_parity(g, cat);
    std::vector<long long> counts(g.size(), 0);
    for (const Cycle& c : want)
      for (size_t k = 0; k < c.size(); ++k)
        ++counts[g.edge_index(c[k], c[(k + 1) % c.size()])];
    CHECK(parity.per_edge == counts);
    bool all_odd = !counts.empty();
    for (long long x : counts) all_odd = all_odd && x % 2 == 1;
    CHECK(parity.all_odd == all_odd);
  }
  CHECK(nonempty > 20);
}

TEST_CASE("truncation") {
  auto cat = simple_cycles(mk("complete(6)"), 5);
  CHECK(cat.truncated);
  CHECK(cat.cycles.size() == 5);
  CHECK_THROWS_AS(edge_cycle_parity(mk("complete(6)"), cat), error);
}

TEST_CASE("canonical decomposition") {
  auto c7 = simple_cycles(mk("cycle(7)"));
  REQUIRE(c7.decomposition.size() == 1);
  CHECK(c7.decomposition[0].size() == 7);
  CHECK(c7.xi == std::array<long long, 4>{0, 0, 0, 1});

  auto bowtie = simple_cycles(mk("dutch_windmill(2)"));
  REQUIRE(bowtie.decomposition.size() == 2);
  CHECK(bowtie.xi == std::array<long long, 4>{0, 0, 0, 2});

  auto k5 = simple_cycles(mk("complete(5)"));
  Graph g5 = mk("complete(5)");
  std::uint64_t covered = 0;
  for (const Cycle& c : k5.decomposition) {
    std::uint64_t m = cycle_mask(g5, c);
    CHECK((covered & m) == 0);
    covered |= m;
  }
  CHECK(covered == (std::uint64_t{1} << g5.size()) - 1);
  CHECK(k5.xi[0] + k5.xi[1] + k5.xi[2] + k5.xi[3] ==
        static_cast<long long>(k5.decomposition.size()));

  CHECK(simple_cycles(mk("complete(4)")).decomposition.empty());
  CHECK(simple_cycles(mk("path(5)")).decomposition.empty());
}

TEST_CASE("decomposition census") {
  Graph k5 = mk("complete(5)");
  auto census = cycle_decompositions(k5);
  CHECK(census.complete);
  CHECK(census.decompositions.size() == 21);
  auto shapes = census_shapes(census);
  CHECK(shapes.count({5, 5}) == 6);
  CHECK(shapes.count({3, 3, 4}) == 15);
  auto oracle = oracle_census(k5);
  CHECK(oracle.count == 21);
  CHECK(shapes == oracle.shapes);

  Graph tri = triangle_of_squares();
  auto tcensus = cycle_decompositions(tri);
  CHECK(tcensus.complete);
  auto tshapes = census_shapes(tcensus);
  CHECK(tshapes.count({4, 4, 4}) == 1);
  CHECK(tshapes.count({3, 9}) == 1);
  auto toracle = oracle_census(tri);
  CHECK(static_cast<long long>(tcensus.decompositions.size()) == toracle.count);
  CHECK(tshapes == toracle.shapes);

  auto c6 = cycle_decompositions(mk("cycle(6)"));
  CHECK(c6.decompositions.size() == 1);
  auto bow = cycle_decompositions(mk("dutch_windmill(2)"));
  CHECK(bow.decompositions.size() == 1);

  auto cut = cycle_decompositions(k5, 2);
  CHECK_FALSE(cut.complete);
  CHECK(cut.decompositions.size() == 2);

  CHECK_THROWS_AS(cycle_decompositions(mk("path(4)")), error);
  CHECK_THROWS_AS(cycle_decompositions(mk("complete(4)")), error);
}

TEST_CASE("cycle partition existence") {
  CHECK(has_cycle_decomposition(mk("cycle(5)")));
  CHECK(has_cycle_decomposition(mk("complete(5)")));
  CHECK(has_cycle_decomposition(mk("dutch_windmill(3)")));
  CHECK_FALSE(has_cycle_decomposition(mk("complete(4)")));
  CHECK_FALSE(has_cycle_decomposition(mk("path(3)")));
  CHECK_FALSE(has_cycle_decomposition(mk("wheel(4)")));
  Graph two_triangles = disjoint_union(mk("cycle(3)"), mk("cycle(3)"));
  CHECK(has_cycle_decomposition(two_triangles));
  CHECK_FALSE(structural_profile(two_triangles).euler);
}

TEST_CASE("edge cycle parity per family") {
  Graph c7 = mk("cycle(7)");
  auto p7 = edge_cycle_parity(c7, simple_cycles(c7));
  CHECK(p7.all_odd);
  CHECK(p7.per_edge == std::vector<long long>(7, 1));

  Graph k5 = mk("complete(5)");
  auto p5 = edge_cycle_parity(k5, simple_cycles(k5));
  CHECK(p5.per_edge == std::vector<long long>(10, 15));
  CHECK(p5.all_odd);

  Graph k4 = mk("complete(4)");
  auto p4 = edge_cycle_parity(k4, simple_cycles(k4));
  CHECK(p4.per_edge == std::vector<long long>(6, 4));
  CHECK_FALSE(p4.all_odd);
}

TEST_CASE("edge disjoint path counts") {
  Graph c6 = mk("cycle(6)");
  CHECK(edge_disjoint_path_count(c6, 0, 3) == 2);
  CHECK(edge_disjoint_path_count(c6, 0, 1) == 2);
  CHECK(edge_disjoint_path_count(mk("complete(5)"), 0, 1) == 4);
  CHECK(edge_disjoint_path_count(mk("complete_bipartite(2,3)"), 0, 1) == 3);
  CHECK(edge_disjoint_path_count(mk("path(5)"), 0, 4) == 1);
  CHECK(edge_disjoint_path_count(mk("dutch_windmill(2)"), 1, 3) == 2);
  Graph split = disjoint_union(mk("cycle(3)"), mk("cycle(3)"));
  CHECK(edge_disjoint_path_count(split, 0, 4) == 0);
}
