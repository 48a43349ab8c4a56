#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "gracegraph/families.hpp"
#include "gracegraph/graph.hpp"
#include "gracegraph/graph6.hpp"
#include "gracegraph/iso.hpp"

using namespace gracegraph;

namespace {

// Independent bit-level graph6 encoder, straight from the format: N(n),
// then the upper triangle column by column, 6 bits per character, +63.
std::string oracle_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(char(63 + n));
  } else {
    out.push_back(126);
    out.push_back(char(63 + ((n >> 12) & 63)));
    out.push_back(char(63 + ((n >> 6) & 63)));
    out.push_back(char(63 + (n & 63)));
  }
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int val = 0;
    for (int j = 0; j < 6; ++j) val = val * 2 + bits[i + j];
    out.push_back(char(63 + val));
  }
  return out;
}

Graph permuted(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::build(g.order(), edges);
}

}  // namespace

TEST_CASE("build validates and canonicalizes") {
  Graph g = Graph::build(4, {{2, 0}, {1, 0}, {3, 2}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.degree(0) == 2);
  CHECK(g.edge_index(3, 2) == 2);
  CHECK(g.edge_index(1, 3) == -1);

  CHECK_THROWS_AS(Graph::build(3, {{0, 0}}), error);
  CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), error);
  CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), error);
  CHECK_THROWS_AS(Graph::build(-1, {}), error);
}

TEST_CASE("structural profile basics") {
  Graph c4 = make(FamilySpec::parse("cycle(4)"));
  auto prof = structural_profile(c4);
  CHECK(prof.connected);
  CHECK(prof.euler);
  REQUIRE(prof.bipartition.has_value());
  CHECK(prof.bipartition->first.size() + prof.bipartition->second.size() == 4);
  CHECK(prof.regular_degree == 2);
  CHECK(prof.pendant_nodes.empty());

  Graph c5 = make(FamilySpec::parse("cycle(5)"));
  CHECK_FALSE(structural_profile(c5).bipartition.has_value());

  Graph p4 = make(FamilySpec::parse("path(4)"));
  auto pp = structural_profile(p4);
  CHECK(pp.connected);
  CHECK_FALSE(pp.euler);
  CHECK(pp.pendant_nodes == std::vector<int>{0, 3});
  CHECK(pp.degree_sequence == std::vector<int>{1, 1, 2, 2});

  Graph two = disjoint_union(c4, c4);
  auto dp = structural_profile(two);
  CHECK_FALSE(dp.connected);
  CHECK_FALSE(dp.euler);  // Euler means connected with all degrees even
}

TEST_CASE("trees, cycles, cores") {
  CHECK(is_tree(make(FamilySpec::parse("path(7)"))));
  CHECK(is_tree(Graph::build(1, {})));
  CHECK_FALSE(is_tree(make(FamilySpec::parse("cycle(3)"))));
  CHECK(is_cycle_graph(make(FamilySpec::parse("cycle(6)"))));
  CHECK_FALSE(is_cycle_graph(make(FamilySpec::parse("path(6)"))));

  // pruning pendants from a planted graph recovers the base order
  Graph base = make(FamilySpec::parse("cycle(5)"));
  Graph planted = random_graphforest(base, 9, 7);
  CHECK(planted.order() == 9);
  Graph core = core_graph(planted);
  CHECK(core.order() == 5);
  CHECK(core.size() == 5);
  CHECK(is_isomorphic(core, base));
}

TEST_CASE("blocks of a two-block graph") {
  // two triangles sharing node 0
  Graph bowtie = make(FamilySpec::parse("dutch_windmill(2)"));
  BlockDecomposition bd = blocks(bowtie);
  REQUIRE(bd.blocks.size() == 2);
  for (const Block& b : bd.blocks) {
    CHECK(b.graph.order() == 3);
    CHECK(b.graph.size() == 3);
  }
  CHECK(bd.cutnodes == std::vector<int>{0});

  Graph p5 = make(FamilySpec::parse("path(5)"));
  CHECK(blocks(p5).blocks.size() == 4);  // every edge its own block
  CHECK(blocks(make(FamilySpec::parse("complete(4)"))).blocks.size() == 1);
}

TEST_CASE("graph6 frozen values") {
  CHECK(encode_graph6(Graph::build(1, {})) == "@");
  CHECK(encode_graph6(make(FamilySpec::parse("complete(3)"))) == "Bw");
  CHECK(encode_graph6(make(FamilySpec::parse("complete(4)"))) == "C~");
  CHECK(encode_graph6(Graph::build(4, {})) == "C?");
  CHECK(decode_graph6("Bw") == make(FamilySpec::parse("complete(3)")));
  CHECK(decode_graph6(">>graph6<<C~") == make(FamilySpec::parse("complete(4)")));
}

TEST_CASE("graph6 codec equals independent oracle on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + int(rng() % 14);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    Graph g = Graph::build(n, edges);
    std::string enc = encode_graph6(g);
    CHECK(enc == oracle_graph6(g));
    CHECK(decode_graph6(enc) == g);
  }
}

TEST_CASE("graph6 encodes a large sparse graph") {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < 200; ++i) edges.emplace_back(i, i + 1);
  Graph g = Graph::build(200, edges);
  CHECK(decode_graph6(encode_graph6(g)) == g);
  CHECK(encode_graph6(g) == oracle_graph6(g));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(decode_graph6(""), error);
  CHECK_THROWS_AS(decode_graph6("B"), error);       // truncated bit field
  CHECK_THROWS_AS(decode_graph6("B\x1f\x1f"), error);  // bytes below 63
  CHECK_THROWS_AS(decode_graph6("Bww"), error);     // trailing garbage
}

TEST_CASE("edge list round trip") {
  Graph g = make(FamilySpec::parse("wheel(5)"));
  CHECK(from_edge_list(to_edge_list(g)) == g);
  CHECK_THROWS_AS(from_edge_list("2"), error);
  CHECK_THROWS_AS(from_edge_list("2 1\n0 0"), error);
  CHECK_THROWS_AS(from_edge_list("2 2\n0 1"), error);  // missing edge line
}

TEST_CASE("plant identifies the tree root with the chosen node") {
  Graph c3 = make(FamilySpec::parse("cycle(3)"));
  Graph p3 = make(FamilySpec::parse("path(3)"));
  Graph g = plant(c3, 0, p3, 0);
  CHECK(g.order() == 5);  // root merged, two new nodes
  CHECK(g.size() == 5);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(3) == 2);
  CHECK(g.degree(4) == 1);

  // planting at the path's middle node hangs both halves off the join
  Graph h = plant(c3, 1, p3, 1);
  CHECK(h.order() == 5);
  CHECK(h.degree(1) == 4);

  CHECK(plant_tree(c3, 0, p3, 2).order() == 5);
  CHECK_THROWS_AS(plant_tree(c3, 0, make(FamilySpec::parse("cycle(4)")), 0),
                  error);
  CHECK_THROWS_AS(plant(c3, 7, p3, 0), error);
  CHECK_THROWS_AS(plant(c3, 0, p3, 9), error);
}

TEST_CASE("certificate is isomorphism invariant and discriminating") {
  std::mt19937_64 rng(5);
  std::vector<std::string> specs = {
      "cycle(7)", "wheel(5)", "complete_bipartite(3,4)", "path(8)",
      "dutch_windmill(3)"};
  for (const auto& s : specs) {
    Graph g = make(FamilySpec::parse(s));
    std::string cert = certificate(g);
    for (int t = 0; t < 10; ++t) {
      Graph h = permuted(g, rng);
      CHECK(certificate(h) == cert);
      CHECK(is_isomorphic(g, h));
    }
  }
  CHECK(certificate(make(FamilySpec::parse("path(4)"))) !=
        certificate(make(FamilySpec::parse("caterpillar(2,0)"))));
  CHECK_FALSE(is_isomorphic(make(FamilySpec::parse("cycle(6)")),
                            make(FamilySpec::parse("cycle(7)"))));
  // same degree sequence, different graphs
  Graph c6 = make(FamilySpec::parse("cycle(6)"));
  Graph cc = disjoint_union(make(FamilySpec::parse("cycle(3)")),
                            make(FamilySpec::parse("cycle(3)")));
  CHECK_FALSE(is_isomorphic(c6, cc));
}
