// Acceptance gate: one line per criterion, nonzero exit counts the
// criteria that did not hold. Expected values are pinned here and every
// search result that can be cross-checked cheaply is re-derived by a
// blind reference search in this file.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gracegraph/constructive.hpp"
#include "gracegraph/cycles.hpp"
#include "gracegraph/epsilon.hpp"
#include "gracegraph/families.hpp"
#include "gracegraph/graph.hpp"
#include "gracegraph/graph6.hpp"
#include "gracegraph/iso.hpp"
#include "gracegraph/labeling.hpp"
#include "gracegraph/solver.hpp"
#include "gracegraph/suites.hpp"

using namespace gracegraph;

namespace {

constexpr long long kCycleDeadlineMs = 60000;  // criterion 1 wall clock cap
constexpr long long kCensusCap = 20000;        // criterion 8 census cutoff
constexpr int kOptOracleExtra = 4;             // criterion 5 oracle scans q..q+4

int failures = 0;
std::vector<std::string> notes;
std::vector<std::pair<Graph, Labeling>> emitted;  // criterion 10 feeds on these

Graph mk(const std::string& s) { return make(FamilySpec::parse(s)); }

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

void line(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", idx,
              name.c_str(), detail.c_str());
  for (const std::string& n : notes) std::printf("       note: %s\n", n.c_str());
  notes.clear();
  if (!pass) ++failures;
}

void run(int idx, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [pass, detail] = body();
    line(idx, name, pass, detail);
  } catch (const std::exception& e) {
    line(idx, name, false, std::string("exception: ") + e.what());
  }
}

// Reference decision: natural node order, candidate labels ascending,
// the only pruning is a repeated edge difference.
bool naive_graceful(const Graph& g) {
  int q = g.size();
  std::vector<int> labels(g.order(), -1);
  std::vector<char> used_label(q + 1, 0), used_diff(q + 1, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == g.order()) return true;
    for (int x = 0; x <= q; ++x) {
      if (used_label[x]) continue;
      std::vector<int> diffs;
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (labels[w] < 0) continue;
        int d = std::abs(x - labels[w]);
        if (d == 0 || used_diff[d] ||
            std::find(diffs.begin(), diffs.end(), d) != diffs.end()) {
          ok = false;
          break;
        }
        diffs.push_back(d);
      }
      if (!ok) continue;
      used_label[x] = 1;
      for (int d : diffs) used_diff[d] = 1;
      labels[v] = x;
      if (rec(v + 1)) return true;
      labels[v] = -1;
      used_label[x] = 0;
      for (int d : diffs) used_diff[d] = 0;
    }
    return false;
  };
  return rec(0);
}

// Reference smallest max label: injective labels within {0..M}, pairwise
// distinct differences, M raised from q until a labeling exists. A
// labeling can always be shifted to use 0, so opt is unchanged by the
// zero-usage convention.
bool injective_distinct(const Graph& g, int M) {
  std::vector<int> labels(g.order(), -1);
  std::vector<char> used_label(M + 1, 0), used_diff(M + 1, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == g.order()) return true;
    for (int x = 0; x <= M; ++x) {
      if (used_label[x]) continue;
      std::vector<int> diffs;
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (labels[w] < 0) continue;
        int d = std::abs(x - labels[w]);
        if (d == 0 || d > M || used_diff[d] ||
            std::find(diffs.begin(), diffs.end(), d) != diffs.end()) {
          ok = false;
          break;
        }
        diffs.push_back(d);
      }
      if (!ok) continue;
      used_label[x] = 1;
      for (int d : diffs) used_diff[d] = 1;
      labels[v] = x;
      if (rec(v + 1)) return true;
      labels[v] = -1;
      used_label[x] = 0;
      for (int d : diffs) used_diff[d] = 0;
    }
    return false;
  };
  return rec(0);
}

int naive_opt(const Graph& g) {
  for (int M = g.size(); M <= g.size() + kOptOracleExtra; ++M)
    if (injective_distinct(g, M)) return M;
  return -1;
}

bool witness_ok(const Graph& g, const SearchOutcome& out) {
  if (!out.witness) return false;
  if (!evaluate_labeling(g, *out.witness).graceful) return false;
  emitted.emplace_back(g, *out.witness);
  return true;
}

std::pair<bool, std::string> criterion_cycles() {
  auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  for (int n = 3; n <= 14; ++n) {
    auto out = solve_graceful(mk("cycle(" + std::to_string(n) + ")"));
    bool expect = n % 4 == 0 || n % 4 == 3;
    bool got = out.verdict == Verdict::graceful;
    if (got != expect || out.verdict == Verdict::budget_exceeded) {
      ++bad;
      notes.push_back("cycle(" + std::to_string(n) + ") came back " +
                      to_string(out.verdict));
    }
    if (got && !witness_ok(mk("cycle(" + std::to_string(n) + ")"), out)) ++bad;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  bool pass = bad == 0 && ms <= kCycleDeadlineMs;
  return {pass, "n = 3..14 graceful exactly at n = 0,3 mod 4; " +
                    std::to_string(ms) + " ms against a " +
                    std::to_string(kCycleDeadlineMs) + " ms cap"};
}

std::pair<bool, std::string> criterion_wheels() {
  int bad = 0;
  for (int n = 3; n <= 8; ++n) {
    Graph w = mk("wheel(" + std::to_string(n) + ")");
    auto out = solve_graceful(w);
    if (out.verdict != Verdict::graceful || !witness_ok(w, out)) {
      ++bad;
      notes.push_back("wheel(" + std::to_string(n) + ") came back " +
                      to_string(out.verdict));
    }
  }
  return {bad == 0, "wheels with 3..8 rim nodes all graceful, witnesses verified"};
}

std::pair<bool, std::string> criterion_dutch() {
  int bad = 0;
  for (int m = 1; m <= 6; ++m) {
    Graph g = mk("dutch_windmill(" + std::to_string(m) + ")");
    auto out = solve_graceful(g);
    bool expect = m % 4 == 0 || m % 4 == 1;
    if (out.verdict == Verdict::budget_exceeded ||
        (out.verdict == Verdict::graceful) != expect) {
      ++bad;
      notes.push_back("dutch_windmill(" + std::to_string(m) + ") came back " +
                      to_string(out.verdict));
    }
    if (out.verdict == Verdict::graceful && !witness_ok(g, out)) ++bad;
  }
  return {bad == 0,
          "m = 1..6 decided within the default budget, graceful exactly at m = 0,1 mod 4"};
}

std::pair<bool, std::string> criterion_windmill_c4() {
  int bad = 0;
  for (int m = 2; m <= 5; ++m) {
    Graph g = mk("windmill_cycles(" + std::to_string(m) + ",4)");
    auto out = solve_graceful(g);
    if (out.verdict != Verdict::graceful || !witness_ok(g, out)) {
      ++bad;
      notes.push_back("windmill_cycles(" + std::to_string(m) + ",4) came back " +
                      to_string(out.verdict));
    }
  }
  return {bad == 0, "m = 2..5 copies of a shared-node 4-cycle all graceful"};
}

std::pair<bool, std::string> criterion_catalog() {
  struct Item {
    std::string name;
    Graph g;
  };
  Graph k3 = mk("complete(3)"), k4 = mk("complete(4)");
  std::vector<Item> items = {
      {"two disjoint triangles", disjoint_union(k3, k3)},
      {"three disjoint triangles", disjoint_union(disjoint_union(k3, k3), k3)},
      {"two disjoint K4", disjoint_union(k4, k4)},
      {"K4 and K3 sharing a node", mk("two_cliques_shared_node(4,3)")},
  };
  SolveOptions exhaust;
  exhaust.rosa_golomb_shortcut = false;
  int bad = 0;
  for (const auto& [name, g] : items) {
    auto out = solve_graceful(g, exhaust);
    bool oracle = naive_graceful(g);
    if ((out.verdict == Verdict::graceful) != oracle) {
      ++bad;
      notes.push_back(name + ": solver and reference search disagree");
      continue;
    }
    auto opt_out = optimal_labeling(g, exhaust);
    int oracle_opt = naive_opt(g);
    if (!opt_out.opt || !opt_out.opt_minimal_proven || *opt_out.opt != oracle_opt) {
      ++bad;
      notes.push_back(name + ": opt " +
                      (opt_out.opt ? std::to_string(*opt_out.opt) : "unproven") +
                      " vs reference " + std::to_string(oracle_opt));
      continue;
    }
    if (out.verdict == Verdict::graceful) {
      ++bad;
      std::string labels = out.witness ? join_ints(out.witness->labels) : "";
      notes.push_back(name + " is graceful, labels [" + labels +
                      "], confirmed by the reference search; opt = " +
                      std::to_string(*opt_out.opt) + " = q");
      if (out.witness) witness_ok(g, out);
    } else {
      notes.push_back(name + ": nongraceful by exhaustion, opt = " +
                      std::to_string(*opt_out.opt) + " (reference agrees)");
    }
  }
  return {bad == 0,
          "catalog of four shared-and-disjoint clique graphs all nongraceful, "
          "opt values matched against the reference search"};
}

std::pair<bool, std::string> criterion_complete() {
  int bad = 0;
  for (int n = 1; n <= 4; ++n) {
    Graph g = mk("complete(" + std::to_string(n) + ")");
    auto out = solve_graceful(g);
    if (out.verdict != Verdict::graceful || !witness_ok(g, out)) {
      ++bad;
      notes.push_back("complete(" + std::to_string(n) + ") came back " +
                      to_string(out.verdict));
    }
  }
  SolveOptions exhaust;
  exhaust.rosa_golomb_shortcut = false;
  auto k5 = solve_graceful(mk("complete(5)"), exhaust);
  if (k5.verdict != Verdict::nongraceful_exhausted) {
    ++bad;
    notes.push_back("complete(5) exhaustion came back " + to_string(k5.verdict));
  }
  auto k6 = solve_graceful(mk("complete(6)"));
  if (k6.verdict != Verdict::nongraceful_exhausted) {
    ++bad;
    notes.push_back("complete(6) came back " + to_string(k6.verdict));
  }
  auto k7 = solve_graceful(mk("complete(7)"));
  if (k7.verdict != Verdict::nongraceful_rosa_golomb) {
    ++bad;
    notes.push_back("complete(7) came back " + to_string(k7.verdict));
  }
  return {bad == 0,
          "K1..K4 graceful; K5 refuted by direct exhaustion; K6 by search; "
          "K7 by the parity certificate alone"};
}

std::pair<bool, std::string> criterion_join_family() {
  int bad = 0;
  for (int n = 1; n <= 4; ++n) {
    Graph g = mk("h_join(2,2," + std::to_string(n) + ")");
    if (g.order() != n + 4 || g.size() != 4 * n + 2) {
      ++bad;
      notes.push_back("h_join(2,2," + std::to_string(n) + ") is a (" +
                      std::to_string(g.order()) + "," + std::to_string(g.size()) +
                      ")-graph, not (" + std::to_string(n + 4) + "," +
                      std::to_string(4 * n + 2) + ")");
      continue;
    }
    auto out = solve_graceful(g);
    if (out.verdict == Verdict::graceful) {
      ++bad;
      std::string labels = out.witness ? join_ints(out.witness->labels) : "";
      notes.push_back("h_join(2,2," + std::to_string(n) + ") is graceful, labels [" +
                      labels + "]; the evaluator confirms all " +
                      std::to_string(g.size()) + " edge values 1..q appear");
      if (out.witness) witness_ok(g, out);
    } else if (out.verdict == Verdict::budget_exceeded) {
      ++bad;
      notes.push_back("h_join(2,2," + std::to_string(n) + ") undecided in budget");
    }
  }
  return {bad == 0,
          "join of two disjoint edges with n = 1..4 isolated nodes: sizes check "
          "out as (n+4, 4n+2) and all four are nongraceful"};
}

std::pair<bool, std::string> criterion_characterizations() {
  auto corpus = characterization_corpus();
  if (corpus.size() < 200)
    return {false, "corpus only has " + std::to_string(corpus.size()) + " graphs"};
  int mismatch = 0, parity_checked = 0, parity_skipped = 0, census_checked = 0,
      census_skipped = 0;
  for (const Graph& g : corpus) {
    bool c = structural_profile(g).euler;
    bool d = has_cycle_decomposition(g);
    if (c != d) {
      ++mismatch;
      notes.push_back("even-degree and cycle-partition tests disagree on " +
                      encode_graph6(g));
      continue;
    }
    auto cat = simple_cycles(g);
    if (cat.truncated) {
      ++parity_skipped;
    } else {
      ++parity_checked;
      bool e = !cat.cycles.empty() && edge_cycle_parity(g, cat).all_odd;
      if (g.size() > 0 && c != e) {
        ++mismatch;
        notes.push_back("odd-cycle-count-per-edge test disagrees on " +
                        encode_graph6(g));
      }
    }
    if (c && g.size() > 0) {
      auto census = cycle_decompositions(g, kCensusCap);
      if (!census.complete) {
        ++census_skipped;
      } else {
        ++census_checked;
        if (census.decompositions.size() % 2 != 1) {
          ++mismatch;
          notes.push_back("even decomposition count on " + encode_graph6(g));
        }
      }
    }
  }
  return {mismatch == 0,
          std::to_string(corpus.size()) + " graphs; three euler tests agree, " +
              std::to_string(parity_checked) + " parity checks (" +
              std::to_string(parity_skipped) + " truncated), " +
              std::to_string(census_checked) + " census parities (" +
              std::to_string(census_skipped) + " capped)"};
}

std::pair<bool, std::string> criterion_audit() {
  int checks = 0, bad = 0;
  for (int r = 0; r < 4; ++r) {
    for (const Graph& g : epsilon_corpus(r)) {
      auto rep = structure_audit(g);
      for (const auto& a : rep.audit) {
        ++checks;
        if (a.status == AuditStatus::fail) {
          ++bad;
          notes.push_back("residue " + std::to_string(r) + " graph " +
                          encode_graph6(g) + " fails " + a.id + ": " + a.detail);
        }
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " structural audit checks, " +
                        std::to_string(bad) + " violations"};
}

std::pair<bool, std::string> criterion_parity_validator() {
  int bad = 0;
  for (const auto& [g, l] : emitted) {
    auto res = golomb_parity_check(g, l);
    if (!res.all_even || !res.complete) {
      ++bad;
      notes.push_back("parity validator rejected a labeling of " + encode_graph6(g));
    }
  }
  return {bad == 0 && !emitted.empty(),
          std::to_string(emitted.size()) +
              " graceful labelings emitted above all pass the cycle parity check"};
}

std::pair<bool, std::string> criterion_small_exhaustive() {
  auto corpus = connected_graph_corpus(6);
  if (corpus.size() != 143)
    return {false, "expected 143 connected graphs, got " + std::to_string(corpus.size())};
  int bad = 0;
  for (const Graph& g : corpus) {
    auto out = solve_graceful(g);
    if (out.verdict == Verdict::budget_exceeded) {
      ++bad;
      notes.push_back("budget ran out on " + encode_graph6(g));
      continue;
    }
    if ((out.verdict == Verdict::graceful) != naive_graceful(g)) {
      ++bad;
      notes.push_back("solver disagrees with the reference search on " +
                      encode_graph6(g));
    }
  }
  return {bad == 0, "solver matches the reference search on all 143 connected "
                    "graphs with up to 6 nodes"};
}

std::pair<bool, std::string> criterion_embeddings() {
  int bad = 0;
  Graph k3 = mk("complete(3)");
  std::vector<std::pair<std::string, Graph>> quartet = {
      {"cycle(5)", mk("cycle(5)")},
      {"cycle(6)", mk("cycle(6)")},
      {"two disjoint triangles", disjoint_union(k3, k3)},
      {"complete(5)", mk("complete(5)")},
  };
  for (const auto& [name, g] : quartet) {
    auto rec = embed_graceful_induced(g);
    bool ok = rec.verified && evaluate_labeling(rec.output_graph, rec.output_labeling).graceful;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order() && ok; ++v)
        ok = rec.output_graph.has_edge(u, v) == g.has_edge(u, v);
    for (int v = g.order(); v < rec.output_graph.order() && ok; ++v)
      for (int w : rec.output_graph.neighbors(v))
        if (w >= g.order()) ok = false;
    if (!ok) {
      ++bad;
      notes.push_back(name + ": embedding failed verification");
    } else {
      emitted.emplace_back(rec.output_graph, rec.output_labeling);
    }
  }

  std::mt19937_64 rng(41);
  int closures = 0;
  while (closures < 200) {
    int a = 2 + static_cast<int>(rng() % 4);
    int b = 2 + static_cast<int>(rng() % 4);
    if (a + b > 10) continue;
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (rng() % 2) e.emplace_back(i, a + j);
    Graph g = Graph::build(a + b, e);
    if (!structural_profile(g).connected) continue;
    ++closures;
    Graph closed = euler_bipartite_closure(g);
    auto prof = structural_profile(closed);
    bool ok = prof.euler && prof.bipartition.has_value() &&
              closed.order() <= g.order() + 2;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order() && ok; ++v)
        ok = closed.has_edge(u, v) == g.has_edge(u, v);
    if (!ok) {
      ++bad;
      notes.push_back("closure broke on " + encode_graph6(g));
    }
  }
  return {bad == 0,
          "4 induced graceful hosts verified; 200 random connected bipartite "
          "graphs closed to even-degree bipartite supergraphs"};
}

std::pair<bool, std::string> criterion_evidence() {
  int bad = 0;

  SuiteParams up;
  up.ints["order_max"] = 7;
  auto uni = run_suite("unicyclic", up, 4);
  std::set<std::string> nongraceful_certs;
  for (const auto& rec : uni.records)
    if (rec.verdict != "graceful") nongraceful_certs.insert(certificate(decode_graph6(rec.graph6)));
  std::set<std::string> expect_certs = {certificate(mk("cycle(5)")),
                                        certificate(mk("cycle(6)"))};
  if (uni.summary.inconclusive != 0 || nongraceful_certs != expect_certs) {
    ++bad;
    notes.push_back("unicyclic sweep: expected exactly the 5- and 6-cycles "
                    "nongraceful, saw " + std::to_string(nongraceful_certs.size()));
  }

  SuiteParams tp;
  tp.ints["order_max"] = 9;
  auto trees = run_suite("trees", tp, 4);
  int tree_graceful = 0;
  for (const auto& rec : trees.records)
    if (rec.verdict == "graceful") ++tree_graceful;
  if (trees.records.size() != 95 || tree_graceful != 95) {
    ++bad;
    notes.push_back("tree sweep: " + std::to_string(tree_graceful) + "/" +
                    std::to_string(trees.records.size()) + " graceful, expected 95/95");
  }

  SuiteParams bp;
  bp.ints["order_max"] = 10;
  auto bip = run_suite("bipartite_euler_opt", bp, 4);
  int in_band = 0;
  for (const auto& rec : bip.records)
    if (rec.opt && (*rec.opt == rec.q || *rec.opt == rec.q + 1)) ++in_band;
  if (bip.records.size() != 46 || in_band != 46 || bip.summary.refuted != 0) {
    ++bad;
    notes.push_back("bipartite even-degree sweep: " + std::to_string(in_band) + "/" +
                    std::to_string(bip.records.size()) + " within q..q+1");
  }

  return {bad == 0,
          "unicyclic to 7 nodes nongraceful only at the 5- and 6-cycle; all 95 "
          "trees to 9 nodes graceful; all 46 bipartite even-degree graphs to 10 "
          "nodes have opt within q..q+1"};
}

}  // namespace

int main() {
  run(1, "cycle gracefulness boundary", criterion_cycles);
  run(2, "wheel gracefulness", criterion_wheels);
  run(3, "shared-node triangle windmills", criterion_dutch);
  run(4, "shared-node 4-cycle windmills", criterion_windmill_c4);
  run(5, "nongraceful clique catalog with opt values", criterion_catalog);
  run(6, "complete graph ladder", criterion_complete);
  run(7, "join family (n+4, 4n+2) nongracefulness", criterion_join_family);
  run(8, "euler characterizations agree", criterion_characterizations);
  run(9, "residue class structural audit", criterion_audit);
  run(10, "cycle parity of emitted labelings", criterion_parity_validator);
  run(11, "solver matches reference on small graphs", criterion_small_exhaustive);
  run(12, "induced hosts and bipartite closures", criterion_embeddings);
  run(13, "supporting sweeps", criterion_evidence);
  std::printf(
      "[INFO] out of scope by design: complete graphs on 9 and 11 nodes, "
      "windmills of K4 beyond m = 4, and all asymptotic claims\n");
  std::printf("%d of 13 criteria hold\n", 13 - failures);
  return failures;
}
