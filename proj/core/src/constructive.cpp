#include "gracegraph/constructive.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "gracegraph/families.hpp"

namespace gracegraph {

namespace {

constexpr int kEmbedOrderSpan = 8;  // host orders tried beyond p
constexpr long long kPlantGrowthCap = 1000000;

ConstructionRecord make_record(const std::string& name, const Graph& gin,
                               const Labeling& lin, const Graph& gout,
                               const Labeling& lout) {
  auto ev = evaluate_labeling(gout, lout);
  if (!ev.graceful)
    throw std::logic_error("construction '" + name +
                           "' produced a non-graceful labeling");
  return ConstructionRecord{name, gin, lin, gout, lout, true};
}

void require_graceful(const Graph& g, const Labeling& l,
                      const std::string& who) {
  auto ev = evaluate_labeling(g, l);
  if (!ev.graceful) fail_input(who + " requires a graceful input labeling");
}

int zero_node(const Labeling& l) {
  for (int v = 0; v < (int)l.labels.size(); ++v)
    if (l.labels[v] == 0) return v;
  fail_input("labeling has no 0-labeled node");
}

// k pendants at the 0-labeled node, labeled q+1..q+k in attach order.
void star_step(Graph& g, Labeling& l, int k) {
  int z = zero_node(l);
  int p = g.order(), q = g.size();
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(z, p + i);
    l.labels.push_back(q + 1 + i);
  }
  g = Graph::build(p + k, edges);
}

void verify_induced(const Graph& g, const Graph& host) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (host.has_edge(u, v) != g.has_edge(u, v))
        throw std::logic_error("host does not contain the input induced");
}

std::vector<int> missing_values(const Graph& g, const std::vector<int>& labels,
                                int max_label) {
  std::vector<char> seen(max_label + 1, 0);
  for (auto [a, b] : g.edges()) {
    int d = labels[a] - labels[b];
    seen[d < 0 ? -d : d] = 1;
  }
  std::vector<int> out;
  for (int v = 1; v <= max_label; ++v)
    if (!seen[v]) out.push_back(v);
  return out;
}

}  // namespace

Labeling complement_labeling(const Graph& g, const Labeling& l) {
  require_graceful(g, l, "complement");
  return complement(l, g.size());
}

ConstructionRecord attach_star_at_zero(const Graph& g, const Labeling& l,
                                       int k) {
  require_graceful(g, l, "star attachment");
  if (k < 1) fail_input("star attachment needs at least one pendant");
  Graph out = g;
  Labeling lab = l;
  star_step(out, lab, k);
  return make_record("attach_star_at_zero", g, l, out, lab);
}

ConstructionRecord plant_caterpillar_graceful(
    const Graph& g, const Labeling& l, const std::vector<int>& leaf_counts) {
  require_graceful(g, l, "caterpillar planting");
  if (leaf_counts.empty())
    fail_input("caterpillar spec needs at least the root spine node");
  long long total = (long long)leaf_counts.size() - 1;
  for (int c : leaf_counts) {
    if (c < 0) fail_input("caterpillar leaf counts must be nonnegative");
    total += c;
  }
  if (total > kPlantGrowthCap) fail_input("caterpillar spec is too large");

  Graph cur = g;
  Labeling lab = l;
  int m = (int)leaf_counts.size() - 1;
  for (int i = 0; i <= m; ++i) {
    int k = leaf_counts[i] + (i < m ? 1 : 0);  // next spine hop goes last
    if (k > 0) star_step(cur, lab, k);
    if (i < m) lab = complement(lab, cur.size());
  }
  return make_record("plant_caterpillar_graceful", g, l, cur, lab);
}

TreeEdgeSurvey tree_plus_edge_survey(const Graph& t, const SolveOptions& opts) {
  if (!is_tree(t)) fail_input("tree+edge survey requires a tree");
  if (t.order() > kTreeEnumerationCap)
    fail_input("tree+edge survey caps the order at " +
               std::to_string(kTreeEnumerationCap));

  TreeEdgeSurvey out;
  int p = t.order(), q = t.size();
  if (q == 0) return out;

  std::vector<Edge> nonedges;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v)
      if (!t.has_edge(u, v)) nonedges.emplace_back(u, v);

  std::map<Edge, Verdict> decided;
  for (Edge uv : nonedges) {
    std::vector<Edge> edges = t.edges();
    edges.push_back(uv);
    auto res = solve_graceful(Graph::build(p, edges), opts);
    decided[uv] = res.verdict;
    if (res.verdict == Verdict::nongraceful_exhausted ||
        res.verdict == Verdict::nongraceful_rosa_golomb)
      out.nongraceful_nonedges.push_back(uv);
    if (res.verdict == Verdict::budget_exceeded) out.complete = false;
  }

  auto en = enumerate_graceful(t, EnumMode::raw, opts);
  out.complete = out.complete && en.complete;
  for (const Labeling& lab : en.labelings) {
    for (Edge uv : nonedges) {
      TreeEdgeRecord rec;
      rec.labeling = lab;
      rec.nonedge = uv;
      int a = lab.labels[uv.first], b = lab.labels[uv.second];
      rec.extreme_pair = std::minmax(a, b) == std::minmax(0, p - 1);
      rec.verdict = decided[uv];
      if (rec.extreme_pair && (rec.verdict == Verdict::nongraceful_exhausted ||
                               rec.verdict == Verdict::nongraceful_rosa_golomb))
        ++out.extreme_nongraceful;
      out.records.push_back(std::move(rec));
    }
  }
  return out;
}

ConstructionRecord embed_graceful_induced(const Graph& g,
                                          const SolveOptions& opts) {
  auto base = optimal_labeling(g, opts);
  if (base.verdict == Verdict::budget_exceeded)
    fail_budget("embedding budget exhausted while bounding the labeling");
  long long spent = base.nodes_expanded;

  for (int L = *base.opt; L <= kMaxSolvableSize; ++L) {
    SolveOptions sub = opts;
    sub.budget = opts.budget - spent;
    if (sub.budget <= 0) fail_budget("embedding budget exhausted");
    auto seeds = enumerate_bounded_labelings(g, L, sub);
    spent += seeds.nodes_expanded;
    if (!seeds.complete) fail_budget("embedding budget exhausted");

    for (const Labeling& seed : seeds.labelings) {
      std::vector<int> missing = missing_values(g, seed.labels, L);
      std::sort(missing.rbegin(), missing.rend());

      std::vector<int> labels = seed.labels;
      std::vector<Edge> edges = g.edges();
      std::vector<char> used(L + 1, 0);
      for (int x : labels) used[x] = 1;

      long long attempts = 0;
      bool starved = false;
      auto realize = [&](auto&& self, size_t idx) -> bool {
        if (idx == missing.size()) return true;
        int v = missing[idx];
        int host = (int)labels.size();
        for (int w = 0; w < host && !starved; ++w) {
          for (int sign : {1, -1}) {
            if (++attempts + spent > opts.budget) {
              starved = true;
              return false;
            }
            int cand = labels[w] + sign * v;
            if (cand < 0 || cand > L || used[cand]) continue;
            used[cand] = 1;
            labels.push_back(cand);
            edges.emplace_back(w, host);
            if (self(self, idx + 1)) return true;
            edges.pop_back();
            labels.pop_back();
            used[cand] = 0;
          }
        }
        return false;
      };
      bool ok = realize(realize, 0);
      spent += attempts;
      if (starved) fail_budget("embedding budget exhausted");
      if (!ok) continue;

      Graph host = Graph::build((int)labels.size(), edges);
      verify_induced(g, host);
      return make_record("embed_graceful_induced", g, seed, host,
                         Labeling{labels});
    }
  }
  throw error(error::kind::unsupported,
              "embedding exceeds the supported label range");
}

OptimalEmbedding optimal_graceful_embedding(const Graph& g,
                                            const SolveOptions& opts) {
  int p = g.order(), q = g.size();
  if (p == 0) fail_input("embedding needs at least one node");
  long long spent = 0;

  for (int n = p; n <= p + kEmbedOrderSpan && n - 1 <= kMaxSolvableSize; ++n) {
    int qlo = std::max(q, n - 1);
    int qhi = n == p ? q : std::min(kMaxSolvableSize, n * (n - 1) / 2);
    for (int Q = qlo; Q <= qhi; ++Q) {
      SolveOptions sub = opts;
      sub.budget = opts.budget - spent;
      if (sub.budget <= 0)
        fail_budget("embedding budget exhausted; no host below order " +
                    std::to_string(n));
      auto seeds = enumerate_bounded_labelings(g, Q, sub);
      spent += seeds.nodes_expanded;
      if (!seeds.complete)
        fail_budget("embedding budget exhausted; no host below order " +
                    std::to_string(n));

      for (const Labeling& seed : seeds.labelings) {
        std::vector<int> missing = missing_values(g, seed.labels, Q);
        std::vector<int> free;
        {
          std::vector<char> used(Q + 1, 0);
          for (int x : seed.labels) used[x] = 1;
          for (int x = 0; x <= Q; ++x)
            if (!used[x]) free.push_back(x);
        }
        int extra = n - p;

        std::vector<int> labels = seed.labels;
        bool starved = false;
        std::vector<int> chosen;
        auto covered = [&]() {
          for (int v : missing) {
            bool hit = false;
            for (int j = p; j < (int)labels.size() && !hit; ++j)
              for (int i = 0; i < j && !hit; ++i) {
                int d = labels[i] - labels[j];
                hit = (d < 0 ? -d : d) == v;
              }
            if (!hit) return false;
          }
          return true;
        };
        auto pick = [&](auto&& self, size_t from, int left) -> bool {
          if (++spent > opts.budget) {
            starved = true;
            return false;
          }
          if (left == 0) return covered();
          for (size_t i = from; i + left <= free.size() && !starved; ++i) {
            labels.push_back(free[i]);
            if (self(self, i + 1, left - 1)) return true;
            labels.pop_back();
          }
          return false;
        };
        bool ok = pick(pick, 0, extra);
        if (starved)
          fail_budget("embedding budget exhausted; no host below order " +
                      std::to_string(n));
        if (!ok) continue;

        std::vector<Edge> edges = g.edges();
        for (int v : missing) {
          bool placed = false;
          for (int j = p; j < n && !placed; ++j)
            for (int i = 0; i < j && !placed; ++i) {
              int d = labels[i] - labels[j];
              if ((d < 0 ? -d : d) == v) {
                edges.emplace_back(i, j);
                placed = true;
              }
            }
          if (!placed)
            throw std::logic_error("coverage check admitted an unrealizable value");
        }
        Graph host = Graph::build(n, edges);
        verify_induced(g, host);

        OptimalEmbedding out;
        out.record = make_record("optimal_graceful_embedding", g, seed, host,
                                 Labeling{labels});
        out.minimal_order = n;
        out.minimal_proven = true;
        out.host_connected = is_connected(host);
        return out;
      }
    }
  }
  throw error(error::kind::unsupported,
              "no graceful host within the supported order span");
}

Graph euler_bipartite_closure(const Graph& g) {
  auto prof = structural_profile(g);
  if (!prof.bipartition) fail_input("closure requires a bipartite graph");
  if (!prof.connected) fail_input("closure requires a connected graph");
  if (prof.euler) return g;

  const auto& [side_a, side_b] = *prof.bipartition;
  std::vector<int> odd_a, odd_b;
  for (int v : side_a)
    if (g.degree(v) % 2) odd_a.push_back(v);
  for (int v : side_b)
    if (g.degree(v) % 2) odd_b.push_back(v);

  std::vector<Edge> edges = g.edges();
  int next = g.order();
  int mate_a = -1, mate_b = -1;  // new node adjacent to odd_a / odd_b
  if (!odd_a.empty()) {
    mate_a = next++;
    for (int v : odd_a) edges.emplace_back(v, mate_a);
  }
  if (!odd_b.empty()) {
    mate_b = next++;
    for (int v : odd_b) edges.emplace_back(v, mate_b);
  }
  if (odd_a.size() % 2 == 1) edges.emplace_back(mate_a, mate_b);

  Graph out = Graph::build(next, edges);
  auto check = structural_profile(out);
  if (!check.euler || !check.bipartition)
    throw std::logic_error("closure failed to produce a bipartite Euler graph");
  return out;
}

}  // namespace gracegraph
